/*
 * latroots - exact root-lattice combinatorics (E8, E7, E6, D6, A1, A2).
 *
 * C API of the shared library.  All computations are exact integer
 * arithmetic; results come back either as scalars or as immutable tables
 * of strings with ordered metadata, so any language with a C FFI can
 * consume them.  Handles are opaque; every function returns a status code
 * and never throws across the boundary.
 *
 * Thread safety: lattice handles and tables are immutable after creation
 * and may be shared freely; the last-error message is thread-local.
 */
#ifndef LATROOTS_H
#define LATROOTS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum latr_status {
  LATR_OK = 0,
  LATR_USAGE_ERROR = 1,      /* unsupported input or bad arguments */
  LATR_INTERNAL_ERROR = 2,   /* a library invariant was violated */
  LATR_VERIFY_FAILED = 3,    /* a verification run found failures */
  LATR_CEILING_EXCEEDED = 4, /* configured work ceiling refused the job */
  LATR_BUFFER_TOO_SMALL = 5
} latr_status;

typedef struct latr_lattice latr_lattice;
typedef struct latr_table latr_table;

const char* latr_version(void);
const char* latr_status_name(latr_status status);
/* Message for the most recent failing call on this thread ("" if none). */
const char* latr_last_error(void);

/* ---- lattice presets ------------------------------------------------- */

/* name: one of "e8", "e7", "e6", "d6", "a1", "a2" (case-insensitive). */
latr_status latr_lattice_open(const char* name, latr_lattice** out);
void latr_lattice_close(latr_lattice* lattice);
const char* latr_lattice_name(const latr_lattice* lattice);
int latr_lattice_rank(const latr_lattice* lattice);
long long latr_lattice_root_count(const latr_lattice* lattice);

/* ---- tables ----------------------------------------------------------- */

void latr_table_free(latr_table* table);
long long latr_table_rows(const latr_table* table);
int latr_table_cols(const latr_table* table);
const char* latr_table_col_name(const latr_table* table, int col);
/* NULL when out of range; the string lives as long as the table. */
const char* latr_table_cell(const latr_table* table, long long row, int col);
latr_status latr_table_cell_i64(const latr_table* table, long long row, int col,
                                long long* out);
int latr_table_meta_count(const latr_table* table);
const char* latr_table_meta_key(const latr_table* table, int index);
const char* latr_table_meta_value(const latr_table* table, int index);

/* ---- computations ------------------------------------------------------
 * Vectors in cells use the machine text format "d2:c1,...,cn" (doubled
 * coordinates); parsers also accept the human format "1/2 -1/2 1 ...".
 * threads <= 0 means the LATROOTS_THREADS environment default (else 1).
 * ----------------------------------------------------------------------- */

/* Root system summary; with list_vectors != 0, one row per root instead. */
latr_status latr_roots_table(const latr_lattice* lattice, int list_vectors,
                             latr_table** out);

/* Normal forms of norm 2d in E8 (columns: vector).  coord8_lo/hi optionally
 * restrict the doubled value of coordinate 8 for work splitting. */
latr_status latr_enumerate_normal_forms(const latr_lattice* lattice, long long d,
                                        const long long* coord8_lo,
                                        const long long* coord8_hi, latr_table** out);

/* N_L(2d). */
latr_status latr_representation_number(const latr_lattice* lattice, long long d,
                                       long long* out);
latr_status latr_repcount_table(const latr_lattice* lattice, long long d_min,
                                long long d_max, latr_table** out);

/* (2*floor(2*sqrt(2d))+1)^8 and its parity refinement, as decimal strings. */
latr_status latr_bound_table(long long d_min, long long d_max, latr_table** out);

/* Number of roots orthogonal to the given vector; with cap >= 0 the scan
 * stops once the count would pass the cap and sets *out_exceeded. */
latr_status latr_count_orthogonal_roots(const latr_lattice* lattice,
                                        const char* vector_text, long long cap,
                                        long long* out_m, int* out_exceeded);

/* Root types P(L, d) for each d in range (columns: d, members and, when
 * with_m01 != 0, m0 and m1). */
latr_status latr_root_type(const latr_lattice* lattice, long long d_min, long long d_max,
                           int with_m01, int threads, latr_table** out);

/* One witness per attained m in [m_min, m_max] per d (columns: d, m,
 * weight, decomposition, witness). */
latr_status latr_scan(const latr_lattice* lattice, long long d_min, long long d_max,
                      long long m_min, long long m_max, int threads, latr_table** out);

/* d <= d_max whose root type avoids [2q, 2p). */
latr_status latr_qpq(const latr_lattice* lattice, long long p, long long q,
                     long long d_max, int threads, latr_table** out);

/* Smallest d with m1(d) <= m below the ceiling (columns: m, d, status). */
latr_status latr_smallest_d(const latr_lattice* lattice, long long m,
                            long long d_ceiling, latr_table** out);

/* W(E8)-orbit counts nu_m(d) with representatives (E8 only); metadata
 * carries the base vector and transversal checksum. */
latr_status latr_orbits(const latr_lattice* lattice, long long d_min, long long d_max,
                        long long m, int threads, latr_table** out);

/* The five weight-vector constructions; returns LATR_VERIFY_FAILED (with
 * the table still filled in) when any check fails. */
latr_status latr_verify_appendix(latr_table** out);

/* 28 N_E6 + 63 N_D6 >= 4 N_E7 per d; with check_witnesses != 0 each failing
 * d must produce a witness with 2 <= m <= 12, else LATR_VERIFY_FAILED. */
latr_status latr_inequality(long long d_min, long long d_max, int check_witnesses,
                            int threads, latr_table** out);

/* Randomized search over E8 (columns: d, m, witness); deterministic for a
 * fixed seed. */
latr_status latr_random_search(const latr_lattice* lattice, long long d_min,
                               long long d_max, long long m_min, long long m_max,
                               long long trials, unsigned long long seed,
                               latr_table** out);

/* Quasi-pullback weight 12 + m/2 and classification flags. */
latr_status latr_quasi_pullback_weight(long long m, long long* out_weight,
                                       int* out_cusp_form, int* out_general_type,
                                       int* out_canonical_weight);

#ifdef __cplusplus
}
#endif

#endif /* LATROOTS_H */
