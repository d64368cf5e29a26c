#include "latroots.h"

#include <cstdio>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "latroots/enumeration.hpp"
#include "latroots/inequality.hpp"
#include "latroots/lattice.hpp"
#include "latroots/orthocount.hpp"
#include "latroots/weights.hpp"
#include "latroots/weyl.hpp"

#ifndef LATROOTS_VERSION
#define LATROOTS_VERSION "0.0.0"
#endif

#define LATR_API extern "C" __attribute__((visibility("default")))

using namespace latroots;

struct latr_lattice {
  const Lattice* lat;
};

struct latr_table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> meta;

  void add_meta(std::string key, std::string value) {
    meta.emplace_back(std::move(key), std::move(value));
  }
  void stamp(const std::string& command) {
    meta.insert(meta.begin(), {"tool", std::string("latroots ") + LATROOTS_VERSION});
    meta.insert(meta.begin() + 1, {"command", command});
  }
};

namespace {

thread_local std::string t_last_error;

latr_status fail(latr_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

template <class Fn>
latr_status guarded(Fn&& fn) {
  try {
    t_last_error.clear();
    return fn();
  } catch (const UsageError& e) {
    return fail(LATR_USAGE_ERROR, e.what());
  } catch (const CeilingExceeded& e) {
    return fail(LATR_CEILING_EXCEEDED, e.what());
  } catch (const VerifyError& e) {
    return fail(LATR_VERIFY_FAILED, e.what());
  } catch (const InternalError& e) {
    return fail(LATR_INTERNAL_ERROR, e.what());
  } catch (const std::exception& e) {
    return fail(LATR_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(LATR_INTERNAL_ERROR, "unknown error");
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

std::string join_i64(const std::vector<std::int64_t>& values, char sep) {
  std::string s;
  for (const auto v : values) {
    if (!s.empty()) s.push_back(sep);
    s += std::to_string(v);
  }
  return s;
}

latr_table* new_table(std::vector<std::string> columns) {
  auto* t = new latr_table;
  t->columns = std::move(columns);
  return t;
}

}  // namespace

LATR_API const char* latr_version(void) { return LATROOTS_VERSION; }

LATR_API const char* latr_status_name(latr_status status) {
  switch (status) {
    case LATR_OK: return "ok";
    case LATR_USAGE_ERROR: return "usage-error";
    case LATR_INTERNAL_ERROR: return "internal-error";
    case LATR_VERIFY_FAILED: return "verify-failed";
    case LATR_CEILING_EXCEEDED: return "ceiling-exceeded";
    case LATR_BUFFER_TOO_SMALL: return "buffer-too-small";
  }
  return "unknown";
}

LATR_API const char* latr_last_error(void) { return t_last_error.c_str(); }

LATR_API latr_status latr_lattice_open(const char* name, latr_lattice** out) {
  return guarded([&] {
    require(name != nullptr && out != nullptr, "lattice_open: null argument");
    const PresetName preset = parse_preset_name(name);
    *out = new latr_lattice{&lattice(preset)};
    return LATR_OK;
  });
}

LATR_API void latr_lattice_close(latr_lattice* lat) { delete lat; }

LATR_API const char* latr_lattice_name(const latr_lattice* lat) {
  return lat ? lat->lat->label.c_str() : nullptr;
}

LATR_API int latr_lattice_rank(const latr_lattice* lat) {
  return lat ? lat->lat->ambient_rank : 0;
}

LATR_API long long latr_lattice_root_count(const latr_lattice* lat) {
  return lat ? static_cast<long long>(lat->lat->roots.size()) : 0;
}

LATR_API void latr_table_free(latr_table* table) { delete table; }

LATR_API long long latr_table_rows(const latr_table* table) {
  return table ? static_cast<long long>(table->rows.size()) : 0;
}

LATR_API int latr_table_cols(const latr_table* table) {
  return table ? static_cast<int>(table->columns.size()) : 0;
}

LATR_API const char* latr_table_col_name(const latr_table* table, int col) {
  if (!table || col < 0 || col >= static_cast<int>(table->columns.size())) return nullptr;
  return table->columns[static_cast<std::size_t>(col)].c_str();
}

LATR_API const char* latr_table_cell(const latr_table* table, long long row, int col) {
  if (!table || row < 0 || row >= static_cast<long long>(table->rows.size())) return nullptr;
  const auto& r = table->rows[static_cast<std::size_t>(row)];
  if (col < 0 || col >= static_cast<int>(r.size())) return nullptr;
  return r[static_cast<std::size_t>(col)].c_str();
}

LATR_API latr_status latr_table_cell_i64(const latr_table* table, long long row, int col,
                                         long long* out) {
  return guarded([&] {
    require(out != nullptr, "cell_i64: null output");
    const char* cell = latr_table_cell(table, row, col);
    require(cell != nullptr, "cell_i64: cell out of range");
    char* end = nullptr;
    const long long v = std::strtoll(cell, &end, 10);
    require(end != cell && *end == '\0',
            std::string("cell_i64: cell '") + cell + "' is not an integer");
    *out = v;
    return LATR_OK;
  });
}

LATR_API int latr_table_meta_count(const latr_table* table) {
  return table ? static_cast<int>(table->meta.size()) : 0;
}

LATR_API const char* latr_table_meta_key(const latr_table* table, int index) {
  if (!table || index < 0 || index >= static_cast<int>(table->meta.size())) return nullptr;
  return table->meta[static_cast<std::size_t>(index)].first.c_str();
}

LATR_API const char* latr_table_meta_value(const latr_table* table, int index) {
  if (!table || index < 0 || index >= static_cast<int>(table->meta.size())) return nullptr;
  return table->meta[static_cast<std::size_t>(index)].second.c_str();
}

LATR_API latr_status latr_roots_table(const latr_lattice* lat, int list_vectors,
                                      latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "roots_table: null argument");
    latr_table* t;
    if (list_vectors) {
      t = new_table({"vector", "human"});
      for (const Vec& r : lat->lat->roots) t->rows.push_back({to_machine(r), to_human(r)});
    } else {
      t = new_table({"lattice", "rank", "roots", "positive-roots"});
      t->rows.push_back({lat->lat->label, std::to_string(lat->lat->ambient_rank),
                         std::to_string(lat->lat->roots.size()),
                         std::to_string(lat->lat->positive_roots.size())});
    }
    t->add_meta("lattice", lat->lat->label);
    t->stamp("roots");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_enumerate_normal_forms(const latr_lattice* lat, long long d,
                                                 const long long* coord8_lo,
                                                 const long long* coord8_hi,
                                                 latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "enumerate: null argument");
    require(lat->lat->name == PresetName::E8, "enumerate: normal forms are defined for E8 only");
    require((coord8_lo == nullptr) == (coord8_hi == nullptr),
            "enumerate: coordinate-8 range needs both endpoints");
    EnumerationTask task;
    task.d = d;
    if (coord8_lo) task.coord8_doubled_range = {{*coord8_lo, *coord8_hi}};
    latr_table* t = new_table({"vector"});
    enumerate_normal_forms(task, [&](const Vec& v) {
      t->rows.push_back({to_machine(v)});
      return true;
    });
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d", std::to_string(d));
    if (coord8_lo) {
      t->add_meta("coord8-doubled-min", std::to_string(*coord8_lo));
      t->add_meta("coord8-doubled-max", std::to_string(*coord8_hi));
    }
    t->add_meta("count", std::to_string(t->rows.size()));
    t->stamp("enumerate");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_representation_number(const latr_lattice* lat, long long d,
                                                long long* out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "representation_number: null argument");
    *out = representation_number(lat->lat->name, d);
    return LATR_OK;
  });
}

LATR_API latr_status latr_repcount_table(const latr_lattice* lat, long long d_min,
                                         long long d_max, latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "repcount: null argument");
    require(d_min >= 0 && d_max >= d_min, "repcount: need 0 <= d_min <= d_max");
    latr_table* t = new_table({"d", "count"});
    for (long long d = d_min; d <= d_max; ++d)
      t->rows.push_back(
          {std::to_string(d), std::to_string(representation_number(lat->lat->name, d))});
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->stamp("repcount");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_bound_table(long long d_min, long long d_max, latr_table** out) {
  return guarded([&] {
    require(out != nullptr, "bound: null argument");
    require(d_min >= 1 && d_max >= d_min, "bound: need 1 <= d_min <= d_max");
    latr_table* t = new_table({"d", "raw", "refined"});
    for (long long d = d_min; d <= d_max; ++d) {
      const CandidateBound b = candidate_bound(d);
      t->rows.push_back({std::to_string(d), u128_to_string(b.raw), u128_to_string(b.refined)});
    }
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->stamp("bound");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_count_orthogonal_roots(const latr_lattice* lat,
                                                 const char* vector_text, long long cap,
                                                 long long* out_m, int* out_exceeded) {
  return guarded([&] {
    require(lat != nullptr && vector_text != nullptr && out_m != nullptr,
            "count_orthogonal_roots: null argument");
    const Vec v = parse_vec(vector_text);
    const OrthoCount oc = count_orthogonal_roots(*lat->lat, v, cap);
    *out_m = oc.count;
    if (out_exceeded) *out_exceeded = oc.exceeded ? 1 : 0;
    return LATR_OK;
  });
}

LATR_API latr_status latr_root_type(const latr_lattice* lat, long long d_min, long long d_max,
                                    int with_m01, int threads, latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "root_type: null argument");
    require(d_min >= 0 && d_max >= d_min, "root_type: need 0 <= d_min <= d_max");
    std::vector<std::string> cols = {"d", "members"};
    if (with_m01) {
      cols.push_back("m0");
      cols.push_back("m1");
    }
    latr_table* t = new_table(cols);
    t->rows = parallel_map<std::vector<std::string>>(
        threads, d_max - d_min + 1, [&](std::int64_t i) {
          const std::int64_t d = d_min + i;
          const RootType rt = root_type(lat->lat->name, d);
          std::vector<std::string> row = {std::to_string(d), join_i64(rt.members, ',')};
          if (with_m01) {
            if (rt.members.empty()) {
              row.push_back("-");
              row.push_back("-");
            } else {
              row.push_back(std::to_string(rt.members.front()));
              std::string m1 = "-";
              for (const auto m : rt.members)
                if (m > 0) {
                  m1 = std::to_string(m);
                  break;
                }
              row.push_back(m1);
            }
          }
          return row;
        });
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->stamp("root-type");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_scan(const latr_lattice* lat, long long d_min, long long d_max,
                               long long m_min, long long m_max, int threads,
                               latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "scan: null argument");
    const auto witnesses = scan_range(lat->lat->name, d_min, d_max, m_min, m_max, threads);
    latr_table* t = new_table({"d", "m", "weight", "decomposition", "witness"});
    for (const WitnessRecord& w : witnesses) {
      const auto q = quasi_pullback_weight(w.m);
      t->rows.push_back({std::to_string(w.d), std::to_string(w.m), std::to_string(q.weight),
                         decomposition_to_string(w.decomposition), to_machine(w.l)});
    }
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->add_meta("m-min", std::to_string(m_min));
    t->add_meta("m-max", std::to_string(m_max));
    t->stamp("scan");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_qpq(const latr_lattice* lat, long long p, long long q,
                              long long d_max, int threads, latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "qpq: null argument");
    const auto ds = answer_qpq(lat->lat->name, p, q, d_max, threads);
    latr_table* t = new_table({"d"});
    for (const auto d : ds) t->rows.push_back({std::to_string(d)});
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("p", std::to_string(p));
    t->add_meta("q", std::to_string(q));
    t->add_meta("d-max", std::to_string(d_max));
    t->stamp("qpq");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_smallest_d(const latr_lattice* lat, long long m,
                                     long long d_ceiling, latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "smallest_d: null argument");
    const SmallestD r = smallest_d_for(lat->lat->name, m, d_ceiling);
    latr_table* t = new_table({"m", "d", "status"});
    t->rows.push_back({std::to_string(m), r.d ? std::to_string(*r.d) : "-",
                       r.d ? "found" : "not-found-below-" + std::to_string(r.ceiling)});
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("m", std::to_string(m));
    t->add_meta("d-ceiling", std::to_string(d_ceiling));
    t->stamp("smallest-d");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_orbits(const latr_lattice* lat, long long d_min, long long d_max,
                                 long long m, int threads, latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "orbits: null argument");
    require(lat->lat->name == PresetName::E8, "orbits: W(E8)-orbit counting is E8 only");
    require(d_min >= 1 && d_max >= d_min, "orbits: need 1 <= d_min <= d_max");
    const auto reports = parallel_map<OrbitReport>(
        threads, d_max - d_min + 1, [&](std::int64_t i) { return count_orbits(d_min + i, m); });
    latr_table* t = new_table({"d", "m", "nu", "representatives"});
    for (const OrbitReport& rep : reports) {
      std::string reps;
      for (const Vec& v : rep.representatives) {
        if (!reps.empty()) reps.push_back(';');
        reps += to_machine(v);
      }
      if (reps.empty()) reps = "-";
      t->rows.push_back({std::to_string(rep.d), std::to_string(rep.m), std::to_string(rep.nu),
                         std::move(reps)});
    }
    const Transversal& tr = transversal();
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->add_meta("m", std::to_string(m));
    t->add_meta("v0", to_machine(tr.v0));
    char checksum[32];
    std::snprintf(checksum, sizeof(checksum), "%016llx",
                  static_cast<unsigned long long>(tr.checksum));
    t->add_meta("transversal-fnv64", checksum);
    t->stamp("orbits");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_verify_appendix(latr_table** out) {
  return guarded([&] {
    require(out != nullptr, "verify_appendix: null argument");
    const AppendixReport report = verify_appendix();
    latr_table* t = new_table({"name", "norm", "m", "decomposition", "status"});
    for (const AppendixRow& row : report.rows) {
      std::string status = row.pass ? "PASS" : "FAIL: " + row.detail;
      t->rows.push_back({row.name, std::to_string(row.norm), std::to_string(row.m),
                         row.decomposition, std::move(status)});
    }
    t->add_meta("checks", "norm, orthogonal-root count, decomposition, support argument");
    t->stamp("verify-appendix");
    *out = t;
    if (!report.all_pass) return fail(LATR_VERIFY_FAILED, "appendix verification failed");
    return LATR_OK;
  });
}

LATR_API latr_status latr_inequality(long long d_min, long long d_max, int check_witnesses,
                                     int threads, latr_table** out) {
  return guarded([&] {
    require(out != nullptr, "inequality: null argument");
    std::vector<std::string> cols = {"d", "n_e6", "n_d6", "n_e7", "lhs", "rhs", "holds"};
    if (check_witnesses) {
      cols.push_back("witness_m");
      cols.push_back("witness");
    }
    latr_table* t = new_table(cols);
    bool ok = true;
    auto push = [&](const InequalityRow& row, const ImplicationRow* imp) {
      std::vector<std::string> cells = {std::to_string(row.d),    std::to_string(row.n_e6),
                                        std::to_string(row.n_d6), std::to_string(row.n_e7),
                                        std::to_string(row.lhs),  std::to_string(row.rhs),
                                        row.holds ? "1" : "0"};
      if (check_witnesses) {
        if (imp && imp->witness) {
          cells.push_back(std::to_string(*imp->witness_m));
          cells.push_back(to_machine(*imp->witness));
        } else {
          cells.push_back("-");
          cells.push_back("-");
        }
      }
      t->rows.push_back(std::move(cells));
    };
    if (check_witnesses) {
      const ImplicationReport report = check_implication(d_min, d_max, threads);
      ok = report.ok;
      for (const ImplicationRow& row : report.rows) push(row.inequality, &row);
    } else {
      for (const InequalityRow& row : inequality_table(d_min, d_max, threads)) push(row, nullptr);
    }
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->add_meta("check-witnesses", check_witnesses ? "1" : "0");
    t->stamp("inequality");
    *out = t;
    if (!ok)
      return fail(LATR_VERIFY_FAILED,
                  "a failing d produced no witness with 2 <= m <= 12 (implementation bug)");
    return LATR_OK;
  });
}

LATR_API latr_status latr_random_search(const latr_lattice* lat, long long d_min,
                                        long long d_max, long long m_min, long long m_max,
                                        long long trials, unsigned long long seed,
                                        latr_table** out) {
  return guarded([&] {
    require(lat != nullptr && out != nullptr, "random_search: null argument");
    require(lat->lat->name == PresetName::E8, "random-search: sampling is E8 only");
    const auto found = randomized_search(d_min, d_max, m_min, m_max, trials, seed);
    latr_table* t = new_table({"d", "m", "witness"});
    for (const RandomWitness& w : found)
      t->rows.push_back({std::to_string(w.d), std::to_string(w.m), to_machine(w.l)});
    t->add_meta("lattice", lat->lat->label);
    t->add_meta("d-min", std::to_string(d_min));
    t->add_meta("d-max", std::to_string(d_max));
    t->add_meta("m-min", std::to_string(m_min));
    t->add_meta("m-max", std::to_string(m_max));
    t->add_meta("trials", std::to_string(trials));
    t->add_meta("seed", std::to_string(seed));
    t->add_meta("prng", "mt19937_64 with rejection sampling");
    t->stamp("random-search");
    *out = t;
    return LATR_OK;
  });
}

LATR_API latr_status latr_quasi_pullback_weight(long long m, long long* out_weight,
                                                int* out_cusp_form, int* out_general_type,
                                                int* out_canonical_weight) {
  return guarded([&] {
    require(out_weight != nullptr, "quasi_pullback_weight: null argument");
    const QuasiPullbackWeight w = quasi_pullback_weight(m);
    *out_weight = w.weight;
    if (out_cusp_form) *out_cusp_form = w.cusp_form ? 1 : 0;
    if (out_general_type) *out_general_type = w.general_type_trigger ? 1 : 0;
    if (out_canonical_weight) *out_canonical_weight = w.canonical_weight ? 1 : 0;
    return LATR_OK;
  });
}
