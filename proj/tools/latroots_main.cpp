// latroots CLI: a thin client of the shared-library C API.  Every
// subcommand prints a table as TSV with '#'-prefixed metadata lines, so
// identical invocations produce byte-identical output.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "latroots.h"

namespace {

struct CommonOpts {
  std::string lattice = "e8";
  std::string format = "tsv";  // tsv | lines
  std::string out_path;
  int threads = 0;  // 0: LATROOTS_THREADS or 1
};

int exit_code_for(latr_status status) {
  switch (status) {
    case LATR_OK: return 0;
    case LATR_USAGE_ERROR:
    case LATR_CEILING_EXCEEDED:
    case LATR_BUFFER_TOO_SMALL: return 1;
    case LATR_INTERNAL_ERROR: return 2;
    case LATR_VERIFY_FAILED: return 3;
  }
  return 2;
}

int report_error(latr_status status) {
  std::cerr << "latroots: error (" << latr_status_name(status) << "): " << latr_last_error()
            << "\n";
  return exit_code_for(status);
}

void render(const latr_table* table, const CommonOpts& opts, std::ostream& os) {
  if (opts.format == "tsv") {
    for (int i = 0; i < latr_table_meta_count(table); ++i)
      os << "# " << latr_table_meta_key(table, i) << ": " << latr_table_meta_value(table, i)
         << "\n";
    os << "#";
    for (int c = 0; c < latr_table_cols(table); ++c)
      os << (c ? "\t" : " ") << latr_table_col_name(table, c);
    os << "\n";
  }
  for (long long r = 0; r < latr_table_rows(table); ++r) {
    for (int c = 0; c < latr_table_cols(table); ++c) {
      if (c) os << "\t";
      os << latr_table_cell(table, r, c);
    }
    os << "\n";
  }
}

int emit(latr_status status, latr_table* table, const CommonOpts& opts) {
  std::unique_ptr<latr_table, void (*)(latr_table*)> guard(table, latr_table_free);
  if (status != LATR_OK && table == nullptr) return report_error(status);
  if (!opts.out_path.empty()) {
    std::ofstream file(opts.out_path, std::ios::binary);
    if (!file) {
      std::cerr << "latroots: cannot open output file '" << opts.out_path << "'\n";
      return 1;
    }
    render(table, opts, file);
  } else {
    render(table, opts, std::cout);
  }
  if (status != LATR_OK) {
    std::cerr << "latroots: " << latr_status_name(status) << ": " << latr_last_error() << "\n";
    return exit_code_for(status);
  }
  return 0;
}

using LatticeHandle = std::unique_ptr<latr_lattice, void (*)(latr_lattice*)>;

LatticeHandle open_lattice(const std::string& name, int& error) {
  latr_lattice* lat = nullptr;
  const latr_status status = latr_lattice_open(name.c_str(), &lat);
  if (status != LATR_OK) error = report_error(status);
  return {lat, latr_lattice_close};
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_lattice = true) {
  if (with_lattice)
    cmd->add_option("--lattice", opts.lattice, "lattice preset (e8, e7, e6, d6, a1, a2)")
        ->capture_default_str();
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"tsv", "lines"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "write output to a file instead of stdout");
  cmd->add_option("--threads", opts.threads,
                  "worker threads (default: LATROOTS_THREADS or 1); output is identical "
                  "for any value");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact root-lattice computations (E8 family): enumeration by norm, "
               "orthogonal-root counts, Weyl-orbit counts, representation numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version,-V", std::string("latroots ") + latr_version());

  CommonOpts opts;

  // roots
  auto* roots = app.add_subcommand("roots", "root system summary of a preset");
  bool roots_list = false;
  roots->add_flag("--list", roots_list, "list the root vectors instead of counts");
  add_common(roots, opts);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "normal-form vectors of norm 2d (E8)");
  long long enum_d = 1;
  std::optional<long long> c8_lo, c8_hi;
  enumerate->add_option("--d", enum_d, "half-norm d (target norm 2d)")->required();
  enumerate->add_option("--coord8-min", c8_lo, "doubled lower bound for coordinate 8");
  enumerate->add_option("--coord8-max", c8_hi, "doubled upper bound for coordinate 8");
  add_common(enumerate, opts);

  // repcount
  auto* repcount = app.add_subcommand("repcount", "representation numbers N_L(2d)");
  long long rc_d = -1, rc_dmin = -1, rc_dmax = -1;
  repcount->add_option("--d", rc_d, "single half-norm d");
  repcount->add_option("--d-min", rc_dmin, "range start");
  repcount->add_option("--d-max", rc_dmax, "range end");
  add_common(repcount, opts);

  // bound
  auto* bound = app.add_subcommand("bound", "candidate-count bound (2*floor(2*sqrt(2d))+1)^8");
  long long b_d = -1, b_dmin = -1, b_dmax = -1;
  bound->add_option("--d", b_d, "single half-norm d");
  bound->add_option("--d-min", b_dmin, "range start");
  bound->add_option("--d-max", b_dmax, "range end");
  add_common(bound, opts, false);

  // root-type
  auto* roottype = app.add_subcommand("root-type", "root types P(L, d)");
  long long rt_d = -1, rt_dmin = -1, rt_dmax = -1;
  bool rt_m01 = false;
  roottype->add_option("--d", rt_d, "single half-norm d");
  roottype->add_option("--d-min", rt_dmin, "range start");
  roottype->add_option("--d-max", rt_dmax, "range end");
  roottype->add_flag("--m01", rt_m01, "append m0 and m1 columns");
  add_common(roottype, opts);

  // scan
  auto* scan = app.add_subcommand("scan", "witnesses per attained orthogonal-root count");
  long long sc_dmin = 1, sc_dmax = 1, sc_mmin = 2, sc_mmax = 12;
  scan->add_option("--d-min", sc_dmin)->required();
  scan->add_option("--d-max", sc_dmax)->required();
  scan->add_option("--m-min", sc_mmin)->capture_default_str();
  scan->add_option("--m-max", sc_mmax)->capture_default_str();
  add_common(scan, opts);

  // qpq
  auto* qpq = app.add_subcommand(
      "qpq", "d whose vectors orthogonal to >= 2q roots are orthogonal to >= 2p roots");
  long long q_p = 7, q_q = 1, q_dmax = 60;
  qpq->add_option("--p", q_p)->capture_default_str();
  qpq->add_option("--q", q_q)->capture_default_str();
  qpq->add_option("--d-max", q_dmax)->capture_default_str();
  add_common(qpq, opts);

  // smallest-d
  auto* smallest = app.add_subcommand("smallest-d", "least d with m1(d) <= m");
  long long sm_m = 12, sm_ceiling = 1000;
  smallest->add_option("--m", sm_m)->required();
  smallest->add_option("--d-ceiling", sm_ceiling, "give up beyond this d")->capture_default_str();
  add_common(smallest, opts);

  // orbits
  auto* orbits = app.add_subcommand("orbits", "W(E8)-orbit counts nu_m(d)");
  long long ob_d = -1, ob_dmin = -1, ob_dmax = -1, ob_m = 14;
  orbits->add_option("--d", ob_d, "single half-norm d");
  orbits->add_option("--d-min", ob_dmin, "range start");
  orbits->add_option("--d-max", ob_dmax, "range end");
  orbits->add_option("--m", ob_m, "orthogonal-root count")->capture_default_str();
  add_common(orbits, opts);

  // verify-appendix
  auto* verify = app.add_subcommand("verify-appendix",
                                    "check the five weight-vector constructions");
  add_common(verify, opts, false);

  // inequality
  auto* inequality =
      app.add_subcommand("inequality", "28 N_E6 + 63 N_D6 >= 4 N_E7 per d");
  long long in_dmin = 0, in_dmax = 150;
  bool in_check = false;
  inequality->add_option("--d-min", in_dmin)->capture_default_str();
  inequality->add_option("--d-max", in_dmax)->capture_default_str();
  inequality->add_flag("--check", in_check,
                       "require a witness with 2 <= m <= 12 wherever the inequality fails");
  add_common(inequality, opts, false);

  // random-search
  auto* random = app.add_subcommand("random-search", "randomized witness sampling (E8)");
  long long ra_dmin = 1, ra_dmax = 60, ra_mmin = 2, ra_mmax = 12, ra_trials = 20000;
  unsigned long long ra_seed = 1;
  random->add_option("--d-min", ra_dmin)->capture_default_str();
  random->add_option("--d-max", ra_dmax)->capture_default_str();
  random->add_option("--m-min", ra_mmin)->capture_default_str();
  random->add_option("--m-max", ra_mmax)->capture_default_str();
  random->add_option("--trials", ra_trials, "accepted samples to examine")->capture_default_str();
  random->add_option("--seed", ra_seed, "PRNG seed; fixes the output exactly")
      ->capture_default_str();
  add_common(random, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints message / help text
    return code == 0 ? 0 : 1;
  }

  const auto resolve_range = [](long long single, long long lo, long long hi, long long def_lo,
                                long long def_hi, long long& out_lo, long long& out_hi) {
    if (single >= 0) {
      out_lo = out_hi = single;
      return;
    }
    out_lo = lo >= 0 ? lo : def_lo;
    out_hi = hi >= 0 ? hi : def_hi;
  };

  int error = 0;
  latr_table* table = nullptr;

  if (app.got_subcommand(roots)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const latr_status status = latr_roots_table(lat.get(), roots_list ? 1 : 0, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(enumerate)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const long long* lo = c8_lo ? &*c8_lo : nullptr;
    const long long* hi = c8_hi ? &*c8_hi : nullptr;
    const latr_status status = latr_enumerate_normal_forms(lat.get(), enum_d, lo, hi, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(repcount)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    long long lo, hi;
    resolve_range(rc_d, rc_dmin, rc_dmax, 0, 20, lo, hi);
    const latr_status status = latr_repcount_table(lat.get(), lo, hi, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(bound)) {
    long long lo, hi;
    resolve_range(b_d, b_dmin, b_dmax, 1, 60, lo, hi);
    const latr_status status = latr_bound_table(lo, hi, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(roottype)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    long long lo, hi;
    resolve_range(rt_d, rt_dmin, rt_dmax, 1, 20, lo, hi);
    if (lo == 0)
      std::cerr << "latroots: warning: d = 0 is the zero vector, orthogonal to every root\n";
    const latr_status status = latr_root_type(lat.get(), lo, hi, rt_m01 ? 1 : 0, opts.threads, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(scan)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const latr_status status =
        latr_scan(lat.get(), sc_dmin, sc_dmax, sc_mmin, sc_mmax, opts.threads, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(qpq)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const latr_status status = latr_qpq(lat.get(), q_p, q_q, q_dmax, opts.threads, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(smallest)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const latr_status status = latr_smallest_d(lat.get(), sm_m, sm_ceiling, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(orbits)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    long long lo, hi;
    resolve_range(ob_d, ob_dmin, ob_dmax, 1, 60, lo, hi);
    const latr_status status = latr_orbits(lat.get(), lo, hi, ob_m, opts.threads, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(verify)) {
    const latr_status status = latr_verify_appendix(&table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(inequality)) {
    const latr_status status =
        latr_inequality(in_dmin, in_dmax, in_check ? 1 : 0, opts.threads, &table);
    return emit(status, table, opts);
  }
  if (app.got_subcommand(random)) {
    auto lat = open_lattice(opts.lattice, error);
    if (!lat) return error;
    const latr_status status = latr_random_search(lat.get(), ra_dmin, ra_dmax, ra_mmin,
                                                  ra_mmax, ra_trials, ra_seed, &table);
    return emit(status, table, opts);
  }
  std::cerr << "latroots: no subcommand\n";
  return 1;
}
