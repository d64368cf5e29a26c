#include "latroots/inequality.hpp"

#include "latroots/enumeration.hpp"

namespace latroots {

std::vector<InequalityRow> inequality_table(std::int64_t d_min, std::int64_t d_max, int threads) {
  if (d_min < 0 || d_max < d_min) throw UsageError("inequality: need 0 <= d_min <= d_max");
  // Warm the three tables once; afterwards the rows are cache lookups.
  representation_number(PresetName::E6, d_max);
  representation_number(PresetName::D6, d_max);
  representation_number(PresetName::E7, d_max);
  return parallel_map<InequalityRow>(threads, d_max - d_min + 1, [&](std::int64_t i) {
    const std::int64_t d = d_min + i;
    InequalityRow row;
    row.d = d;
    row.n_e6 = representation_number(PresetName::E6, d);
    row.n_d6 = representation_number(PresetName::D6, d);
    row.n_e7 = representation_number(PresetName::E7, d);
    row.lhs = 28 * row.n_e6 + 63 * row.n_d6;
    row.rhs = 4 * row.n_e7;
    row.holds = row.lhs >= row.rhs;
    return row;
  });
}

ImplicationReport check_implication(std::int64_t d_min, std::int64_t d_max, int threads) {
  if (d_min < 0 || d_max < d_min) throw UsageError("implication: need 0 <= d_min <= d_max");
  const auto table = inequality_table(d_min, d_max, threads);
  const Lattice& e8 = lattice(PresetName::E8);

  ImplicationReport report;
  report.rows = parallel_map<ImplicationRow>(threads, d_max - d_min + 1, [&](std::int64_t i) {
    ImplicationRow row;
    row.inequality = table[static_cast<std::size_t>(i)];
    row.witness_required = !row.inequality.holds;
    if (!row.witness_required) return row;
    EnumerationTask task;
    task.d = row.inequality.d;
    enumerate_normal_forms(task, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(e8, v, 12);
      if (!oc.exceeded && oc.count >= 2) {
        row.witness_m = oc.count;
        row.witness = v;
        return false;
      }
      return true;
    });
    return row;
  });

  report.ok = true;
  for (const ImplicationRow& row : report.rows)
    if (row.witness_required && !row.witness) report.ok = false;
  return report;
}

}  // namespace latroots
