#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latroots/orthocount.hpp"
#include "latroots/vec.hpp"

namespace latroots {

// One row of the counting-argument inequality
//   28 N_{E6}(2d) + 63 N_{D6}(2d) >= 4 N_{E7}(2d).
// When it fails, a vector of norm 2d orthogonal to at least 2 and at most
// 12 roots exists in E8.
struct InequalityRow {
  std::int64_t d;
  std::int64_t n_e6;
  std::int64_t n_d6;
  std::int64_t n_e7;
  std::int64_t lhs;
  std::int64_t rhs;
  bool holds;
};

std::vector<InequalityRow> inequality_table(std::int64_t d_min, std::int64_t d_max,
                                            int threads = 1);

struct ImplicationRow {
  InequalityRow inequality;
  bool witness_required;              // inequality failed
  std::optional<std::int64_t> witness_m;
  std::optional<Vec> witness;
};

struct ImplicationReport {
  std::vector<ImplicationRow> rows;
  bool ok = false;  // every failing d produced a witness with 2 <= m <= 12
};

// For every d in range where the inequality fails, search for a witness
// with 2 <= #R(l^perp) <= 12; a failing d without one would contradict the
// proved implication and flags an implementation bug.
ImplicationReport check_implication(std::int64_t d_min, std::int64_t d_max, int threads = 1);

}  // namespace latroots
