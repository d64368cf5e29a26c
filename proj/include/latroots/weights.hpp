#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "latroots/orthocount.hpp"
#include "latroots/vec.hpp"

namespace latroots {

// Gram matrix ((w_i, w_j)) of the fundamental weights.  The returned table
// is the hard-coded one; at first use it is checked entry by entry against
// the pairings of the computed dual basis, and any difference is an
// invariant violation (transcription slips are exactly the failure mode
// this guards).
const std::array<std::array<std::int64_t, 8>, 8>& gram_omega();

// sum_j c_j w_j as a lattice vector.
Vec weight_combination(std::span<const std::int64_t, 8> c);

// c^T G c, computed both through the Gram matrix and through coordinates;
// a mismatch is an invariant violation.
std::int64_t norm_of_weight_combination(std::span<const std::int64_t, 8> c);

// One verified claim about one of the five named weight vectors.
struct AppendixRow {
  std::string name;           // e.g. "l_{5,6}"
  std::string combination;    // e.g. "w1+w4+w7"
  std::int64_t d;             // expected half-norm
  std::int64_t norm;          // computed
  std::int64_t m;             // computed #R(l^perp)
  std::string decomposition;  // computed
  bool pass;
  std::string detail;  // first failed check, empty when pass
};

struct AppendixReport {
  std::vector<AppendixRow> rows;
  bool all_pass = false;
};

// Checks, for each of the five vectors: the stated norm, exactly 12
// orthogonal roots, the expected decomposition (A2+3A1 four times, 2A2 for
// the last), the support argument (a positive root is orthogonal iff its
// coefficients vanish on the support of the combination; checked over all
// 120 positive roots), and for l_{5,6} and l_M the exact orthogonal
// systems.
AppendixReport verify_appendix();

}  // namespace latroots
