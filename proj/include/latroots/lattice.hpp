#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "latroots/vec.hpp"

namespace latroots {

enum class PresetName { E8, E7, E6, D6, A1, A2 };

PresetName parse_preset_name(std::string_view name);
std::string preset_label(PresetName name);

// E8 membership in doubled coordinates: entries all even (integer point) or
// all odd (strict half-integer point), and coordinate sum in 2Z, i.e. the
// doubled sum is 0 mod 4.
bool e8_member(const Vec& v);

// D6 membership in its own rank-6 ambient: integer points with even sum.
bool d6_member(const Vec& v);

// One representative per +-pair of roots.  For the rank-8 presets this is
// the half with nonnegative coefficients on the Coxeter basis (equivalently
// positive pairing with the Weyl vector); for D6 the lexicographically
// positive half.
bool positive_half(const Vec& r);

// A named lattice with its ambient model, membership rule and cached root
// system.  E7 and E6 live inside E8 as orthogonal complements:
//   E7 = (e7+e8)^perp
//   E6 = {e6+e7, -e6+e8}^perp   (an A2 pair whose span contains e7+e8,
//                                so this E6 sits inside E7)
// D6 has its own rank-6 ambient; A1 and A2 are the spans of the fixed
// simple roots <a2> and <a7, a8>.
struct Lattice {
  PresetName name;
  std::string label;
  int ambient_rank;
  std::vector<Vec> defining_orthogonals;  // empty for E8, D6, A1, A2
  std::vector<Vec> span_generators;       // nonempty for A1, A2 only
  std::vector<Vec> roots;                 // full root set, sorted
  std::vector<Vec> positive_roots;        // one per +-pair, sorted

  bool is_span_preset() const { return !span_generators.empty(); }
  bool contains(const Vec& v) const;
};

// Cached immutable preset; safe for unrestricted concurrent use.
const Lattice& lattice(PresetName name);

// The Coxeter basis of simple roots a1..a8 used throughout (half-integer
// a1 = (e1+e8-e2-...-e7)/2, a2 = e1+e2, ak = e_{k-1}-e_{k-2} for k>=3), and
// the dual basis of fundamental weights with (a_i, w_j) = delta_ij.
const std::array<Vec, 8>& simple_roots();
const std::array<Vec, 8>& fundamental_weights();

// Sum of the fundamental weights (the Weyl vector).
const Vec& weyl_vector();

// Coefficients x with r = sum x_i a_i; for a root these are all >= 0 or
// all <= 0.  Throws UsageError if r is not an E8 root.
std::array<std::int64_t, 8> express_in_simple_roots(const Vec& r);

}  // namespace latroots
