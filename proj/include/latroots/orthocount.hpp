#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latroots/lattice.hpp"
#include "latroots/vec.hpp"

namespace latroots {

// Result of counting roots orthogonal to a vector.  With a cap the scan
// stops as soon as the running count passes it (one pair past the cap,
// e.g. at the seventh pair when only m <= 12 matters); `count` is exact
// when exceeded is false.
struct OrthoCount {
  std::int64_t count = 0;
  bool exceeded = false;
};

OrthoCount count_orthogonal_roots(const Lattice& lat, const Vec& l, std::int64_t cap = -1);

// All roots of the preset orthogonal to l (both signs).
std::vector<Vec> orthogonal_root_set(const Lattice& lat, const Vec& l);

// Irreducible-component labels of root systems inside the presets; all
// simply laced, so (family, rank) identifies the type.
struct AdeLabel {
  char family;  // 'A', 'D' or 'E'
  int rank;
  auto operator<=>(const AdeLabel&) const = default;
  std::string str() const { return std::string(1, family) + std::to_string(rank); }
  std::int64_t root_count() const;
};

using Decomposition = std::map<AdeLabel, int>;  // label -> multiplicity

// "A2+3A1", "2A2", "-" for the empty system; higher rank printed first.
std::string decomposition_to_string(const Decomposition& dec);

// Splits a root system into irreducible components and identifies each one
// from the Dynkin diagram of its simple roots.  The input must be closed
// under negation and consist of roots; a component that fails to match an
// ADE diagram (impossible for genuine root subsystems of the presets) is an
// invariant violation.
Decomposition decompose_root_system(const std::vector<Vec>& roots);

// P(L, d): every value of #R(l^perp) over vectors l of norm 2d.  For E8
// this walks normal forms only (the count is H-invariant); other presets
// walk the full shell.  d = 0 yields {#roots} (the zero vector).
struct RootType {
  PresetName preset;
  std::int64_t d;
  std::vector<std::int64_t> members;  // sorted ascending
};

RootType root_type(PresetName preset, std::int64_t d);

// m0 = min P, m1 = min of the positive members (absent when P = {0}).
std::pair<std::int64_t, std::optional<std::int64_t>> m0_m1(PresetName preset, std::int64_t d);

struct WitnessRecord {
  std::int64_t d;
  std::int64_t m;
  Vec l;
  Decomposition decomposition;
};

// One witness per attained m in [m_min, m_max] for each d in range, first
// in deterministic enumeration order.  Counting stops early past m_max.
std::vector<WitnessRecord> scan_range(PresetName preset, std::int64_t d_min, std::int64_t d_max,
                                      std::int64_t m_min, std::int64_t m_max, int threads = 1);

// Values d <= d_max such that every vector of norm 2d orthogonal to at
// least 2q roots is orthogonal to at least 2p roots, i.e. the root type
// avoids [2q, 2p).
std::vector<std::int64_t> answer_qpq(PresetName preset, std::int64_t p, std::int64_t q,
                                     std::int64_t d_max, int threads = 1);

// Smallest d with m1(d) <= m, searched by ascending scan up to d_ceiling.
struct SmallestD {
  std::optional<std::int64_t> d;  // absent: not found below the ceiling
  std::int64_t ceiling;
};
SmallestD smallest_d_for(PresetName preset, std::int64_t m, std::int64_t d_ceiling = 1000);

// Weight 12 + m/2 of the quasi-pullback against the number m of orthogonal
// roots, with the classification thresholds: a cusp form needs m >= 2, the
// general-type range is 2 <= m < 14, and m = 14 gives weight exactly 19.
struct QuasiPullbackWeight {
  std::int64_t m;
  std::int64_t weight;
  bool cusp_form;
  bool general_type_trigger;
  bool canonical_weight;
};
QuasiPullbackWeight quasi_pullback_weight(std::int64_t m);

}  // namespace latroots
