#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "latroots/vec.hpp"

namespace latroots {

// An element of H < W(E8): a coordinate permutation combined with an even
// number of sign changes.  (g.v)[i] = sign[i] * v[perm[i]].
struct SignedPerm {
  std::array<std::uint8_t, 8> perm{};
  std::array<std::int8_t, 8> sign{};

  static SignedPerm identity();
  // Uniform random element of H; test helper with a pinned construction
  // (Fisher-Yates permutation, then 7 free signs and a parity-fixing 8th).
  static SignedPerm random(std::mt19937_64& rng);

  Vec apply(const Vec& v) const;
  SignedPerm compose(const SignedPerm& first) const;  // apply `first`, then this
  SignedPerm inverse() const;
  bool valid() const;
};

// An orthogonal map preserving E8, stored as the quadrupled matrix on
// doubled coordinates (every element of W(E8) is quarter-integral in the
// standard coordinates).  Application and composition divide back by 4 and
// check exactness.
struct OrthMap {
  std::array<std::array<std::int32_t, 8>, 8> q{};

  static OrthMap identity();
  static OrthMap reflection(const Vec& root);  // sigma_r(x) = x - (x,r) r

  Vec apply(const Vec& v) const;
  OrthMap compose(const OrthMap& first) const;  // apply `first`, then this
  bool operator==(const OrthMap&) const = default;
};

// The distinguished representative of H.l: magnitudes sorted so the squares
// are nondecreasing, everything nonnegative when the sign parity can be
// absorbed (always, if some coordinate is zero), otherwise exactly the
// first (smallest-magnitude) coordinate negative.
Vec h_canonical(const Vec& l);

// Representatives g_1..g_135 of the right cosets H.g, built by closing the
// identity under right multiplication by the simple reflections and keeping
// one representative per h_canonical(g.v0) label.  v0 is the first vector
// of an ascending normal-form search over integer-coordinate E8 vectors
// with no orthogonal root (trivial stabilizer), so the labelling is
// injective on cosets.
struct Transversal {
  Vec v0;
  std::vector<OrthMap> reps;  // size 135; reps[0] = identity
  std::uint64_t checksum;     // FNV-1a over v0 and all matrix entries
};

const Transversal& transversal();

// Canonical form of the W(E8)-orbit: lexicographic minimum of
// h_canonical(g_i.l) over the transversal.
Vec w_canonical(const Vec& l);

// The unique dominant vector in W.l, by repeated reflection at the lowest
// simple root with negative pairing.
Vec dominant_representative(const Vec& l);

// nu_m(d): number of W(E8)-orbits of norm-2d vectors orthogonal to exactly
// m roots, computed independently through w_canonical and through
// dominant_representative; disagreement is an invariant violation.
struct OrbitReport {
  std::int64_t d = 0;
  std::int64_t m = 0;
  std::int64_t nu = 0;
  std::int64_t nu_dominant = 0;
  std::vector<Vec> representatives;  // w-canonical forms, sorted
};

OrbitReport count_orbits(std::int64_t d, std::int64_t m);

}  // namespace latroots
