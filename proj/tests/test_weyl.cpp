#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "latroots/enumeration.hpp"
#include "latroots/orthocount.hpp"
#include "latroots/weyl.hpp"

using namespace latroots;

namespace {

Vec random_e8_vector(std::mt19937_64& rng) {
  const Lattice& e8 = lattice(PresetName::E8);
  for (;;) {
    Vec v = Vec::zero(8);
    const bool odd = (rng() & 1) != 0;
    for (int i = 0; i < 8; ++i)
      v.d[i] = 2 * (static_cast<std::int64_t>(rng() % 11) - 5) + (odd ? 1 : 0);
    if (e8.contains(v)) return v;
  }
}

// Full W-orbit by closure under the simple reflections (test-only; small d).
std::set<Vec> w_orbit(const Vec& start) {
  const auto& alphas = simple_roots();
  std::set<Vec> orbit{start};
  std::vector<Vec> queue{start};
  while (!queue.empty()) {
    const Vec v = queue.back();
    queue.pop_back();
    for (const Vec& a : alphas) {
      const Vec image = v - a.scaled(dot(v, a));
      if (orbit.insert(image).second) queue.push_back(image);
    }
  }
  return orbit;
}

}  // namespace

TEST_CASE("signed permutations: validity, composition, inverse") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const SignedPerm g = SignedPerm::random(rng);
    const SignedPerm h = SignedPerm::random(rng);
    CHECK(g.valid());
    const Vec v = random_e8_vector(rng);
    CHECK(g.compose(h).apply(v) == g.apply(h.apply(v)));
    CHECK(g.inverse().apply(g.apply(v)) == v);
    CHECK(norm(g.apply(v)) == norm(v));
  }
}

TEST_CASE("reflections preserve the form and fix nothing they shouldn't") {
  std::mt19937_64 rng(9);
  const auto& alphas = simple_roots();
  for (const Vec& a : alphas) {
    const OrthMap s = OrthMap::reflection(a);
    CHECK(s.apply(a) == -a);
    for (int trial = 0; trial < 20; ++trial) {
      const Vec v = random_e8_vector(rng);
      const Vec w = random_e8_vector(rng);
      CHECK(dot(s.apply(v), s.apply(w)) == dot(v, w));
      CHECK(lattice(PresetName::E8).contains(s.apply(v)));
    }
    CHECK(s.compose(s) == OrthMap::identity());
  }
}

TEST_CASE("h_canonical: fixed points and distinguished forms") {
  CHECK(h_canonical(Vec::zero(8)) == Vec::zero(8));
  // All integer-class roots share one canonical form.
  const Vec expected{0, 0, 0, 0, 0, 0, 2, 2};
  for (const Vec& r : lattice(PresetName::E8).roots) {
    if (r.d[0] % 2 != 0) continue;
    CHECK(h_canonical(r) == expected);
  }
  // All half-integer roots share the all-ones form.
  const Vec half_expected{1, 1, 1, 1, 1, 1, 1, 1};
  for (const Vec& r : lattice(PresetName::E8).roots) {
    if (r.d[0] % 2 == 0) continue;
    CHECK(h_canonical(r) == half_expected);
  }
}

TEST_CASE("h_canonical: idempotent and constant on H-orbits") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Vec v = random_e8_vector(rng);
    const Vec c = h_canonical(v);
    CHECK(h_canonical(c) == c);
    for (int k = 0; k < 4; ++k) CHECK(h_canonical(SignedPerm::random(rng).apply(v)) == c);
    // The canonical form lies in the orbit: sorted squares, sign rule.
    for (int i = 0; i < 7; ++i) CHECK(c.d[i] * c.d[i] <= c.d[i + 1] * c.d[i + 1]);
    for (int i = 1; i < 8; ++i) CHECK(c.d[i] >= 0);
  }
}

TEST_CASE("transversal: 135 cosets, order bookkeeping, identity present") {
  const Transversal& t = transversal();
  CHECK(t.reps.size() == 135);
  CHECK(t.reps[0] == OrthMap::identity());
  // |H| = 2^7 * 8! and 135 * |H| = |W(E8)|.
  const std::int64_t h_order = 128ll * 40320ll;
  CHECK(h_order == 5160960);
  CHECK(135 * h_order == 696729600);
}

TEST_CASE("transversal: v0 has trivial stabilizer and norm 620") {
  const Transversal& t = transversal();
  // The shortest interior vectors are the Weyl vectors, of norm 620.
  CHECK(norm(t.v0) == 620);
  for (const Vec& r : lattice(PresetName::E8).roots) CHECK(dot(r, t.v0) != 0);
}

TEST_CASE("transversal: labels are pairwise H-inequivalent, maps preserve roots") {
  const Transversal& t = transversal();
  std::set<Vec> labels;
  for (const OrthMap& g : t.reps) labels.insert(h_canonical(g.apply(t.v0)));
  CHECK(labels.size() == 135);
  const Lattice& e8 = lattice(PresetName::E8);
  std::set<Vec> roots(e8.roots.begin(), e8.roots.end());
  for (const OrthMap& g : t.reps)
    for (const Vec& r : e8.roots) {
      const Vec image = g.apply(r);
      CHECK(norm(image) == 2);
      CHECK(roots.count(image) == 1);
    }
}

TEST_CASE("w_canonical: all 240 roots share one canonical form") {
  std::set<Vec> forms;
  for (const Vec& r : lattice(PresetName::E8).roots) forms.insert(w_canonical(r));
  CHECK(forms.size() == 1);
}

TEST_CASE("w_canonical: idempotent and constant along random reflection products") {
  std::mt19937_64 rng(21);
  const auto& alphas = simple_roots();
  for (int trial = 0; trial < 20; ++trial) {
    const Vec v = random_e8_vector(rng);
    const Vec c = w_canonical(v);
    CHECK(w_canonical(c) == c);
    Vec moved = v;
    for (int k = 0; k < 12; ++k) {
      const Vec& a = alphas[rng() % 8];
      moved = moved - a.scaled(dot(moved, a));
    }
    CHECK(w_canonical(moved) == c);
  }
}

TEST_CASE("dominant_representative: fixed points, orbit constancy, weight vectors") {
  const auto& alphas = simple_roots();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const Vec v = random_e8_vector(rng);
    const Vec dom = dominant_representative(v);
    for (const Vec& a : alphas) CHECK(dot(dom, a) >= 0);
    CHECK(dominant_representative(dom) == dom);
    const Vec reflected = v - alphas[0].scaled(dot(v, alphas[0]));
    CHECK(dominant_representative(reflected) == dom);
  }
  // Nonnegative weight combinations are already dominant.
  const auto& w = fundamental_weights();
  const Vec l = w[0] + w[3] + w[6];
  CHECK(dominant_representative(l) == l);
}

TEST_CASE("w_canonical and dominant_representative induce the same partition") {
  std::map<Vec, Vec> canon_to_dom;
  std::map<Vec, Vec> dom_to_canon;
  for (const std::int64_t d : {2, 3, 5}) {
    for (const Vec& v : brute_force_enumerate(PresetName::E8, d)) {
      const Vec c = w_canonical(v);
      const Vec dom = dominant_representative(v);
      const auto [it1, fresh1] = canon_to_dom.emplace(c, dom);
      if (!fresh1) CHECK(it1->second == dom);
      const auto [it2, fresh2] = dom_to_canon.emplace(dom, c);
      if (!fresh2) CHECK(it2->second == c);
    }
  }
}

TEST_CASE("orbit-stabilizer bookkeeping: orbit sizes sum to the shell size, d <= 3") {
  for (std::int64_t d = 1; d <= 3; ++d) {
    CAPTURE(d);
    const auto shell = brute_force_enumerate(PresetName::E8, d);
    std::set<Vec> canons;
    for (const Vec& v : shell) canons.insert(w_canonical(v));
    std::size_t total = 0;
    for (const Vec& c : canons) total += w_orbit(c).size();
    CHECK(total == shell.size());
  }
}

TEST_CASE("count_orbits: the published anchors") {
  CHECK(count_orbits(61, 14).nu == 3);
  CHECK(count_orbits(65, 14).nu == 0);
  CHECK(count_orbits(110, 14).nu == 0);
  CHECK(count_orbits(48, 14).nu == 2);
  CHECK(count_orbits(39, 14).nu == 0);
}

TEST_CASE("count_orbits: reports representatives and dual counts") {
  const OrbitReport rep = count_orbits(61, 14);
  CHECK(rep.nu == rep.nu_dominant);
  CHECK(rep.representatives.size() == 3);
  const Lattice& e8 = lattice(PresetName::E8);
  for (const Vec& v : rep.representatives) {
    CHECK(norm(v) == 2 * 61);
    CHECK(count_orthogonal_roots(e8, v).count == 14);
    CHECK(w_canonical(v) == v);
  }
  CHECK(std::is_sorted(rep.representatives.begin(), rep.representatives.end()));
}

TEST_CASE("the unique interior orbit at the Weyl-vector norm") {
  const OrbitReport rep = count_orbits(310, 0);
  CHECK(rep.nu == 1);
}
