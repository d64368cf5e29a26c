#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "latroots/enumeration.hpp"
#include "latroots/orthocount.hpp"
#include "latroots/weights.hpp"
#include "latroots/weyl.hpp"

using namespace latroots;

namespace {

// Independent counting route: scan all 240 roots, no pair trick.
std::int64_t count_by_full_scan(const Lattice& lat, const Vec& l) {
  std::int64_t n = 0;
  for (const Vec& r : lat.roots)
    if (dot(r, l) == 0) ++n;
  return n;
}

}  // namespace

TEST_CASE("a root of E8 is orthogonal to exactly 126 roots") {
  const Lattice& e8 = lattice(PresetName::E8);
  const Vec r{2, 2, 0, 0, 0, 0, 0, 0};
  CHECK(count_by_full_scan(e8, r) == 126);
  const OrthoCount oc = count_orthogonal_roots(e8, r);
  CHECK_FALSE(oc.exceeded);
  CHECK(oc.count == 126);
}

TEST_CASE("count matches the full-scan oracle on every root and some shells") {
  const Lattice& e8 = lattice(PresetName::E8);
  for (const Vec& r : e8.roots) CHECK(count_orthogonal_roots(e8, r).count == count_by_full_scan(e8, r));
  for (const Vec& v : brute_force_enumerate(PresetName::E8, 3))
    CHECK(count_orthogonal_roots(e8, v).count == count_by_full_scan(e8, v));
}

TEST_CASE("cap semantics: early exceeded, exact when below") {
  const Lattice& e8 = lattice(PresetName::E8);
  const Vec r{2, 2, 0, 0, 0, 0, 0, 0};
  const OrthoCount capped = count_orthogonal_roots(e8, r, 12);
  CHECK(capped.exceeded);
  // A vector orthogonal to no root: cap can never trigger.
  const Vec rho = weyl_vector();
  const OrthoCount none = count_orthogonal_roots(e8, rho, 12);
  CHECK_FALSE(none.exceeded);
  CHECK(none.count == 0);
}

TEST_CASE("count rejects vectors outside the preset") {
  const Lattice& e7 = lattice(PresetName::E7);
  CHECK_THROWS_AS(count_orthogonal_roots(e7, Vec{2, 2, 0, 0, 0, 0, 0, 2}), UsageError);
}

TEST_CASE("H-invariance: counts are constant on H-orbits") {
  const Lattice& e8 = lattice(PresetName::E8);
  std::mt19937_64 rng(5);
  for (const std::int64_t d : {5, 9, 14}) {
    EnumerationTask task;
    task.d = d;
    int sampled = 0;
    enumerate_normal_forms(task, [&](const Vec& v) {
      const std::int64_t base = count_orthogonal_roots(e8, v).count;
      for (int k = 0; k < 4; ++k) {
        const SignedPerm h = SignedPerm::random(rng);
        CHECK(count_orthogonal_roots(e8, h.apply(v)).count == base);
      }
      return ++sampled < 10;
    });
  }
}

TEST_CASE("root types: d = 1 gives {126}, d = 0 the zero vector") {
  const RootType rt1 = root_type(PresetName::E8, 1);
  CHECK(rt1.members == std::vector<std::int64_t>{126});
  const RootType rt0 = root_type(PresetName::E8, 0);
  CHECK(rt0.members == std::vector<std::int64_t>{240});
}

TEST_CASE("root types via normal forms equal root types via brute force, d <= 6") {
  for (std::int64_t d = 1; d <= 6; ++d) {
    CAPTURE(d);
    const Lattice& e8 = lattice(PresetName::E8);
    std::set<std::int64_t> by_brute;
    for (const Vec& v : brute_force_enumerate(PresetName::E8, d))
      by_brute.insert(count_orthogonal_roots(e8, v).count);
    const RootType rt = root_type(PresetName::E8, d);
    CHECK(std::vector<std::int64_t>(by_brute.begin(), by_brute.end()) == rt.members);
  }
}

TEST_CASE("root type of d = 52 contains 12; Case I norms contain 12 too") {
  for (const std::int64_t d : {46, 50, 52, 54, 57}) {
    CAPTURE(d);
    const RootType rt = root_type(PresetName::E8, d);
    CHECK(std::binary_search(rt.members.begin(), rt.members.end(), 12));
  }
}

TEST_CASE("every root-type member is even") {
  for (std::int64_t d = 1; d <= 30; ++d)
    for (const std::int64_t m : root_type(PresetName::E8, d).members) CHECK(m % 2 == 0);
  for (std::int64_t d = 1; d <= 10; ++d)
    for (const std::int64_t m : root_type(PresetName::E7, d).members) CHECK(m % 2 == 0);
}

TEST_CASE("m0/m1: d = 1 gives 126/126; interior vectors split them") {
  const auto [m0, m1] = m0_m1(PresetName::E8, 1);
  CHECK(m0 == 126);
  REQUIRE(m1.has_value());
  CHECK(*m1 == 126);
  // The Weyl vector (norm 620, d = 310) is interior, so 0 is attained; other
  // vectors of that norm are not, so m1 exists and exceeds m0 = 0.
  const auto [m0r, m1r] = m0_m1(PresetName::E8, 310);
  CHECK(m0r == 0);
  REQUIRE(m1r.has_value());
  CHECK(*m1r > 0);
}

TEST_CASE("scan at d = 52 finds m = 12 with a verified witness") {
  const auto rows = scan_range(PresetName::E8, 52, 52, 2, 12);
  REQUIRE(!rows.empty());
  bool saw12 = false;
  const Lattice& e8 = lattice(PresetName::E8);
  for (const WitnessRecord& w : rows) {
    CHECK(w.d == 52);
    CHECK(norm(w.l) == 104);
    CHECK(count_orthogonal_roots(e8, w.l).count == w.m);
    std::int64_t total = 0;
    int rank_sum = 0;
    for (const auto& [label, mult] : w.decomposition) {
      total += label.root_count() * mult;
      rank_sum += label.rank * mult;
    }
    CHECK(total == w.m);
    CHECK(rank_sum <= 8);
    saw12 = saw12 || w.m == 12;
  }
  CHECK(saw12);
}

TEST_CASE("scan witnesses are deterministic (first in enumeration order)") {
  const auto a = scan_range(PresetName::E8, 40, 44, 2, 14);
  const auto b = scan_range(PresetName::E8, 40, 44, 2, 14, 4);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].d == b[i].d);
    CHECK(a[i].m == b[i].m);
    CHECK(a[i].l == b[i].l);
  }
}

TEST_CASE("E7 scans return self-consistent witnesses") {
  const Lattice& e7 = lattice(PresetName::E7);
  // Small-norm E7 vectors sit on many roots; the first m <= 12 shows up at
  // d = 14, so scan a window wide enough to catch both regimes.
  const auto rows = scan_range(PresetName::E7, 1, 14, 2, 60);
  CHECK(!rows.empty());
  bool m12 = false;
  for (const WitnessRecord& w : rows) m12 = m12 || (w.d == 14 && w.m == 12);
  CHECK(m12);
  for (const WitnessRecord& w : rows) {
    CHECK(e7.contains(w.l));
    CHECK(norm(w.l) == 2 * w.d);
    CHECK(count_orthogonal_roots(e7, w.l).count == w.m);
    std::int64_t total = 0;
    for (const auto& [label, mult] : w.decomposition) total += label.root_count() * mult;
    CHECK(total == w.m);
  }
}

TEST_CASE("qpq: p=1, q=0 asks for root types avoiding zero") {
  // d qualifies iff 0 is not attained; for small d no vector is interior,
  // so every d qualifies.
  const auto ds = answer_qpq(PresetName::E8, 1, 0, 10);
  CHECK(ds.size() == 10);
}

TEST_CASE("qpq (E8, p=7, q=1): all of 1..14 qualify, 52 does not") {
  const auto ds = answer_qpq(PresetName::E8, 7, 1, 14);
  std::vector<std::int64_t> expected(14);
  for (int i = 0; i < 14; ++i) expected[static_cast<std::size_t>(i)] = i + 1;
  CHECK(ds == expected);

  const auto up_to_52 = answer_qpq(PresetName::E8, 7, 1, 52, 4);
  CHECK(!std::binary_search(up_to_52.begin(), up_to_52.end(), std::int64_t{52}));
}

TEST_CASE("smallest_d_for: m = 126 gives 1; results are minimal") {
  const SmallestD r126 = smallest_d_for(PresetName::E8, 126, 50);
  REQUIRE(r126.d.has_value());
  CHECK(*r126.d == 1);

  const SmallestD r12 = smallest_d_for(PresetName::E8, 12, 100);
  REQUIRE(r12.d.has_value());
  // Cross-check minimality against full root types.
  for (std::int64_t d = 1; d < *r12.d; ++d) {
    for (const std::int64_t m : root_type(PresetName::E8, d).members) CHECK((m == 0 || m > 12));
  }
  bool attained = false;
  for (const std::int64_t m : root_type(PresetName::E8, *r12.d).members)
    attained = attained || (m >= 2 && m <= 12);
  CHECK(attained);
}

TEST_CASE("smallest_d_for: m = 14 first lands at d = 40") {
  // Below 40 nothing attains a positive count <= 14 (the m = 12 cases only
  // start at 46), and 14 itself is attained at 40.
  const SmallestD r = smallest_d_for(PresetName::E8, 14, 100);
  REQUIRE(r.d.has_value());
  CHECK(*r.d == 40);
}

TEST_CASE("smallest_d_for reports the ceiling when nothing is found") {
  const SmallestD r = smallest_d_for(PresetName::E8, 2, 20);
  CHECK_FALSE(r.d.has_value());
  CHECK(r.ceiling == 20);
}

TEST_CASE("quasi-pullback weights and classification") {
  const auto w12 = quasi_pullback_weight(12);
  CHECK(w12.weight == 18);
  CHECK(w12.cusp_form);
  CHECK(w12.general_type_trigger);
  CHECK_FALSE(w12.canonical_weight);

  const auto w14 = quasi_pullback_weight(14);
  CHECK(w14.weight == 19);
  CHECK(w14.canonical_weight);
  CHECK_FALSE(w14.general_type_trigger);

  const auto w0 = quasi_pullback_weight(0);
  CHECK(w0.weight == 12);
  CHECK_FALSE(w0.cusp_form);

  CHECK_THROWS_AS(quasi_pullback_weight(7), UsageError);
  CHECK_THROWS_AS(quasi_pullback_weight(-2), UsageError);
}

TEST_CASE("decompose: empty input, full E8, and a single pair") {
  CHECK(decompose_root_system({}).empty());
  const Lattice& e8 = lattice(PresetName::E8);
  const Decomposition whole = decompose_root_system(e8.roots);
  REQUIRE(whole.size() == 1);
  CHECK(whole.count(AdeLabel{'E', 8}) == 1);
  const Vec r{2, 2, 0, 0, 0, 0, 0, 0};
  const Decomposition pair = decompose_root_system({r, -r});
  CHECK(decomposition_to_string(pair) == "A1");
}

TEST_CASE("decompose: orthogonal systems of the named weight vectors") {
  const Lattice& e8 = lattice(PresetName::E8);
  const auto& w = fundamental_weights();
  const Vec l56 = w[0] + w[3] + w[6];
  CHECK(decomposition_to_string(decompose_root_system(orthogonal_root_set(e8, l56))) ==
        "A2+3A1");
  const Vec lm = w[0] + w[1] + w[4] + w[7];
  CHECK(decomposition_to_string(decompose_root_system(orthogonal_root_set(e8, lm))) == "2A2");
}

TEST_CASE("decompose validates its input") {
  const Vec r{2, 2, 0, 0, 0, 0, 0, 0};
  CHECK_THROWS_AS(decompose_root_system({r}), UsageError);             // not closed
  CHECK_THROWS_AS(decompose_root_system({Vec::zero(8)}), UsageError);  // not a root
}

TEST_CASE("decomposition labels know their root counts") {
  CHECK(AdeLabel{'A', 1}.root_count() == 2);
  CHECK(AdeLabel{'A', 2}.root_count() == 6);
  CHECK(AdeLabel{'A', 3}.root_count() == 12);
  CHECK(AdeLabel{'D', 4}.root_count() == 24);
  CHECK(AdeLabel{'D', 6}.root_count() == 60);
  CHECK(AdeLabel{'E', 6}.root_count() == 72);
  CHECK(AdeLabel{'E', 7}.root_count() == 126);
  CHECK(AdeLabel{'E', 8}.root_count() == 240);
}

TEST_CASE("decompose identifies D4 and A3 correctly (not by root count alone)") {
  // Roots of D4: +-e_i +- e_j inside a rank-4 slice of D6's ambient.
  std::vector<Vec> d4;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Vec v = Vec::zero(6);
          v.d[i] = si;
          v.d[j] = sj;
          d4.push_back(v);
        }
  CHECK(decomposition_to_string(decompose_root_system(d4)) == "D4");

  // A3 = roots of the A3 subsystem spanned by a5, a6, a7 in E8.
  const auto& a = simple_roots();
  const std::vector<Vec> gens = {a[4], a[5], a[6]};
  std::vector<Vec> a3 = {a[4], a[5], a[6], a[4] + a[5], a[5] + a[6], a[4] + a[5] + a[6]};
  const std::size_t positives = a3.size();
  for (std::size_t i = 0; i < positives; ++i) a3.push_back(-a3[i]);
  CHECK(decomposition_to_string(decompose_root_system(a3)) == "A3");
}
