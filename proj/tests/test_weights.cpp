#include <doctest.h>

#include <algorithm>
#include <array>
#include <random>
#include <utility>
#include <vector>

#include "latroots/enumeration.hpp"
#include "latroots/lattice.hpp"
#include "latroots/orthocount.hpp"
#include "latroots/weights.hpp"
#include "latroots/weyl.hpp"

using namespace latroots;

TEST_CASE("Gram matrix of the fundamental weights matches the fixed table") {
  const auto& g = gram_omega();
  const auto& w = fundamental_weights();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(g[i][j] == dot(w[i], w[j]));
  CHECK(g[0] == std::array<std::int64_t, 8>{4, 5, 7, 10, 8, 6, 4, 2});
  CHECK(g[7][7] == 2);
}

TEST_CASE("weights are dual to the simple roots and lie in E8") {
  const auto& w = fundamental_weights();
  const auto& a = simple_roots();
  for (int i = 0; i < 8; ++i) {
    CHECK(e8_member(w[i]));
    for (int j = 0; j < 8; ++j) CHECK(dot(a[i], w[j]) == (i == j ? 1 : 0));
  }
}

TEST_CASE("norms of the five combinations and the Weyl vector") {
  CHECK(norm_of_weight_combination(std::array<std::int64_t, 8>{1, 0, 0, 1, 0, 0, 1, 0}) == 92);
  CHECK(norm_of_weight_combination(std::array<std::int64_t, 8>{0, 0, 0, 1, 0, 1, 0, 1}) == 100);
  CHECK(norm_of_weight_combination(std::array<std::int64_t, 8>{1, 1, 0, 0, 1, 0, 0, 1}) == 104);
  CHECK(norm_of_weight_combination(std::array<std::int64_t, 8>{0, 0, 1, 0, 1, 0, 1, 0}) == 108);
  CHECK(norm_of_weight_combination(std::array<std::int64_t, 8>{1, 0, 0, 1, 0, 1, 0, 0}) == 114);
  // rho = sum of all weights; its norm is the sum of all 64 Gram entries.
  const std::array<std::int64_t, 8> ones = {1, 1, 1, 1, 1, 1, 1, 1};
  CHECK(norm_of_weight_combination(ones) == 620);
  std::int64_t by_table = 0;
  for (const auto& row : gram_omega())
    for (const auto v : row) by_table += v;
  CHECK(by_table == 620);
  CHECK(weight_combination(ones) == weyl_vector());
}

TEST_CASE("dominance: nonnegative weight combinations pair >= 0 with positive roots") {
  std::mt19937_64 rng(17);
  const Lattice& e8 = lattice(PresetName::E8);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<std::int64_t, 8> c{};
    for (auto& x : c) x = static_cast<std::int64_t>(rng() % 4);
    const Vec l = weight_combination(c);
    for (const Vec& r : e8.positive_roots) {
      const auto x = express_in_simple_roots(r);
      std::int64_t expected = 0;
      for (int i = 0; i < 8; ++i) expected += c[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      CHECK(dot(r, l) == expected);
      CHECK(dot(r, l) >= 0);
    }
  }
}

TEST_CASE("verify_appendix: all five vectors pass") {
  const AppendixReport report = verify_appendix();
  CHECK(report.all_pass);
  REQUIRE(report.rows.size() == 5);
  int a2_3a1 = 0, two_a2 = 0;
  std::vector<std::int64_t> norms;
  for (const AppendixRow& row : report.rows) {
    CHECK(row.pass);
    CHECK(row.detail.empty());
    CHECK(row.m == 12);
    CHECK(row.norm == 2 * row.d);
    norms.push_back(row.norm);
    if (row.decomposition == "A2+3A1") ++a2_3a1;
    if (row.decomposition == "2A2") ++two_a2;
  }
  CHECK(a2_3a1 == 4);
  CHECK(two_a2 == 1);
  CHECK(norms == std::vector<std::int64_t>{92, 100, 104, 108, 114});
}

TEST_CASE("the orthogonal systems of l_{5,6} and l_M are the named ones") {
  const Lattice& e8 = lattice(PresetName::E8);
  const auto& w = fundamental_weights();
  const auto& a = simple_roots();

  const Vec l56 = w[0] + w[3] + w[6];
  std::vector<Vec> pos56;
  for (const Vec& r : orthogonal_root_set(e8, l56))
    if (positive_half(r)) pos56.push_back(r);
  std::vector<Vec> expected56 = {a[4], a[5], a[4] + a[5], a[1], a[2], a[7]};
  std::sort(pos56.begin(), pos56.end());
  std::sort(expected56.begin(), expected56.end());
  CHECK(pos56 == expected56);
  // 12 = #R(A2) + 3 * #R(A1) = 6 + 6.
  CHECK(AdeLabel{'A', 2}.root_count() + 3 * AdeLabel{'A', 1}.root_count() == 12);

  const Vec lm = w[0] + w[1] + w[4] + w[7];
  std::vector<Vec> posm;
  for (const Vec& r : orthogonal_root_set(e8, lm))
    if (positive_half(r)) posm.push_back(r);
  std::vector<Vec> expectedm = {a[2], a[3], a[2] + a[3], a[5], a[6], a[5] + a[6]};
  std::sort(posm.begin(), posm.end());
  std::sort(expectedm.begin(), expectedm.end());
  CHECK(posm == expectedm);
}

TEST_CASE("each appendix vector's W-orbit meets the normal-form enumeration") {
  // Linking the construction to the search: a normal form with the same
  // (d, m) lies in the same W-orbit as the constructed vector.
  const Lattice& e8 = lattice(PresetName::E8);
  const auto& w = fundamental_weights();
  const std::vector<std::pair<Vec, std::int64_t>> cases = {
      {w[0] + w[3] + w[6], 46},
      {w[3] + w[5] + w[7], 50},
      {w[0] + w[1] + w[4] + w[7], 52},
      {w[2] + w[4] + w[6], 54},
      {w[0] + w[3] + w[5], 57},
  };
  for (const auto& [l, d] : cases) {
    CAPTURE(d);
    const Vec target = w_canonical(l);
    bool linked = false;
    EnumerationTask task;
    task.d = d;
    enumerate_normal_forms(task, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(e8, v, 12);
      if (!oc.exceeded && oc.count == 12 && w_canonical(v) == target) linked = true;
      return !linked;
    });
    CHECK(linked);
  }
}
