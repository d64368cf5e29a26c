#include "latroots/weights.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "latroots/lattice.hpp"

namespace latroots {

namespace {

constexpr std::array<std::array<std::int64_t, 8>, 8> kGramOmega = {{
    {4, 5, 7, 10, 8, 6, 4, 2},
    {5, 8, 10, 15, 12, 9, 6, 3},
    {7, 10, 14, 20, 16, 12, 8, 4},
    {10, 15, 20, 30, 24, 18, 12, 6},
    {8, 12, 16, 24, 20, 15, 10, 5},
    {6, 9, 12, 18, 15, 12, 8, 4},
    {4, 6, 8, 12, 10, 8, 6, 3},
    {2, 3, 4, 6, 5, 4, 3, 2},
}};

void check_gram_against_dual_basis() {
  const auto& omegas = fundamental_weights();
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (dot(omegas[static_cast<std::size_t>(i)], omegas[static_cast<std::size_t>(j)]) !=
          kGramOmega[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        throw InternalError("Gram matrix entry (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") does not match the dual basis");
}

}  // namespace

const std::array<std::array<std::int64_t, 8>, 8>& gram_omega() {
  static std::once_flag checked;
  std::call_once(checked, check_gram_against_dual_basis);
  return kGramOmega;
}

Vec weight_combination(std::span<const std::int64_t, 8> c) {
  const auto& omegas = fundamental_weights();
  Vec v = Vec::zero(8);
  for (int i = 0; i < 8; ++i) v = v + omegas[static_cast<std::size_t>(i)].scaled(c[static_cast<std::size_t>(i)]);
  return v;
}

std::int64_t norm_of_weight_combination(std::span<const std::int64_t, 8> c) {
  const auto& g = gram_omega();
  std::int64_t by_gram = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      by_gram += c[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 c[static_cast<std::size_t>(j)];
  const std::int64_t by_coords = norm(weight_combination(c));
  if (by_gram != by_coords)
    throw InternalError("weight-combination norm differs between Gram and coordinate routes");
  return by_gram;
}

namespace {

struct AppendixCase {
  const char* name;
  std::array<std::int64_t, 8> coeffs;  // on w1..w8
  std::int64_t d;
  const char* decomposition;
};

// The five vectors: support {i : c_i != 0} determines everything below.
constexpr AppendixCase kCases[] = {
    {"l_{5,6}", {1, 0, 0, 1, 0, 0, 1, 0}, 46, "A2+3A1"},
    {"l_{1,3}", {0, 0, 0, 1, 0, 1, 0, 1}, 50, "A2+3A1"},
    {"l_M", {1, 1, 0, 0, 1, 0, 0, 1}, 52, "2A2"},
    {"l_{2,4}", {0, 0, 1, 0, 1, 0, 1, 0}, 54, "A2+3A1"},
    {"l_{7,8}", {1, 0, 0, 1, 0, 1, 0, 0}, 57, "A2+3A1"},
};

std::string combination_string(const std::array<std::int64_t, 8>& c) {
  std::string s;
  for (int i = 0; i < 8; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    if (!s.empty()) s.push_back('+');
    if (c[static_cast<std::size_t>(i)] != 1) s += std::to_string(c[static_cast<std::size_t>(i)]);
    s += "w" + std::to_string(i + 1);
  }
  return s;
}

// Exact expected orthogonal systems for two of the cases, as named in the
// construction: <a5,a6> + <a2> + <a3> + <a8> and <a3,a4> + <a6,a7>.
std::vector<Vec> expected_positive_system(const char* name) {
  const auto& a = simple_roots();
  std::vector<Vec> out;
  if (std::string(name) == "l_{5,6}") {
    out = {a[4], a[5], a[4] + a[5], a[1], a[2], a[7]};
  } else if (std::string(name) == "l_M") {
    out = {a[2], a[3], a[2] + a[3], a[5], a[6], a[5] + a[6]};
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AppendixReport verify_appendix() {
  const Lattice& e8 = lattice(PresetName::E8);
  AppendixReport report;
  report.all_pass = true;

  for (const AppendixCase& c : kCases) {
    AppendixRow row;
    row.name = c.name;
    row.combination = combination_string(c.coeffs);
    row.d = c.d;
    row.pass = true;

    const Vec l = weight_combination(c.coeffs);
    row.norm = norm_of_weight_combination(c.coeffs);

    auto fail = [&](const std::string& msg) {
      if (row.pass) row.detail = msg;
      row.pass = false;
    };

    if (row.norm != 2 * c.d)
      fail("norm " + std::to_string(row.norm) + " != " + std::to_string(2 * c.d));

    const OrthoCount oc = count_orthogonal_roots(e8, l);
    row.m = oc.count;
    if (row.m != 12) fail("orthogonal root count " + std::to_string(row.m) + " != 12");

    const auto system = orthogonal_root_set(e8, l);
    row.decomposition = decomposition_to_string(decompose_root_system(system));
    if (row.decomposition != c.decomposition)
      fail("decomposition " + row.decomposition + " != " + c.decomposition);

    // Support argument: for a positive root r = sum x_i a_i, (r, l) is the
    // sum of the x_i over the support of the combination, so orthogonality
    // forces exactly those coefficients to vanish.
    for (const Vec& r : e8.positive_roots) {
      const auto x = express_in_simple_roots(r);
      std::int64_t support_sum = 0;
      for (int i = 0; i < 8; ++i) support_sum += c.coeffs[static_cast<std::size_t>(i)] * x[static_cast<std::size_t>(i)];
      if (support_sum != dot(r, l)) {
        fail("support identity failed at root " + to_machine(r));
        break;
      }
      const bool orthogonal = dot(r, l) == 0;
      bool support_zero = true;
      for (int i = 0; i < 8; ++i)
        if (c.coeffs[static_cast<std::size_t>(i)] != 0 && x[static_cast<std::size_t>(i)] != 0) support_zero = false;
      if (orthogonal != support_zero) {
        fail("support argument failed at root " + to_machine(r));
        break;
      }
    }

    // Exact orthogonal systems where the construction names them.
    const auto expected = expected_positive_system(c.name);
    if (!expected.empty()) {
      std::vector<Vec> positives;
      for (const Vec& r : system)
        if (positive_half(r)) positives.push_back(r);
      std::sort(positives.begin(), positives.end());
      if (positives != expected) fail("orthogonal system differs from the named one");
    }

    report.all_pass = report.all_pass && row.pass;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace latroots
