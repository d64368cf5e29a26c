#include "latroots/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace latroots {

PresetName parse_preset_name(std::string_view name) {
  std::string low;
  for (char c : name) low.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (low == "e8") return PresetName::E8;
  if (low == "e7") return PresetName::E7;
  if (low == "e6") return PresetName::E6;
  if (low == "d6") return PresetName::D6;
  if (low == "a1") return PresetName::A1;
  if (low == "a2") return PresetName::A2;
  throw UsageError("unsupported lattice '" + std::string(name) +
                   "' (expected one of e8, e7, e6, d6, a1, a2)");
}

std::string preset_label(PresetName name) {
  switch (name) {
    case PresetName::E8: return "E8";
    case PresetName::E7: return "E7";
    case PresetName::E6: return "E6";
    case PresetName::D6: return "D6";
    case PresetName::A1: return "A1";
    case PresetName::A2: return "A2";
  }
  throw UsageError("unsupported lattice");
}

bool e8_member(const Vec& v) {
  if (v.rank() != 8) return false;
  const bool odd = (v.d[0] & 1) != 0;
  std::int64_t sum = 0;
  for (int i = 0; i < 8; ++i) {
    if (((v.d[i] & 1) != 0) != odd) return false;
    sum += v.d[i];
  }
  return ((sum % 4) + 4) % 4 == 0;
}

bool d6_member(const Vec& v) {
  if (v.rank() != 6) return false;
  std::int64_t sum = 0;
  for (int i = 0; i < 6; ++i) {
    if ((v.d[i] & 1) != 0) return false;
    sum += v.d[i];
  }
  return ((sum % 4) + 4) % 4 == 0;
}

bool positive_half(const Vec& r) {
  if (r.rank() == 8) return dot(r, weyl_vector()) > 0;
  return r.lex_positive();
}

namespace {

std::vector<Vec> e8_roots() {
  std::vector<Vec> roots;
  roots.reserve(240);
  // 112 integer roots +-e_i +- e_j.
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Vec v = Vec::zero(8);
          v.d[i] = si;
          v.d[j] = sj;
          roots.push_back(v);
        }
  // 128 half-integer roots (+-1/2,...,+-1/2) with an even number of minus
  // signs.
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    Vec v = Vec::zero(8);
    for (int i = 0; i < 8; ++i) v.d[i] = (mask >> i) & 1 ? -1 : 1;
    roots.push_back(v);
  }
  return roots;
}

std::vector<Vec> d6_roots() {
  std::vector<Vec> roots;
  roots.reserve(60);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Vec v = Vec::zero(6);
          v.d[i] = si;
          v.d[j] = sj;
          roots.push_back(v);
        }
  return roots;
}

Vec unit2(int i) {  // doubled coordinates of e_{i+1} in rank 8
  Vec v = Vec::zero(8);
  v.d[i] = 2;
  return v;
}

Lattice build_preset(PresetName name) {
  Lattice lat;
  lat.name = name;
  lat.label = preset_label(name);
  const auto& alphas = simple_roots();

  switch (name) {
    case PresetName::E8:
      lat.ambient_rank = 8;
      lat.roots = e8_roots();
      break;
    case PresetName::E7:
      lat.ambient_rank = 8;
      lat.defining_orthogonals = {unit2(6) + unit2(7)};  // e7 + e8
      break;
    case PresetName::E6:
      lat.ambient_rank = 8;
      // An A2 pair; its span contains e7 + e8, so this E6 lies in E7.
      lat.defining_orthogonals = {unit2(5) + unit2(6), unit2(7) - unit2(5)};
      break;
    case PresetName::D6:
      lat.ambient_rank = 6;
      lat.roots = d6_roots();
      break;
    case PresetName::A1:
      lat.ambient_rank = 8;
      lat.span_generators = {alphas[1]};  // a2 = e1 + e2
      break;
    case PresetName::A2:
      lat.ambient_rank = 8;
      lat.span_generators = {alphas[6], alphas[7]};  // a7, a8
      break;
  }

  if (lat.roots.empty()) {
    if (lat.is_span_preset()) {
      if (lat.span_generators.size() == 1) {
        const Vec& a = lat.span_generators[0];
        lat.roots = {a, -a};
      } else {
        const Vec& a = lat.span_generators[0];
        const Vec& b = lat.span_generators[1];
        if (dot(a, b) != -1) throw InternalError("A2 generators must pair to -1");
        lat.roots = {a, -a, b, -b, a + b, -(a + b)};
      }
    } else {
      for (const Vec& r : e8_roots()) {
        bool ok = true;
        for (const Vec& o : lat.defining_orthogonals) ok = ok && dot(r, o) == 0;
        if (ok) lat.roots.push_back(r);
      }
    }
  }

  std::sort(lat.roots.begin(), lat.roots.end());
  for (const Vec& r : lat.roots) {
    if (norm(r) != 2) throw InternalError(lat.label + ": root of norm != 2");
    if (!lat.contains(r)) throw InternalError(lat.label + ": root fails membership");
    if (positive_half(r)) lat.positive_roots.push_back(r);
  }
  if (lat.positive_roots.size() * 2 != lat.roots.size())
    throw InternalError(lat.label + ": positive roots are not half of the roots");
  for (const Vec& r : lat.positive_roots) {
    if (!std::binary_search(lat.roots.begin(), lat.roots.end(), -r))
      throw InternalError(lat.label + ": root set not closed under negation");
  }

  const std::size_t expected = [&]() -> std::size_t {
    switch (name) {
      case PresetName::E8: return 240;
      case PresetName::E7: return 126;
      case PresetName::E6: return 72;
      case PresetName::D6: return 60;
      case PresetName::A1: return 2;
      case PresetName::A2: return 6;
    }
    return 0;
  }();
  if (lat.roots.size() != expected)
    throw InternalError(lat.label + ": expected " + std::to_string(expected) + " roots, got " +
                        std::to_string(lat.roots.size()));
  return lat;
}

}  // namespace

bool Lattice::contains(const Vec& v) const {
  if (name == PresetName::D6) return d6_member(v);
  if (!e8_member(v)) return false;
  for (const Vec& o : defining_orthogonals)
    if (dot(v, o) != 0) return false;
  if (is_span_preset()) {
    if (span_generators.size() == 1) {
      const Vec& a = span_generators[0];
      const std::int64_t p = dot(v, a);
      if (p % 2 != 0) return false;
      return v == a.scaled(p / 2);
    }
    const Vec& a = span_generators[0];
    const Vec& b = span_generators[1];
    // Invert the A2 Gram matrix [[2,-1],[-1,2]] (determinant 3).
    const std::int64_t pa = dot(v, a);
    const std::int64_t pb = dot(v, b);
    const std::int64_t x3 = 2 * pa + pb;
    const std::int64_t y3 = pa + 2 * pb;
    if (x3 % 3 != 0 || y3 % 3 != 0) return false;
    return v == a.scaled(x3 / 3) + b.scaled(y3 / 3);
  }
  return true;
}

const Lattice& lattice(PresetName name) {
  static std::mutex mutex;
  static std::map<PresetName, Lattice> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build_preset(name)).first;
  return it->second;
}

const std::array<Vec, 8>& simple_roots() {
  static const std::array<Vec, 8> alphas = [] {
    std::array<Vec, 8> a = {
        Vec{1, -1, -1, -1, -1, -1, -1, 1},  // a1 = (e1+e8)/2 - (e2+...+e7)/2
        Vec{2, 2, 0, 0, 0, 0, 0, 0},        // a2 = e1 + e2
        Vec{-2, 2, 0, 0, 0, 0, 0, 0},       // a3 = e2 - e1
        Vec{0, -2, 2, 0, 0, 0, 0, 0},
        Vec{0, 0, -2, 2, 0, 0, 0, 0},
        Vec{0, 0, 0, -2, 2, 0, 0, 0},
        Vec{0, 0, 0, 0, -2, 2, 0, 0},
        Vec{0, 0, 0, 0, 0, -2, 2, 0},
    };
    // Dynkin diagram of E8: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    static constexpr int edges[7][2] = {{1, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}};
    for (int i = 0; i < 8; ++i) {
      if (norm(a[i]) != 2) throw InternalError("simple root of norm != 2");
      if (!e8_member(a[i])) throw InternalError("simple root outside E8");
      for (int j = i + 1; j < 8; ++j) {
        bool adjacent = false;
        for (const auto& e : edges)
          adjacent = adjacent || (e[0] == i + 1 && e[1] == j + 1) || (e[0] == j + 1 && e[1] == i + 1);
        if (dot(a[i], a[j]) != (adjacent ? -1 : 0))
          throw InternalError("simple roots do not match the E8 Cartan matrix");
      }
    }
    return a;
  }();
  return alphas;
}

const std::array<Vec, 8>& fundamental_weights() {
  static const std::array<Vec, 8> omegas = [] {
    const auto& alphas = simple_roots();
    // (a_i, w_j) = delta_ij  <=>  A * wd_j = 4 e_j with A the matrix of
    // doubled simple-root coordinates.
    std::vector<std::vector<std::int64_t>> a(8, std::vector<std::int64_t>(8));
    std::vector<std::vector<std::int64_t>> b(8, std::vector<std::int64_t>(8, 0));
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j) a[i][j] = alphas[i].d[j];
      b[i][i] = 4;
    }
    const auto x = solve_integer_linear(a, b);
    std::array<Vec, 8> w;
    for (int j = 0; j < 8; ++j) {
      Vec v = Vec::zero(8);
      for (int i = 0; i < 8; ++i) v.d[i] = x[i][j];
      if (!e8_member(v))
        throw InternalError("fundamental weight outside E8 (unimodularity violated)");
      for (int i = 0; i < 8; ++i)
        if (dot(alphas[i], v) != (i == j ? 1 : 0)) throw InternalError("dual basis check failed");
      w[j] = v;
    }
    return w;
  }();
  return omegas;
}

const Vec& weyl_vector() {
  static const Vec rho = [] {
    Vec r = Vec::zero(8);
    for (const Vec& w : fundamental_weights()) r = r + w;
    return r;
  }();
  return rho;
}

std::array<std::int64_t, 8> express_in_simple_roots(const Vec& r) {
  if (r.rank() != 8 || !e8_member(r) || norm(r) != 2)
    throw UsageError("express_in_simple_roots: input is not an E8 root");
  const auto& omegas = fundamental_weights();
  const auto& alphas = simple_roots();
  std::array<std::int64_t, 8> x{};
  for (int i = 0; i < 8; ++i) x[i] = dot(r, omegas[i]);
  Vec rebuilt = Vec::zero(8);
  bool any_pos = false, any_neg = false;
  for (int i = 0; i < 8; ++i) {
    rebuilt = rebuilt + alphas[i].scaled(x[i]);
    any_pos = any_pos || x[i] > 0;
    any_neg = any_neg || x[i] < 0;
  }
  if (rebuilt != r) throw InternalError("express_in_simple_roots: round-trip failed");
  if (any_pos && any_neg)
    throw InternalError("express_in_simple_roots: mixed-sign coefficients for a root");
  return x;
}

}  // namespace latroots
