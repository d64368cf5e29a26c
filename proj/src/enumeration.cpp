#include "latroots/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <random>

#include "latroots/orthocount.hpp"

namespace latroots {

namespace {

std::int64_t mod4(std::int64_t x) { return ((x % 4) + 4) % 4; }

// Largest value <= x with the requested parity (x >= 0; may return -1).
std::int64_t parity_floor(std::int64_t x, int parity) {
  return ((x & 1) == parity) ? x : x - 1;
}

// One coordinate class of the normal-form enumeration.  parity 0 walks the
// integer vectors (even doubled values), parity 1 the strict half-integers.
// Coordinates are chosen at indices 8..2 in descending value order subject
// to s_i <= s_{i+1} and the square budget; the first coordinate is then
// completed by the perfect-square test, emitting +t and -t, and each
// candidate passes the membership test (doubled sum = 0 mod 4).
bool run_branch(int parity, std::int64_t d,
                const std::optional<std::pair<std::int64_t, std::int64_t>>& c8range,
                const std::function<bool(const Vec&)>& emit) {
  const std::int64_t target = 8 * d;  // doubled-coordinate square sum
  if (parity == 1 && target < 8) return true;

  std::array<std::int64_t, 8> s{};
  const std::int64_t lo_value = parity;

  std::function<bool(int, std::int64_t, std::int64_t)> rec =
      [&](int level, std::int64_t remaining, std::int64_t sum) -> bool {
    if (level == 0) {
      const std::int64_t t = perfect_square_root(remaining);
      if (t < 0 || (t & 1) != parity || t > s[1]) return true;
      s[0] = t;
      if (mod4(sum + t) == 0) {
        if (!emit(Vec::from_doubled(s))) return false;
      }
      if (t > 0) {
        s[0] = -t;
        if (mod4(sum - t) == 0) {
          if (!emit(Vec::from_doubled(s))) return false;
        }
      }
      return true;
    }
    std::int64_t hi = parity_floor(static_cast<std::int64_t>(
                                       isqrt_u64(static_cast<std::uint64_t>(remaining))),
                                   parity);
    if (level < 7) hi = std::min(hi, s[level + 1]);
    std::int64_t lo = lo_value;
    if (level == 7 && c8range) {
      hi = std::min(hi, parity_floor(c8range->second, parity));
      lo = std::max(lo, c8range->first);
    }
    for (std::int64_t v = hi; v >= lo; v -= 2) {
      s[level] = v;
      if (!rec(level - 1, remaining - v * v, sum + v)) return false;
    }
    return true;
  };
  return rec(7, target, 0);
}

}  // namespace

void enumerate_normal_forms(const EnumerationTask& task,
                            const std::function<bool(const Vec&)>& emit) {
  if (task.d < 0) throw UsageError("enumerate: d must be >= 0");
  if (task.coord8_doubled_range && task.coord8_doubled_range->first > task.coord8_doubled_range->second)
    throw UsageError("enumerate: empty coordinate-8 range");
  if (task.branch != Branch::HalfInteger)
    if (!run_branch(0, task.d, task.coord8_doubled_range, emit)) return;
  if (task.branch != Branch::Integer)
    if (!run_branch(1, task.d, task.coord8_doubled_range, emit)) return;
}

std::vector<Vec> collect_normal_forms(const EnumerationTask& task) {
  std::vector<Vec> out;
  enumerate_normal_forms(task, [&](const Vec& v) {
    out.push_back(v);
    return true;
  });
  return out;
}

namespace {

// Plain box walk used by the oracle; descending values per coordinate.
void box_scan(const Lattice& lat, int parity, std::int64_t target, std::vector<Vec>& out) {
  const int rank = lat.ambient_rank;
  const auto bound = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(target)));
  const std::int64_t hi = parity_floor(bound, parity);
  if (hi < 0) return;
  std::array<std::int64_t, 8> s{};
  std::function<void(int, std::int64_t)> walk = [&](int level, std::int64_t acc) {
    if (acc > target) return;
    if (level == rank) {
      if (acc != target) return;
      const Vec v = Vec::from_doubled(std::span<const std::int64_t>(s.data(), rank));
      if (lat.contains(v)) out.push_back(v);
      return;
    }
    for (std::int64_t x = hi; x >= -hi; x -= 2) {
      s[level] = x;
      walk(level + 1, acc + x * x);
    }
  };
  walk(0, 0);
}

u128 box_candidate_count(int rank, std::int64_t target, int parity) {
  const auto bound = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(target)));
  const std::int64_t hi = parity_floor(bound, parity);
  if (hi < 0) return 0;
  // Values of the requested parity in [-hi, hi]: hi + 1 of them either way.
  u128 total = 1;
  for (int i = 0; i < rank; ++i) total *= static_cast<u128>(hi) + 1;
  return total;
}

}  // namespace

std::vector<Vec> brute_force_enumerate(PresetName preset, std::int64_t d,
                                       std::optional<std::uint64_t> ceiling_opt) {
  const Lattice& lat = lattice(preset);
  if (d < 0) throw UsageError("brute force: d must be >= 0");
  if (d == 0) return {Vec::zero(lat.ambient_rank)};
  const std::uint64_t ceiling = ceiling_opt.value_or(1000000000ull);

  std::vector<Vec> out;
  if (lat.is_span_preset()) {
    // Coefficient walk over the span; candidate counts are negligible.
    if (lat.span_generators.size() == 1) {
      const Vec& a = lat.span_generators[0];
      const auto k_hi = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(d)));
      for (std::int64_t k = k_hi; k >= -k_hi; --k)
        if (2 * k * k == 2 * d) out.push_back(a.scaled(k));
    } else {
      const Vec& a = lat.span_generators[0];
      const Vec& b = lat.span_generators[1];
      const auto hi = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(2 * d)));
      for (std::int64_t x = hi; x >= -hi; --x)
        for (std::int64_t y = hi; y >= -hi; --y)
          if (x * x - x * y + y * y == d) out.push_back(a.scaled(x) + b.scaled(y));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  const std::int64_t target = 8 * d;  // doubled-coordinate square sum
  // Candidate-count refusal, per the configured ceiling.
  u128 candidates = 0;
  if (lat.ambient_rank == 8) {
    candidates = candidate_bound(d).refined;
  } else {
    candidates = box_candidate_count(lat.ambient_rank, target, 0);
  }
  if (candidates > ceiling) {
    throw CeilingExceeded("brute force refused: candidate bound " + u128_to_string(candidates) +
                              " exceeds ceiling " + std::to_string(ceiling),
                          u128_to_string(candidates));
  }

  box_scan(lat, 0, target, out);
  if (lat.ambient_rank == 8) box_scan(lat, 1, target, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Free-coordinate shells with the trailing coordinates eliminated by the
// preset's orthogonality constraints:
//   E7: y8 = -y7          -> slot (weight 2, sum factor 0) for y7
//   E6: y7 = -y6, y8 = y6 -> slot (weight 3, sum factor 1) for y6
struct Slot {
  int weight;      // contribution weight * y^2 to the doubled square sum
  int sum_factor;  // contribution sum_factor * y to the doubled sum
};

std::vector<Slot> slots_for(PresetName preset) {
  switch (preset) {
    case PresetName::E8: return std::vector<Slot>(8, {1, 1});
    case PresetName::E7: {
      std::vector<Slot> s(6, {1, 1});
      s.push_back({2, 0});
      return s;
    }
    case PresetName::E6: {
      std::vector<Slot> s(5, {1, 1});
      s.push_back({3, 1});
      return s;
    }
    case PresetName::D6: return std::vector<Slot>(6, {1, 1});
    default: throw InternalError("slots_for: span presets handled separately");
  }
}

// Rebuilds the full doubled-coordinate vector from the free coordinates.
Vec assemble(PresetName preset, const std::vector<std::int64_t>& y) {
  switch (preset) {
    case PresetName::E8: {
      return Vec::from_doubled(std::span<const std::int64_t>(y.data(), 8));
    }
    case PresetName::E7: {
      Vec v = Vec::zero(8);
      for (int i = 0; i < 6; ++i) v.d[i] = y[static_cast<std::size_t>(i)];
      v.d[6] = y[6];
      v.d[7] = -y[6];
      return v;
    }
    case PresetName::E6: {
      Vec v = Vec::zero(8);
      for (int i = 0; i < 5; ++i) v.d[i] = y[static_cast<std::size_t>(i)];
      v.d[5] = y[5];
      v.d[6] = -y[5];
      v.d[7] = y[5];
      return v;
    }
    case PresetName::D6: {
      return Vec::from_doubled(std::span<const std::int64_t>(y.data(), 6));
    }
    default: throw InternalError("assemble: span presets handled separately");
  }
}

bool shell_branch(PresetName preset, const std::vector<Slot>& slots, int parity,
                  std::int64_t target, const std::function<bool(const Vec&)>& emit) {
  const std::size_t n = slots.size();
  std::vector<std::int64_t> y(n, 0);
  std::function<bool(std::size_t, std::int64_t, std::int64_t)> rec =
      [&](std::size_t level, std::int64_t remaining, std::int64_t sum) -> bool {
    const Slot slot = slots[level];
    if (level + 1 == n) {
      // weight * t^2 == remaining exactly
      if (remaining % slot.weight != 0) return true;
      const std::int64_t t = perfect_square_root(remaining / slot.weight);
      if (t < 0 || (t & 1) != parity) return true;
      y[level] = t;
      if (mod4(sum + slot.sum_factor * t) == 0) {
        if (!emit(assemble(preset, y))) return false;
      }
      if (t > 0) {
        y[level] = -t;
        if (mod4(sum - slot.sum_factor * t) == 0) {
          if (!emit(assemble(preset, y))) return false;
        }
      }
      return true;
    }
    const std::int64_t budget = remaining / slot.weight;
    const std::int64_t hi =
        parity_floor(static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(budget))),
                     parity);
    for (std::int64_t v = hi; v >= -hi; v -= 2) {
      y[level] = v;
      if (!rec(level + 1, remaining - slot.weight * v * v, sum + slot.sum_factor * v)) return false;
    }
    return true;
  };
  return rec(0, target, 0);
}

}  // namespace

void for_each_vector_of_norm(PresetName preset, std::int64_t d,
                             const std::function<bool(const Vec&)>& emit) {
  const Lattice& lat = lattice(preset);
  if (d < 0) throw UsageError("shell enumeration: d must be >= 0");
  if (d == 0) {
    emit(Vec::zero(lat.ambient_rank));
    return;
  }
  if (lat.is_span_preset()) {
    if (lat.span_generators.size() == 1) {
      const Vec& a = lat.span_generators[0];
      const std::int64_t k = perfect_square_root(d);
      if (k > 0) {
        if (!emit(a.scaled(k))) return;
        emit(a.scaled(-k));
      }
      return;
    }
    const Vec& a = lat.span_generators[0];
    const Vec& b = lat.span_generators[1];
    const auto hi = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(2 * d)));
    for (std::int64_t x = hi; x >= -hi; --x)
      for (std::int64_t y = hi; y >= -hi; --y)
        if (x * x - x * y + y * y == d)
          if (!emit(a.scaled(x) + b.scaled(y))) return;
    return;
  }
  const auto slots = slots_for(preset);
  const std::int64_t target = 8 * d;
  if (!shell_branch(preset, slots, 0, target, emit)) return;
  if (lat.ambient_rank == 8) shell_branch(preset, slots, 1, target, emit);
}

namespace {

constexpr std::int64_t kRepnumMaxD = 100000;  // keeps every count within int64

std::vector<std::int64_t> theta_by_convolution(PresetName preset, std::int64_t d_max) {
  std::vector<std::int64_t> result(static_cast<std::size_t>(d_max) + 1, 0);
  const Lattice& lat = lattice(preset);

  if (lat.is_span_preset()) {
    if (lat.span_generators.size() == 1) {
      result[0] = 1;
      for (std::int64_t k = 1; k * k <= d_max; ++k) result[static_cast<std::size_t>(k * k)] += 2;
    } else {
      const auto hi = static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(2 * d_max)));
      for (std::int64_t x = -hi; x <= hi; ++x)
        for (std::int64_t y = -hi; y <= hi; ++y) {
          const std::int64_t q = x * x - x * y + y * y;
          if (q <= d_max) ++result[static_cast<std::size_t>(q)];
        }
    }
    return result;
  }

  const auto slots = slots_for(preset);
  const std::int64_t target_max = 8 * d_max;
  const std::vector<int> parities = (lat.ambient_rank == 8) ? std::vector<int>{0, 1}
                                                            : std::vector<int>{0};
  for (int parity : parities) {
    // dp[n][s]: partial vectors with doubled square sum n and doubled sum
    // = s mod 4.
    std::vector<std::array<std::int64_t, 4>> dp(static_cast<std::size_t>(target_max) + 1,
                                                {0, 0, 0, 0});
    dp[0][0] = 1;
    bool first = true;
    for (const Slot slot : slots) {
      std::vector<std::array<std::int64_t, 4>> next(static_cast<std::size_t>(target_max) + 1,
                                                    {0, 0, 0, 0});
      const std::int64_t v_hi = parity_floor(
          static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(target_max / slot.weight))),
          parity);
      // For the first slot dp is a delta; afterwards scan all states.
      for (std::int64_t n = 0; n <= target_max; ++n) {
        const auto& row = dp[static_cast<std::size_t>(n)];
        if (row[0] == 0 && row[1] == 0 && row[2] == 0 && row[3] == 0) continue;
        for (std::int64_t v = v_hi; v >= -v_hi; v -= 2) {
          const std::int64_t n2 = n + slot.weight * v * v;
          if (n2 > target_max) continue;
          const std::int64_t ds = slot.sum_factor * v;
          for (int s = 0; s < 4; ++s) {
            if (row[s] == 0) continue;
            next[static_cast<std::size_t>(n2)][static_cast<std::size_t>(mod4(s + ds))] += row[s];
          }
        }
        if (first) break;  // only n = 0 is populated
      }
      dp.swap(next);
      first = false;
    }
    for (std::int64_t d = 0; d <= d_max; ++d)
      result[static_cast<std::size_t>(d)] += dp[static_cast<std::size_t>(8 * d)][0];
  }
  // Parity-1 pass double counts nothing at d = 0; the zero vector only
  // appears in the integer class.
  return result;
}

}  // namespace

std::int64_t representation_number(PresetName preset, std::int64_t d) {
  if (d < 0) throw UsageError("representation number: d must be >= 0");
  if (d > kRepnumMaxD)
    throw UsageError("representation number: d > " + std::to_string(kRepnumMaxD) +
                     " risks int64 overflow");
  static std::mutex mutex;
  static std::map<PresetName, std::vector<std::int64_t>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& table = cache[preset];
  if (static_cast<std::int64_t>(table.size()) <= d) {
    // Grow geometrically so ascending-d loops do O(log) convolutions.
    const std::int64_t want =
        std::max({d, 2 * static_cast<std::int64_t>(table.size()), std::int64_t{160}});
    table = theta_by_convolution(preset, want);
  }
  return table[static_cast<std::size_t>(d)];
}

CandidateBound candidate_bound(std::int64_t d) {
  if (d < 1) throw UsageError("candidate bound requires d >= 1");
  if (d > 100000000) throw UsageError("candidate bound: d too large for 128-bit arithmetic");
  const std::uint64_t f = isqrt_u64(static_cast<std::uint64_t>(8 * d));  // floor(2 sqrt(2d))
  const u128 base = 2 * static_cast<u128>(f) + 1;
  u128 raw = 1;
  for (int i = 0; i < 8; ++i) raw *= base;
  return {raw, (raw + 127) / 128};
}

namespace {

// Portable bounded draw; the stream depends only on the engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

}  // namespace

std::vector<RandomWitness> randomized_search(std::int64_t d_min, std::int64_t d_max,
                                             std::int64_t m_min, std::int64_t m_max,
                                             std::int64_t trials, std::uint64_t seed) {
  if (d_min < 1 || d_max < d_min) throw UsageError("random search: need 1 <= d_min <= d_max");
  if (m_min < 0 || m_max < m_min) throw UsageError("random search: need 0 <= m_min <= m_max");
  if (trials < 1) throw UsageError("random search: trials must be >= 1");
  if (d_max > 100000) throw UsageError("random search: d_max too large");

  const Lattice& e8 = lattice(PresetName::E8);
  std::mt19937_64 rng(seed);

  const auto bound =
      static_cast<std::int64_t>(isqrt_u64(static_cast<std::uint64_t>(8 * d_max)));
  // Values of each parity inside [-bound, bound].
  const std::int64_t n_even = bound / 2 * 2 + 1;
  const std::int64_t n_odd = (bound + 1) / 2 * 2;
  u128 w_even = 1, w_odd = 1;
  for (int i = 0; i < 8; ++i) {
    w_even *= static_cast<u128>(n_even);
    w_odd *= static_cast<u128>(n_odd);
  }

  // Draw the parity class with the box-conditional weights, then the
  // coordinates uniformly within the class; this is exactly the law of
  // "uniform point of the box, rejected until all coordinates share a
  // parity", but without burning 255 of every 256 draws.
  auto draw_class = [&]() -> int {
    const u128 total = w_even + w_odd;
    // 128-bit uniform via two engine words.
    for (;;) {
      u128 x = (static_cast<u128>(rng()) << 64) | rng();
      const u128 limit = ~static_cast<u128>(0) - (~static_cast<u128>(0) % total);
      if (x < limit) return (x % total) < w_even ? 0 : 1;
    }
  };

  std::map<std::pair<std::int64_t, std::int64_t>, Vec> found;
  std::int64_t accepted = 0;
  while (accepted < trials) {
    const int parity = draw_class();
    const std::int64_t n_values = parity == 0 ? n_even : n_odd;
    Vec v = Vec::zero(8);
    for (int i = 0; i < 8; ++i) {
      const auto k = static_cast<std::int64_t>(uniform_below(rng, static_cast<std::uint64_t>(n_values)));
      v.d[i] = 2 * k - (n_values - 1);  // parity of each value matches the class
    }
    if (!e8.contains(v)) continue;
    const std::int64_t nv = norm(v);
    if (nv < 2 * d_min || nv > 2 * d_max) continue;
    ++accepted;
    const std::int64_t d = nv / 2;
    const OrthoCount oc = count_orthogonal_roots(e8, v, m_max);
    if (oc.exceeded || oc.count < m_min) continue;
    found.emplace(std::make_pair(d, oc.count), v);
  }

  std::vector<RandomWitness> out;
  out.reserve(found.size());
  for (const auto& [key, vec] : found) out.push_back({key.first, key.second, vec});
  return out;
}

}  // namespace latroots
