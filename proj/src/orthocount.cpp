#include "latroots/orthocount.hpp"

#include <algorithm>
#include <set>

#include "latroots/enumeration.hpp"

namespace latroots {

OrthoCount count_orthogonal_roots(const Lattice& lat, const Vec& l, std::int64_t cap) {
  if (!lat.contains(l))
    throw UsageError("count_orthogonal_roots: vector is not in " + lat.label);
  std::int64_t count = 0;
  for (const Vec& r : lat.positive_roots) {
    if (dot(r, l) != 0) continue;
    count += 2;
    if (cap >= 0 && count > cap) return {count, true};
  }
  return {count, false};
}

std::vector<Vec> orthogonal_root_set(const Lattice& lat, const Vec& l) {
  std::vector<Vec> out;
  for (const Vec& r : lat.positive_roots) {
    if (dot(r, l) == 0) {
      out.push_back(r);
      out.push_back(-r);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t AdeLabel::root_count() const {
  switch (family) {
    case 'A': return static_cast<std::int64_t>(rank) * (rank + 1);
    case 'D': return 2ll * rank * (rank - 1);
    case 'E':
      if (rank == 6) return 72;
      if (rank == 7) return 126;
      if (rank == 8) return 240;
      break;
    default: break;
  }
  throw InternalError("unknown root-system label " + std::string(1, family) +
                      std::to_string(rank));
}

std::string decomposition_to_string(const Decomposition& dec) {
  if (dec.empty()) return "-";
  std::vector<AdeLabel> labels;
  for (const auto& [label, count] : dec) labels.push_back(label);
  std::sort(labels.begin(), labels.end(), [](const AdeLabel& a, const AdeLabel& b) {
    if (a.rank != b.rank) return a.rank > b.rank;
    return a.family > b.family;  // E before D before A at equal rank
  });
  std::string s;
  for (const AdeLabel& label : labels) {
    if (!s.empty()) s.push_back('+');
    const int count = dec.at(label);
    if (count > 1) s += std::to_string(count);
    s += label.str();
  }
  return s;
}

namespace {

// Classifies one irreducible component from the Dynkin diagram of its
// simple roots (positives not expressible as a sum of two positives).
AdeLabel classify_component(const std::vector<Vec>& positives) {
  std::set<Vec> pos_set(positives.begin(), positives.end());
  std::vector<Vec> simples;
  for (const Vec& p : positives) {
    bool decomposable = false;
    for (const Vec& a : positives) {
      if (a == p) continue;
      if (pos_set.count(p - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(p);
  }
  const int r = static_cast<int>(simples.size());
  if (r < 1 || r > 8) throw InternalError("component with bad simple-root count");

  std::vector<std::vector<int>> adj(simples.size());
  for (int i = 0; i < r; ++i) {
    for (int j = i + 1; j < r; ++j) {
      const std::int64_t p = dot(simples[static_cast<std::size_t>(i)],
                                 simples[static_cast<std::size_t>(j)]);
      if (p == -1) {
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
      } else if (p != 0) {
        throw InternalError("simple roots pair outside {0, -1}");
      }
    }
  }

  AdeLabel label{'A', r};
  int deg3 = -1;
  int max_deg = 0;
  for (int i = 0; i < r; ++i) {
    const int deg = static_cast<int>(adj[static_cast<std::size_t>(i)].size());
    max_deg = std::max(max_deg, deg);
    if (deg == 3) deg3 = (deg3 == -1) ? i : -2;
  }
  if (max_deg <= 2 && deg3 == -1) {
    // Must be a single path: exactly r-1 edges and connected; with degrees
    // <= 2 it suffices to count edges and endpoints.
    int edges = 0, endpoints = 0;
    for (int i = 0; i < r; ++i) {
      edges += static_cast<int>(adj[static_cast<std::size_t>(i)].size());
      if (adj[static_cast<std::size_t>(i)].size() <= 1) ++endpoints;
    }
    edges /= 2;
    if (edges != r - 1 || (r > 1 && endpoints != 2))
      throw InternalError("disconnected or cyclic component diagram");
    label = {'A', r};
  } else if (deg3 >= 0 && max_deg == 3) {
    // Walk the three branches off the unique degree-3 node.
    std::vector<int> branch_lengths;
    for (int start : adj[static_cast<std::size_t>(deg3)]) {
      int length = 1;
      int prev = deg3, cur = start;
      for (;;) {
        const auto& next = adj[static_cast<std::size_t>(cur)];
        if (next.size() > 2) throw InternalError("second branch node in component diagram");
        int nxt = -1;
        for (int cand : next)
          if (cand != prev) nxt = cand;
        if (nxt == -1) break;
        prev = cur;
        cur = nxt;
        ++length;
      }
      branch_lengths.push_back(length);
    }
    std::sort(branch_lengths.begin(), branch_lengths.end());
    if (branch_lengths.size() != 3 ||
        branch_lengths[0] + branch_lengths[1] + branch_lengths[2] + 1 != r)
      throw InternalError("branch walk does not cover the component diagram");
    if (branch_lengths[0] == 1 && branch_lengths[1] == 1) {
      label = {'D', r};
    } else if (branch_lengths[0] == 1 && branch_lengths[1] == 2 && branch_lengths[2] <= 4) {
      label = {'E', r};
      if (r < 6 || r > 8) throw InternalError("E-type component with rank outside 6..8");
    } else {
      throw InternalError("component diagram is not an ADE diagram");
    }
  } else {
    throw InternalError("component diagram is not an ADE diagram");
  }

  if (label.root_count() != static_cast<std::int64_t>(positives.size()) * 2)
    throw InternalError("component root count does not match its diagram type " + label.str());
  return label;
}

}  // namespace

Decomposition decompose_root_system(const std::vector<Vec>& roots) {
  if (roots.empty()) return {};
  std::set<Vec> all(roots.begin(), roots.end());
  for (const Vec& r : roots) {
    if (norm(r) != 2) throw UsageError("decompose: input contains a non-root");
    if (!all.count(-r)) throw UsageError("decompose: input not closed under negation");
  }

  std::vector<Vec> positives;
  for (const Vec& r : roots)
    if (positive_half(r)) positives.push_back(r);
  std::sort(positives.begin(), positives.end());

  // Union-find over positives; same component iff connected through
  // non-orthogonality.
  const std::size_t n = positives.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (dot(positives[i], positives[j]) != 0) parent[find(i)] = find(j);

  std::map<std::size_t, std::vector<Vec>> components;
  for (std::size_t i = 0; i < n; ++i) components[find(i)].push_back(positives[i]);

  Decomposition dec;
  for (const auto& [root_idx, comp] : components) ++dec[classify_component(comp)];
  return dec;
}

namespace {

// Walks the preset's norm-2d vectors, one H-orbit representative for E8,
// the whole shell otherwise; emit returns false to stop.
void walk_shell(PresetName preset, std::int64_t d, const std::function<bool(const Vec&)>& emit) {
  if (preset == PresetName::E8) {
    EnumerationTask task;
    task.d = d;
    enumerate_normal_forms(task, emit);
  } else {
    for_each_vector_of_norm(preset, d, emit);
  }
}

}  // namespace

RootType root_type(PresetName preset, std::int64_t d) {
  const Lattice& lat = lattice(preset);
  if (d < 0) throw UsageError("root type: d must be >= 0");
  RootType rt{preset, d, {}};
  if (d == 0) {
    rt.members = {static_cast<std::int64_t>(lat.roots.size())};
    return rt;
  }
  std::set<std::int64_t> members;
  walk_shell(preset, d, [&](const Vec& v) {
    members.insert(count_orthogonal_roots(lat, v).count);
    return true;
  });
  rt.members.assign(members.begin(), members.end());
  return rt;
}

std::pair<std::int64_t, std::optional<std::int64_t>> m0_m1(PresetName preset, std::int64_t d) {
  const RootType rt = root_type(preset, d);
  if (rt.members.empty())
    throw UsageError("m0/m1 undefined: no vectors of norm " + std::to_string(2 * d));
  const std::int64_t m0 = rt.members.front();
  std::optional<std::int64_t> m1;
  for (const std::int64_t m : rt.members) {
    if (m > 0) {
      m1 = m;
      break;
    }
  }
  return {m0, m1};
}

std::vector<WitnessRecord> scan_range(PresetName preset, std::int64_t d_min, std::int64_t d_max,
                                      std::int64_t m_min, std::int64_t m_max, int threads) {
  if (d_min < 1 || d_max < d_min) throw UsageError("scan: need 1 <= d_min <= d_max");
  if (m_min < 0 || m_max < m_min) throw UsageError("scan: need 0 <= m_min <= m_max");
  const Lattice& lat = lattice(preset);

  const std::int64_t lo = m_min + (m_min % 2);  // counts are even
  const std::size_t max_possible =
      lo > m_max ? 0 : static_cast<std::size_t>((m_max - lo) / 2 + 1);

  const auto per_d = [&](std::int64_t offset) -> std::vector<WitnessRecord> {
    const std::int64_t d = d_min + offset;
    std::map<std::int64_t, WitnessRecord> found;
    if (max_possible == 0) return {};
    walk_shell(preset, d, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(lat, v, m_max);
      if (oc.exceeded || oc.count < m_min) return true;
      if (!found.count(oc.count)) {
        found.emplace(oc.count,
                      WitnessRecord{d, oc.count, v,
                                    decompose_root_system(orthogonal_root_set(lat, v))});
      }
      return found.size() < max_possible;
    });
    std::vector<WitnessRecord> rows;
    rows.reserve(found.size());
    for (auto& [m, rec] : found) rows.push_back(std::move(rec));
    return rows;
  };

  const auto chunks = parallel_map<std::vector<WitnessRecord>>(threads, d_max - d_min + 1, per_d);
  std::vector<WitnessRecord> out;
  for (const auto& chunk : chunks) out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

std::vector<std::int64_t> answer_qpq(PresetName preset, std::int64_t p, std::int64_t q,
                                     std::int64_t d_max, int threads) {
  if (q < 0 || p <= q) throw UsageError("qpq: need p > q >= 0");
  if (d_max < 1) throw UsageError("qpq: need d_max >= 1");
  const Lattice& lat = lattice(preset);

  const auto qualifies = [&](std::int64_t offset) -> bool {
    const std::int64_t d = 1 + offset;
    bool bad = false;
    walk_shell(preset, d, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(lat, v, 2 * p - 2);
      if (!oc.exceeded && oc.count >= 2 * q) {
        bad = true;
        return false;
      }
      return true;
    });
    return !bad;
  };

  const auto flags = parallel_map<char>(threads, d_max, [&](std::int64_t i) {
    return static_cast<char>(qualifies(i) ? 1 : 0);
  });
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= d_max; ++d)
    if (flags[static_cast<std::size_t>(d - 1)]) out.push_back(d);
  return out;
}

SmallestD smallest_d_for(PresetName preset, std::int64_t m, std::int64_t d_ceiling) {
  if (m < 2 || m % 2 != 0) throw UsageError("smallest-d: m must be even and >= 2");
  if (d_ceiling < 1) throw UsageError("smallest-d: ceiling must be >= 1");
  const Lattice& lat = lattice(preset);
  for (std::int64_t d = 1; d <= d_ceiling; ++d) {
    bool hit = false;
    walk_shell(preset, d, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(lat, v, m);
      if (!oc.exceeded && oc.count >= 2) {
        hit = true;
        return false;
      }
      return true;
    });
    if (hit) return {d, d_ceiling};
  }
  return {std::nullopt, d_ceiling};
}

QuasiPullbackWeight quasi_pullback_weight(std::int64_t m) {
  if (m < 0 || m % 2 != 0)
    throw UsageError("quasi-pullback weight: m must be an even nonnegative count");
  return {m, 12 + m / 2, m >= 2, m >= 2 && m < 14, m == 14};
}

}  // namespace latroots
