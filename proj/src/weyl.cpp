#include "latroots/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "latroots/enumeration.hpp"
#include "latroots/lattice.hpp"
#include "latroots/orthocount.hpp"

namespace latroots {

SignedPerm SignedPerm::identity() {
  SignedPerm g;
  for (int i = 0; i < 8; ++i) {
    g.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    g.sign[static_cast<std::size_t>(i)] = 1;
  }
  return g;
}

SignedPerm SignedPerm::random(std::mt19937_64& rng) {
  SignedPerm g = identity();
  for (int i = 7; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(g.perm[static_cast<std::size_t>(i)], g.perm[static_cast<std::size_t>(j)]);
  }
  int parity = 1;
  for (int i = 0; i < 7; ++i) {
    g.sign[static_cast<std::size_t>(i)] = (rng() & 1) ? 1 : -1;
    parity *= g.sign[static_cast<std::size_t>(i)];
  }
  g.sign[7] = static_cast<std::int8_t>(parity);  // force an even number of -1
  return g;
}

bool SignedPerm::valid() const {
  std::array<bool, 8> seen{};
  int minus = 0;
  for (int i = 0; i < 8; ++i) {
    if (perm[static_cast<std::size_t>(i)] >= 8) return false;
    seen[perm[static_cast<std::size_t>(i)]] = true;
    if (sign[static_cast<std::size_t>(i)] != 1 && sign[static_cast<std::size_t>(i)] != -1)
      return false;
    if (sign[static_cast<std::size_t>(i)] == -1) ++minus;
  }
  for (bool s : seen)
    if (!s) return false;
  return minus % 2 == 0;
}

Vec SignedPerm::apply(const Vec& v) const {
  if (v.rank() != 8) throw UsageError("signed permutations act on rank-8 vectors");
  Vec out = Vec::zero(8);
  for (int i = 0; i < 8; ++i)
    out.d[i] = sign[static_cast<std::size_t>(i)] * v.d[perm[static_cast<std::size_t>(i)]];
  return out;
}

SignedPerm SignedPerm::compose(const SignedPerm& first) const {
  // (this o first)(v)[i] = sign[i] * (first v)[perm[i]]
  //                      = sign[i] * first.sign[perm[i]] * v[first.perm[perm[i]]]
  SignedPerm g;
  for (int i = 0; i < 8; ++i) {
    const std::uint8_t p = perm[static_cast<std::size_t>(i)];
    g.perm[static_cast<std::size_t>(i)] = first.perm[p];
    g.sign[static_cast<std::size_t>(i)] =
        static_cast<std::int8_t>(sign[static_cast<std::size_t>(i)] * first.sign[p]);
  }
  return g;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm g;
  for (int i = 0; i < 8; ++i) {
    g.perm[perm[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    g.sign[perm[static_cast<std::size_t>(i)]] = sign[static_cast<std::size_t>(i)];
  }
  return g;
}

OrthMap OrthMap::identity() {
  OrthMap m;
  for (int i = 0; i < 8; ++i) m.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 4;
  return m;
}

OrthMap OrthMap::reflection(const Vec& root) {
  if (root.rank() != 8 || norm(root) != 2) throw UsageError("reflection requires an E8 root");
  OrthMap m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      m.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          static_cast<std::int32_t>((i == j ? 4 : 0) - root.d[i] * root.d[j]);
  return m;
}

Vec OrthMap::apply(const Vec& v) const {
  if (v.rank() != 8) throw UsageError("orthogonal maps act on rank-8 vectors");
  Vec out = Vec::zero(8);
  for (int i = 0; i < 8; ++i) {
    std::int64_t acc = 0;
    for (int j = 0; j < 8; ++j) acc += q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * v.d[j];
    if (acc % 4 != 0) throw InternalError("orthogonal map left the lattice");
    out.d[i] = acc / 4;
  }
  return out;
}

OrthMap OrthMap::compose(const OrthMap& first) const {
  OrthMap out;
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      std::int64_t acc = 0;
      for (int k = 0; k < 8; ++k)
        acc += static_cast<std::int64_t>(q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) *
               first.q[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
      if (acc % 4 != 0) throw InternalError("orthogonal map composition left the lattice");
      out.q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<std::int32_t>(acc / 4);
    }
  }
  return out;
}

Vec h_canonical(const Vec& l) {
  if (l.rank() != 8 || !e8_member(l)) throw UsageError("h_canonical: E8 vectors only");
  std::array<std::int64_t, 8> mags{};
  int negatives = 0;
  bool has_zero = false;
  for (int i = 0; i < 8; ++i) {
    mags[static_cast<std::size_t>(i)] = std::abs(l.d[i]);
    if (l.d[i] < 0) ++negatives;
    if (l.d[i] == 0) has_zero = true;
  }
  std::sort(mags.begin(), mags.end());
  Vec out = Vec::from_doubled(mags);
  if (!has_zero && (negatives & 1)) out.d[0] = -out.d[0];
  return out;
}

namespace {

Transversal build_transversal() {
  const Lattice& e8 = lattice(PresetName::E8);

  // Ascending search for a base vector with trivial stabilizer, over the
  // integer-coordinate normal forms (the smallest hit is the Weyl-vector
  // orbit at 2d = 620).
  Vec v0;
  bool found = false;
  for (std::int64_t d = 1; d <= 400 && !found; ++d) {
    EnumerationTask task;
    task.d = d;
    task.branch = Branch::Integer;
    enumerate_normal_forms(task, [&](const Vec& v) {
      const OrthoCount oc = count_orthogonal_roots(e8, v, 0);
      if (!oc.exceeded && oc.count == 0) {
        v0 = h_canonical(v);
        found = true;
        return false;
      }
      return true;
    });
  }
  if (!found) throw InternalError("transversal: no interior vector found below d = 400");
  for (const Vec& r : e8.roots)
    if (dot(r, v0) == 0) throw InternalError("transversal: v0 has a nontrivial stabilizer");

  std::array<OrthMap, 8> gens;
  for (int i = 0; i < 8; ++i) gens[static_cast<std::size_t>(i)] = OrthMap::reflection(simple_roots()[static_cast<std::size_t>(i)]);

  Transversal t;
  t.v0 = v0;
  std::map<Vec, std::size_t> label_to_rep;
  t.reps.push_back(OrthMap::identity());
  label_to_rep.emplace(h_canonical(v0), 0);
  for (std::size_t head = 0; head < t.reps.size(); ++head) {
    const OrthMap g = t.reps[head];  // copy: reps may reallocate
    for (const OrthMap& s : gens) {
      // Right multiplication: H.g -> H.(g s); apply() runs s first.
      const OrthMap gs = g.compose(s);
      const Vec label = h_canonical(gs.apply(v0));
      if (!label_to_rep.count(label)) {
        label_to_rep.emplace(label, t.reps.size());
        t.reps.push_back(gs);
      }
    }
  }
  if (t.reps.size() != 135)
    throw InternalError("transversal: expected 135 cosets, found " +
                        std::to_string(t.reps.size()));

  std::uint64_t h = kFnvOffset;
  h = fnv1a64(h, t.v0.d.data(), sizeof(t.v0.d));
  for (const OrthMap& g : t.reps)
    for (const auto& row : g.q) h = fnv1a64(h, row.data(), sizeof(row));
  t.checksum = h;
  return t;
}

}  // namespace

const Transversal& transversal() {
  static const Transversal t = build_transversal();
  return t;
}

Vec w_canonical(const Vec& l) {
  const Transversal& t = transversal();
  Vec best = h_canonical(t.reps[0].apply(l));
  for (std::size_t i = 1; i < t.reps.size(); ++i) {
    Vec cand = h_canonical(t.reps[i].apply(l));
    if (cand < best) best = cand;
  }
  return best;
}

Vec dominant_representative(const Vec& l) {
  if (l.rank() != 8 || !e8_member(l)) throw UsageError("dominant_representative: E8 vectors only");
  const auto& alphas = simple_roots();
  Vec v = l;
  for (int steps = 0; steps < 1000000; ++steps) {
    int lowest = -1;
    std::int64_t pairing = 0;
    for (int i = 0; i < 8; ++i) {
      pairing = dot(v, alphas[static_cast<std::size_t>(i)]);
      if (pairing < 0) {
        lowest = i;
        break;
      }
    }
    if (lowest < 0) return v;
    v = v - alphas[static_cast<std::size_t>(lowest)].scaled(pairing);
  }
  throw InternalError("dominant_representative: step budget exhausted");
}

OrbitReport count_orbits(std::int64_t d, std::int64_t m) {
  if (d < 1) throw UsageError("orbit count: d must be >= 1");
  if (m < 0 || m % 2 != 0) throw UsageError("orbit count: m must be even and >= 0");
  const Lattice& e8 = lattice(PresetName::E8);

  OrbitReport report;
  report.d = d;
  report.m = m;
  std::set<Vec> canon;
  std::map<Vec, Vec> canon_to_dominant;
  std::set<Vec> dominants;
  EnumerationTask task;
  task.d = d;
  enumerate_normal_forms(task, [&](const Vec& v) {
    const OrthoCount oc = count_orthogonal_roots(e8, v, m);
    if (oc.exceeded || oc.count != m) return true;
    const Vec wc = w_canonical(v);
    const Vec dom = dominant_representative(v);
    canon.insert(wc);
    dominants.insert(dom);
    const auto [it, inserted] = canon_to_dominant.emplace(wc, dom);
    if (!inserted && it->second != dom)
      throw InternalError("orbit canonicalization methods partition differently");
    return true;
  });

  report.nu = static_cast<std::int64_t>(canon.size());
  report.nu_dominant = static_cast<std::int64_t>(dominants.size());
  if (report.nu != report.nu_dominant)
    throw InternalError("orbit counts disagree: transversal " + std::to_string(report.nu) +
                        " vs dominant " + std::to_string(report.nu_dominant));
  report.representatives.assign(canon.begin(), canon.end());
  return report;
}

}  // namespace latroots
