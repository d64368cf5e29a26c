#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latroots/lattice.hpp"
#include "latroots/vec.hpp"

namespace latroots {

enum class Branch { Integer, HalfInteger, Both };

// A normal-form enumeration job for E8: target norm 2d, coordinate class,
// and an optional range of doubled values for the outermost coordinate
// (index 8), used to split work across workers.
struct EnumerationTask {
  std::int64_t d = 1;
  Branch branch = Branch::Both;
  std::optional<std::pair<std::int64_t, std::int64_t>> coord8_doubled_range;
};

// Emits every vector of norm 2d in normal form: squares of the coordinates
// nondecreasing from index 1 to 8, coordinates 2..8 nonnegative, only the
// first coordinate possibly negative.  Every H-orbit is represented at
// least once; the two sign variants of the first coordinate may land in
// the same H-orbit, which callers deduplicate downstream.  The callback
// returns false to stop early.  Deterministic order: integer class first,
// coordinates chosen from index 8 downward, larger values first, +t before
// -t.
void enumerate_normal_forms(const EnumerationTask& task,
                            const std::function<bool(const Vec&)>& emit);

std::vector<Vec> collect_normal_forms(const EnumerationTask& task);

// All vectors of norm 2d, no symmetry reduction: a plain scan of the
// ambient coordinate box with the preset's membership filters.  Small-d
// oracle; refuses jobs whose candidate count exceeds the ceiling
// (default 10^9).
std::vector<Vec> brute_force_enumerate(PresetName preset, std::int64_t d,
                                       std::optional<std::uint64_t> ceiling = {});

// Deterministic pruned enumeration of the full norm-2d shell (again no
// symmetry reduction, but organized as a budgeted tree instead of a box
// scan, so it reaches much larger d).  emit returns false to stop.
void for_each_vector_of_norm(PresetName preset, std::int64_t d,
                             const std::function<bool(const Vec&)>& emit);

// N_L(2d): the number of lattice vectors of norm 2d.  Exact; computed by
// per-coordinate convolution over (partial norm, coordinate sum mod 4) and
// cached, so whole tables are cheap.
std::int64_t representation_number(PresetName preset, std::int64_t d);

// The rough bound (2*floor(2*sqrt(2d)) + 1)^8 on N_{E8}(2d) and its
// parity refinement ceil(raw / 2^7).
struct CandidateBound {
  u128 raw;
  u128 refined;
};
CandidateBound candidate_bound(std::int64_t d);

struct RandomWitness {
  std::int64_t d;
  std::int64_t m;
  Vec l;
};

// Randomized search: samples E8 vectors uniformly from the coordinate box
// for d_max, rejecting on membership and norm, and reports one witness for
// every (d, m) pair seen with d in [d_min, d_max] and m in [m_min, m_max].
// `trials` counts accepted vectors.  The stream is pinned to mt19937_64
// with rejection sampling, so a seed fully determines the output.
std::vector<RandomWitness> randomized_search(std::int64_t d_min, std::int64_t d_max,
                                             std::int64_t m_min, std::int64_t m_max,
                                             std::int64_t trials, std::uint64_t seed);

}  // namespace latroots
