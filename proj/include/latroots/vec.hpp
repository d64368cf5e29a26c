#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "latroots/util.hpp"

namespace latroots {

// A lattice vector stored through the doubles of its coordinates: entry i
// holds 2*x_i.  Integer points have all entries even, strict half-integer
// points (E8 only) all entries odd, so every inner product stays in exact
// integer arithmetic.
struct Vec {
  static constexpr int kMaxRank = 8;

  std::array<std::int64_t, kMaxRank> d{};  // doubled coordinates; beyond rank() zero
  std::int8_t rank_ = 8;

  Vec() = default;
  Vec(std::initializer_list<std::int64_t> doubled) {
    if (doubled.size() == 0 || doubled.size() > kMaxRank)
      throw UsageError("vector rank must be 1..8");
    rank_ = static_cast<std::int8_t>(doubled.size());
    int i = 0;
    for (auto v : doubled) d[i++] = v;
  }

  static Vec zero(int rank) {
    Vec v;
    if (rank < 1 || rank > kMaxRank) throw UsageError("vector rank must be 1..8");
    v.rank_ = static_cast<std::int8_t>(rank);
    return v;
  }

  static Vec from_doubled(std::span<const std::int64_t> doubled) {
    Vec v = zero(static_cast<int>(doubled.size()));
    for (std::size_t i = 0; i < doubled.size(); ++i) v.d[i] = doubled[i];
    return v;
  }

  int rank() const { return rank_; }
  bool is_zero() const {
    for (int i = 0; i < rank_; ++i)
      if (d[i] != 0) return false;
    return true;
  }

  auto operator<=>(const Vec&) const = default;

  Vec operator+(const Vec& o) const {
    require_same_rank(o);
    Vec r = *this;
    for (int i = 0; i < rank_; ++i) r.d[i] += o.d[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    require_same_rank(o);
    Vec r = *this;
    for (int i = 0; i < rank_; ++i) r.d[i] -= o.d[i];
    return r;
  }
  Vec operator-() const {
    Vec r = *this;
    for (int i = 0; i < rank_; ++i) r.d[i] = -r.d[i];
    return r;
  }
  Vec scaled(std::int64_t k) const {
    Vec r = *this;
    for (int i = 0; i < rank_; ++i) r.d[i] *= k;
    return r;
  }

  // r > 0 under the pinned total order: first nonzero doubled coordinate
  // positive.  Used to split root sets into +/- halves.
  bool lex_positive() const {
    for (int i = 0; i < rank_; ++i) {
      if (d[i] > 0) return true;
      if (d[i] < 0) return false;
    }
    return false;
  }

  void require_same_rank(const Vec& o) const {
    if (rank_ != o.rank_) throw UsageError("rank mismatch between vectors");
  }
};

// (a, b) = sum(d_a[i] * d_b[i]) / 4.  Integral for any two members of the
// same even lattice; a non-integral value means the inputs were not lattice
// points and is reported as an invariant violation.
std::int64_t dot(const Vec& a, const Vec& b);

// (v, v); even and nonnegative for members of the lattices used here.
std::int64_t norm(const Vec& v);

// Machine format "d2:1,-1,0,..." (doubled integers) and human format
// "1/2 -1/2 0 ..." (exact rationals, denominator 1 or 2).  Both round-trip
// bit-exactly through the parser.
std::string to_machine(const Vec& v);
std::string to_human(const Vec& v);

// Accepts either format; rank is inferred from the token count.
Vec parse_vec(std::string_view text);

}  // namespace latroots
