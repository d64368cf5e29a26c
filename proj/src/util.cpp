#include "latroots/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace latroots {

std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // Fix up the float seed; the checks run in 128 bits to dodge overflow.
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t perfect_square_root(std::int64_t n) {
  if (n < 0) return -1;
  const auto r = isqrt_u64(static_cast<std::uint64_t>(n));
  if (static_cast<std::int64_t>(r * r) == n) return static_cast<std::int64_t>(r);
  return -1;
}

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

std::string i128_to_string(i128 v) {
  if (v < 0) return "-" + u128_to_string(static_cast<u128>(-v));
  return u128_to_string(static_cast<u128>(v));
}

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

// Fraction-free determinant (Bareiss); exact for the small matrices we use.
i128 det_bareiss(std::vector<std::vector<i128>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  i128 sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

std::vector<std::vector<std::int64_t>> solve_integer_linear(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b) {
  const std::size_t n = a.size();
  if (n == 0 || b.size() != n) throw InternalError("solve_integer_linear: bad shapes");
  std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  const i128 det = det_bareiss(m);
  if (det == 0) throw InternalError("solve_integer_linear: singular matrix");

  // Cramer per entry via cofactor expansion is fine at n <= 8.
  auto minor_det = [&](std::size_t skip_row, std::size_t skip_col) {
    std::vector<std::vector<i128>> sub;
    sub.reserve(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == skip_row) continue;
      std::vector<i128> row;
      row.reserve(n - 1);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == skip_col) continue;
        row.push_back(a[i][j]);
      }
      sub.push_back(std::move(row));
    }
    return det_bareiss(std::move(sub));
  };

  // adj(A)[j][i] = (-1)^{i+j} * minor(i, j); X = adj(A) * B / det.
  std::vector<std::vector<i128>> adj(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const i128 c = minor_det(i, j);
      adj[j][i] = ((i + j) % 2 == 0) ? c : -c;
    }
  }

  const std::size_t cols = b[0].size();
  std::vector<std::vector<std::int64_t>> x(n, std::vector<std::int64_t>(cols));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      i128 acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += adj[i][k] * static_cast<i128>(b[k][c]);
      if (acc % det != 0) throw InternalError("solve_integer_linear: non-integral solution");
      x[i][c] = static_cast<std::int64_t>(acc / det);
    }
  }
  return x;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("LATROOTS_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<int>(std::min<long>(v, 256));
  }
  return 1;
}

}  // namespace latroots
