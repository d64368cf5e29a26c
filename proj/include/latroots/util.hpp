#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace latroots {

// Error taxonomy shared by the whole library.  The C API and the CLI map
// these onto status / exit codes, so the split matters:
//   UsageError      -> caller passed something unsupported        (exit 1)
//   CeilingExceeded -> a configured work ceiling refused the job  (exit 1)
//   InternalError   -> an invariant the library promises was lost (exit 2)
//   VerifyError     -> a verification run found a failure         (exit 3)
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct VerifyError : std::runtime_error {
  explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

struct CeilingExceeded : std::runtime_error {
  std::string computed_bound;  // decimal, may exceed 64 bits
  CeilingExceeded(const std::string& what, std::string bound)
      : std::runtime_error(what), computed_bound(std::move(bound)) {}
};

using u128 = unsigned __int128;
using i128 = __int128;

// Floor of sqrt, exact for the whole uint64 range.
std::uint64_t isqrt_u64(std::uint64_t n);

// Returns the nonnegative root if n is a perfect square, else -1.
std::int64_t perfect_square_root(std::int64_t n);

std::string u128_to_string(u128 v);
std::string i128_to_string(i128 v);

std::uint64_t fnv1a64(std::uint64_t h, const void* data, std::size_t len);
constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;

// Exact solve of A * X = B over the integers for small n (n <= 8).
// Throws InternalError if A is singular or the solution is not integral.
std::vector<std::vector<std::int64_t>> solve_integer_linear(
    const std::vector<std::vector<std::int64_t>>& a,
    const std::vector<std::vector<std::int64_t>>& b);

// Resolves a requested thread count: positive wins, else the
// LATROOTS_THREADS environment variable, else 1.
int resolve_threads(int requested);

// Runs fn(0..n-1) on `threads` workers and returns results in index
// order, so output never depends on the thread count.  The first
// exception thrown by any job is rethrown after all workers join.
template <class R>
std::vector<R> parallel_map(int threads, std::int64_t n,
                            const std::function<R(std::int64_t)>& fn) {
  std::vector<R> out(static_cast<std::size_t>(n));
  if (n == 0) return out;
  threads = resolve_threads(threads);
  if (threads <= 1 || n == 1) {
    for (std::int64_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto worker = [&] {
    for (;;) {
      std::int64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[static_cast<std::size_t>(i)] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace latroots
