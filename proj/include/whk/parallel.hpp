#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace whk {

/// Execution policy for the data-parallel loops. The serial path is the
/// reference implementation the parallel one is tested against.
enum class Exec { serial, parallel };

namespace detail {

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard<std::mutex> lock(mu_);
    if (!ptr_) ptr_ = std::current_exception();
  }
  void rethrow() const {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr ptr_;
};

}  // namespace detail

/// Calls body(i) for i in [0, n). Bodies must only write to disjoint state.
template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  detail::ExceptionSlot slot;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
}

/// Smallest i in [0, n) with pred(i) true, if any. The answer does not depend
/// on the policy.
template <class Pred>
std::optional<std::size_t> find_first(std::size_t n, Exec exec, Pred&& pred) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  detail::ExceptionSlot slot;
  const auto count = static_cast<long long>(n);
  long long best = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic) reduction(min : best)
  for (long long i = 0; i < count; ++i) {
    if (i >= best) continue;
    try {
      if (pred(static_cast<std::size_t>(i))) best = i;
    } catch (...) {
      slot.capture();
    }
  }
  slot.rethrow();
  if (best == std::numeric_limits<long long>::max()) return std::nullopt;
  return static_cast<std::size_t>(best);
}

}  // namespace whk
