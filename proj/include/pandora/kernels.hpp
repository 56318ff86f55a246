#pragma once

// Data-parallel building blocks shared by the contraction and expansion
// passes. Every kernel produces the same output for any thread count.

#include <pandora/types.hpp>

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include <omp.h>
#include <parallel/algorithm>

namespace pandora::kernels {

/// Caps the OpenMP team size for the lifetime of the object.
class ThreadLimit {
public:
  explicit ThreadLimit(int threads) : previous_(omp_get_max_threads()) {
    if (threads < 1)
      throw std::invalid_argument("thread count must be at least 1");
    omp_set_num_threads(threads);
  }
  ~ThreadLimit() { omp_set_num_threads(previous_); }
  ThreadLimit(ThreadLimit const &) = delete;
  ThreadLimit &operator=(ThreadLimit const &) = delete;

private:
  int previous_;
};

inline void atomicMax(std::uint32_t &slot, std::uint32_t value) {
  std::atomic_ref<std::uint32_t> ref(slot);
  auto current = ref.load(std::memory_order_relaxed);
  while ((current < value || current == kNoEdge) &&
         !ref.compare_exchange_weak(current, value, std::memory_order_relaxed))
    ;
}

/// Exclusive prefix sum; returns the total. `out` may alias `in`.
template <typename T>
T exclusiveScan(std::span<T const> in, std::span<T> out) {
  std::size_t const n = in.size();
  if (n == 0)
    return T{};
  int const maxThreads = omp_get_max_threads();
  // Small inputs are not worth a parallel region.
  if (maxThreads == 1 || n < 4096) {
    T sum{};
    for (std::size_t i = 0; i < n; ++i) {
      T const x = in[i];
      out[i] = sum;
      sum += x;
    }
    return sum;
  }

  std::vector<T> blockSums(static_cast<std::size_t>(maxThreads) + 1, T{});
  int teamSize = 1;
#pragma omp parallel
  {
    int const tid = omp_get_thread_num();
    int const nt = omp_get_num_threads();
#pragma omp single
    teamSize = nt;
    std::size_t const begin = n * tid / nt;
    std::size_t const end = n * (tid + 1) / nt;
    T local{};
    for (std::size_t i = begin; i < end; ++i)
      local += in[i];
    blockSums[tid + 1] = local;
#pragma omp barrier
#pragma omp single
    for (int t = 1; t <= nt; ++t)
      blockSums[t] += blockSums[t - 1];
    T sum = blockSums[tid];
    for (std::size_t i = begin; i < end; ++i) {
      T const x = in[i];
      out[i] = sum;
      sum += x;
    }
  }
  return blockSums[teamSize];
}

/// Indices i with flags[i] != 0, in ascending order.
inline std::vector<std::uint32_t> compactIndices(std::span<std::uint32_t const> flags) {
  std::vector<std::uint32_t> offsets(flags.size());
  auto const total = exclusiveScan<std::uint32_t>(flags, offsets);
  std::vector<std::uint32_t> out(total);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < flags.size(); ++i)
    if (flags[i])
      out[offsets[i]] = static_cast<std::uint32_t>(i);
  return out;
}

/// Sort with a strict total order. Because no two elements compare equal the
/// result does not depend on the thread count.
template <typename It, typename Compare>
void sortUnique(It first, It last, Compare comp) {
  if (omp_get_max_threads() == 1)
    std::sort(first, last, comp);
  else
    __gnu_parallel::sort(first, last, comp);
}

} // namespace pandora::kernels
