#ifndef CURV_PARALLEL_HPP
#define CURV_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace curv {

// Runs fn(block_index, begin, end) over [0,n) split into a fixed number of
// blocks. The block decomposition is independent of the thread count, so
// reductions that combine per-block partials in block order are
// bit-reproducible on any machine.
inline constexpr std::size_t kParallelBlocks = 64;

template <class Fn>
void parallel_blocks(std::size_t n, Fn&& fn) {
  if (n == 0) return;
  const std::size_t nblocks = n < kParallelBlocks ? n : kParallelBlocks;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const std::size_t nthreads = hw < nblocks ? hw : nblocks;

  auto run_block = [&](std::size_t b) {
    const std::size_t lo = n * b / nblocks;
    const std::size_t hi = n * (b + 1) / nblocks;
    fn(b, lo, hi);
  };

  if (nthreads <= 1) {
    for (std::size_t b = 0; b < nblocks; ++b) run_block(b);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::atomic<std::size_t> next{0};
  for (std::size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t b = next.fetch_add(1);
        if (b >= nblocks) break;
        run_block(b);
      }
    });
  }
  for (auto& th : pool) th.join();
}

// Deterministic parallel sum of fn(i) over [0,n): per-block partials are
// accumulated sequentially, then combined in block order.
template <class Fn>
double parallel_sum(std::size_t n, Fn&& fn) {
  const std::size_t nblocks = n < kParallelBlocks ? (n ? n : 1) : kParallelBlocks;
  std::vector<double> partial(nblocks, 0.0);
  parallel_blocks(n, [&](std::size_t b, std::size_t lo, std::size_t hi) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += fn(i);
    partial[b] = s;
  });
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace curv

#endif
