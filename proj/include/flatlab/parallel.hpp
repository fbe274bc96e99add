#ifndef FLATLAB_PARALLEL_HPP
#define FLATLAB_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace flatlab::parallel {

/// Process-wide cap on worker threads (0 = hardware concurrency).
void set_max_threads(unsigned threads);
unsigned max_threads();

/// Runs body(begin, end) over fixed-size chunks of [0, n). Chunk boundaries
/// depend only on n and chunk_size, never on the thread count, so any
/// per-chunk results are schedule independent.
void for_chunks(std::size_t n, std::size_t chunk_size,
                const std::function<void(std::size_t, std::size_t)>& body);

/// Sum of term(i) over [0, n): per-chunk partial sums combined in chunk
/// order, giving bit-identical results for every thread count.
template <class Term>
double ordered_sum(std::size_t n, Term term, std::size_t chunk_size = 1 << 14) {
  const std::size_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<double> partial(chunks, 0.0);
  for_chunks(n, chunk_size, [&](std::size_t begin, std::size_t end) {
    double s = 0.0;
    for (std::size_t i = begin; i < end; ++i) s += term(i);
    partial[begin / chunk_size] = s;
  });
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

template <class Value>
double ordered_max(std::size_t n, Value value, std::size_t chunk_size = 1 << 14) {
  const std::size_t chunks = (n + chunk_size - 1) / chunk_size;
  std::vector<double> partial(chunks, 0.0);
  for_chunks(n, chunk_size, [&](std::size_t begin, std::size_t end) {
    double m = 0.0;
    for (std::size_t i = begin; i < end; ++i) m = std::max(m, value(i));
    partial[begin / chunk_size] = m;
  });
  double best = 0.0;
  for (double m : partial) best = std::max(best, m);
  return best;
}

}  // namespace flatlab::parallel

#endif  // FLATLAB_PARALLEL_HPP
