#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/hilbert.hpp"

namespace hookcells {

// Counts grow as products of binomials, which leave 64-bit range already
// for moderate diagonal lengths.
using Count = boost::multiprecision::cpp_int;

// Binomial coefficient with out-of-range lower index mapped to zero; the
// per-block special counts rely on that convention.
inline Count binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count value = 1;
  for (int u = 1; u <= k; ++u) {
    value *= n - k + u;
    value /= u;
  }
  return value;
}

// Number of partitions of diagonal lengths T: one independent binomial
// choice per block.
inline Count count_partitions(const HilbertFunction& T) {
  Count total = 1;
  for (int i = T.order(); i <= T.socle_degree(); ++i)
    total *= binomial(T.t(i - 1) - T.t(i + 1) + 1, T.t(i) - T.t(i + 1));
  return total;
}

namespace detail {

// Inclusive range of attainable kappa values for single-block diagonal
// lengths, [s + delta, s + t].  Staircases (t = 0) collapse it to the
// single point d + 1.
struct KappaWindow {
  int low = 0;
  int high = 0;
};

inline KappaWindow kappa_window(const HilbertFunction& T) {
  const int d = T.order();
  const int t = T.t(d);
  const int s = d + 1 - t;
  const int delta = std::max(t + 1 - s, 0);
  return {s + delta, s + t};
}

}  // namespace detail

// Number of single-block partitions of diagonal lengths T with the given
// generator count.  The bottom of the window collects everything generic;
// above it the counts telescope, so the tail count of kappa >= k is a
// single binomial.
inline Count mu_single(const HilbertFunction& T, int k) {
  if (!T.single_block())
    throw NotSingleBlock("mu_single needs single-block diagonal lengths");
  const int d = T.order();
  const int t = T.t(d);
  const int s = d + 1 - t;
  const auto window = detail::kappa_window(T);
  if (k == window.low)
    return binomial(s + t, s) - binomial(s + t, window.low + 1);
  if (k > window.low && k <= window.high)
    return binomial(s + t, k) - binomial(s + t, k + 1);
  return 0;
}

// Distribution of the generator count over all partitions of diagonal
// lengths T.  counts[u] is the number of partitions with kappa = start + u;
// start is the generic value, so special = total - counts[0].
struct KappaDistribution {
  int start = 0;
  std::vector<Count> counts;
  Count total;
  Count special;

  Count at(int k) const {
    const int u = k - start;
    if (u < 0 || u >= static_cast<int>(counts.size())) return 0;
    return counts[static_cast<std::size_t>(u)];
  }

  friend bool operator==(const KappaDistribution&,
                         const KappaDistribution&) = default;
};

// Convolution over the blocks: a partition is a free choice of one
// single-block partition per block, and kappa is the sum of the component
// values minus the fixed overlap correction.
inline KappaDistribution kappa_distribution(const HilbertFunction& T) {
  int low = 0;
  std::vector<Count> poly{Count(1)};
  for (const auto& [degree, shape] : single_block_components(T)) {
    const auto window = detail::kappa_window(shape);
    std::vector<Count> values;
    for (int k = window.low; k <= window.high; ++k)
      values.push_back(mu_single(shape, k));
    std::vector<Count> next(poly.size() + values.size() - 1);
    for (std::size_t a = 0; a < poly.size(); ++a)
      for (std::size_t b = 0; b < values.size(); ++b)
        next[a + b] += poly[a] * values[b];
    poly = std::move(next);
    low += window.low;
  }

  const int d = T.order();
  const int j = T.socle_degree();
  const int shift = (T.t(d) - d) - (T.t(j) - j);

  KappaDistribution dist;
  dist.start = low - shift;
  dist.counts = std::move(poly);
  dist.total = 0;
  for (const auto& c : dist.counts) dist.total += c;
  dist.special = dist.total - dist.counts.front();
  return dist;
}

// Number of partitions of diagonal lengths T with the given generator
// count.
inline Count mu(const HilbertFunction& T, int k) {
  return kappa_distribution(T).at(k);
}

// Number of special partitions of diagonal lengths T.  A partition is
// special exactly when some block component is, so the alternating sum
// over subsets of blocks collapses to a product over blocks.
inline Count count_special(const HilbertFunction& T) {
  Count generic = 1;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const int width = T.t(i - 1) - T.t(i + 1) + 1;
    const int height = T.t(i) - T.t(i + 1);
    const int delta = std::max(2 * T.t(i) - T.t(i + 1) - T.t(i - 1), 0);
    const Count block_total = binomial(width, height);
    const Count block_special = binomial(width, height - delta - 1);
    generic *= block_total - block_special;
  }
  return count_partitions(T) - generic;
}

// Diagonal lengths whose generic partition is a complete intersection
// Jordan type: the full staircase profile either peaks at d once (k = 0)
// or holds it on a plateau of length k >= 2.
inline HilbertFunction ci_jordan_shape(int d, int k) {
  if (d < 2) throw InvalidShape("complete intersection shape needs d >= 2");
  if (k != 0 && k < 2)
    throw InvalidShape("plateau length must be 0 (sharp peak) or at least 2");
  std::vector<int> values;
  for (int u = 1; u <= d; ++u) values.push_back(u);
  for (int u = 1; u < std::max(k, 1); ++u) values.push_back(d);
  for (int u = d - 1; u >= 1; --u) values.push_back(u);
  return HilbertFunction(std::move(values));
}

// Number of complete intersection Jordan types of the shape above: the
// non-special partitions, 2^{d-1} for the sharp peak and 2^d otherwise.
inline Count ci_jordan_count(int d, int k) {
  const auto T = ci_jordan_shape(d, k);
  return count_partitions(T) - count_special(T);
}

}  // namespace hookcells
