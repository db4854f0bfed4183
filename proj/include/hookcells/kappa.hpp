#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/hilbert.hpp"
#include "hookcells/hook_code.hpp"
#include "hookcells/partition.hpp"

namespace hookcells {

// Run-length view of one hook-code block together with the counting
// sequences read off it.  For parts h_1^(l_1) > ... > h_n^(l_n):
//
//   tau_k   = l_k + ... + l_n - h_k
//   g_k     = fresh generators contributed by runs k..n
//   r_k     = relations available to cancel them
//   theta_k = g_k - r_k
//
// g and r are computed twice, from the two-case description and from its
// compact closed form, and the results are compared on every call.
struct BlockCodeStats {
  int degree = 0;                   // block degree i
  std::vector<int> values;          // h_1 > ... > h_n
  std::vector<int> multiplicities;  // l_1, ..., l_n
  std::vector<int> tau;
  std::vector<int> g;
  std::vector<int> r;
  std::vector<int> theta;
};

namespace detail {

inline BlockCodeStats block_stats_from(const CodeBlock& block, int delta_i) {
  BlockCodeStats stats;
  stats.degree = block.degree;
  for (int part : block.parts) {
    if (!stats.values.empty() && stats.values.back() == part) {
      ++stats.multiplicities.back();
    } else {
      stats.values.push_back(part);
      stats.multiplicities.push_back(1);
    }
  }

  const int n = static_cast<int>(stats.values.size());
  const int h_first = stats.values.front();
  const int h_last = stats.values.back();
  if (h_first > delta_i + 1)
    throw Error("hook-code part exceeds its box width");

  std::vector<int> suffix(static_cast<std::size_t>(n) + 1, 0);
  for (int k = n - 1; k >= 0; --k)
    suffix[k] = suffix[k + 1] + stats.multiplicities[k];

  for (int k = 0; k < n; ++k) {
    stats.tau.push_back(suffix[k] - stats.values[k]);

    int g = 0;
    int r = 0;
    if (h_last > 0) {
      r = stats.values[k] - (n - k);
      if (k == 0) {
        const int c = h_first == delta_i + 1 ? stats.multiplicities[0]
                                             : stats.multiplicities[0] - 1;
        g = c + suffix[1] - (n - 1);
      } else {
        g = suffix[k] - (n - k);
      }
    } else {
      r = stats.values[k] - (n - 1 - k);
      if (k == 0) {
        const int c = h_first == delta_i + 1 ? stats.multiplicities[0]
                                             : stats.multiplicities[0] - 1;
        g = c + suffix[1] - (n - 1) + 1;
      } else {
        g = suffix[k] - (n - 1 - k);
      }
    }

    const int lift = std::max(1 - h_last, 0);
    const int compact_g = suffix[k] - (n - k) + lift +
                          (k == 0 ? std::max(h_first - delta_i, 0) : 0);
    const int compact_r = stats.values[k] - (n - k) + lift;
    if (g != compact_g || r != compact_r)
      throw Error("block statistics disagree between their two forms");

    stats.g.push_back(g);
    stats.r.push_back(r);
    stats.theta.push_back(g - r);
  }
  return stats;
}

}  // namespace detail

// Counting data of the hook-code block of P at the given degree.
inline BlockCodeStats block_stats(const Partition& P, int degree) {
  const HilbertFunction T = diagonal_lengths(P);
  const HookCode code = hook_code(P);
  const CodeBlock& block = code.block_at(degree);
  if (block.parts.empty())
    throw EmptyBlock("no hook-code parts at degree " + std::to_string(degree));
  return detail::block_stats_from(block, T.delta(degree));
}

// Number of minimal generators per degree of a generic graded ideal whose
// initial ideal is the monomial complement of P; counts run from the order
// of the diagonal lengths to the socle degree plus one.
struct GeneratorProfile {
  int start_degree = 0;
  std::vector<int> counts;

  int total() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
  }

  friend bool operator==(const GeneratorProfile&,
                         const GeneratorProfile&) = default;
};

inline GeneratorProfile beta_profile(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  const HookCode code = hook_code(P);
  GeneratorProfile profile;
  profile.start_degree = T.order();
  profile.counts.push_back(T.order() + 1 - T.t(T.order()));
  for (const auto& block : code.blocks()) {
    if (block.parts.empty()) {
      profile.counts.push_back(0);
      continue;
    }
    const auto stats = detail::block_stats_from(block, T.delta(block.degree));
    int beta = std::max(T.delta(block.degree + 1) - T.delta(block.degree), 0);
    for (int tau : stats.tau) beta = std::max(beta, tau);
    profile.counts.push_back(beta);
  }
  return profile;
}

// Minimal number of generators of a generic ideal in the cell of P.
inline int kappa(const Partition& P) { return beta_profile(P).total(); }

// Single-block closed form: for diagonal lengths (1,...,d,t) and code runs
// h_1^(l_1) > ... > h_n^(l_n), kappa = s + max{t+1-s, 0, tau_k} with
// s = d+1-t.  Staircases, which have no block at all, give d+1.
inline int kappa_single_block(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  if (!T.single_block())
    throw NotSingleBlock("diagonal lengths have more than one block");
  if (T.socle_degree() < T.order()) return T.order() + 1;

  const int d = T.order();
  const int t = T.t(d);
  const int s = d + 1 - t;
  const auto stats = block_stats(P, d);
  int extra = std::max(t + 1 - s, 0);
  for (int tau : stats.tau) extra = std::max(extra, tau);
  return s + extra;
}

inline bool is_special(const Partition& P) {
  return kappa(P) != kappa_T(diagonal_lengths(P));
}

// Number of minimal generators per degree of the monomial ideal itself,
// before any cancellation available to generic ideals in the cell: entry k
// counts the corner monomials of degree start_degree + k.
inline GeneratorProfile monomial_betti(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  const HookCode code = hook_code(P);
  GeneratorProfile profile;
  profile.start_degree = T.order();
  profile.counts.push_back(T.order() + 1 - T.t(T.order()));
  for (const auto& block : code.blocks()) {
    if (block.parts.empty()) {
      profile.counts.push_back(0);
      continue;
    }
    const auto stats = detail::block_stats_from(block, T.delta(block.degree));
    const int delta_i = T.delta(block.degree);
    const int n = static_cast<int>(stats.values.size());
    profile.counts.push_back(T.delta(block.degree + 1) - n +
                             std::max(1 - stats.values.back(), 0) +
                             std::max(stats.values.front() - delta_i, 0));
  }
  return profile;
}

// Cuts P at the first degree i where the diagonal lengths satisfy
// t_i = t_{i+1} < d.  The degree-i cells of P then form two contiguous
// stretches, one at each end of the antidiagonal; the piece under the
// stretch of length b at the x-axis keeps the full first b rows plus the
// first a columns of the rest, and the complementary piece is what remains
// after deleting those rows and columns.
inline std::vector<Partition> elementary_factors(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  int level = -1;
  for (int i = T.order(); i < T.socle_degree(); ++i)
    if (T.t(i) == T.t(i + 1) && T.t(i) < T.order()) {
      level = i;
      break;
    }
  if (level < 0) return {P};

  int a = 0;
  while (P.contains({a, level - a})) ++a;
  int b = 0;
  while (P.contains({level - b, b})) ++b;
  if (a + b != T.t(level))
    throw Error("degree " + std::to_string(level) +
                " cells of the diagram are not two contiguous stretches");

  std::vector<int> first_parts;
  for (int r = 0; r < P.rows(); ++r) {
    const int length = r < b ? P.row_length(r) : std::min(P.row_length(r), a);
    if (length == 0) break;
    first_parts.push_back(length);
  }
  std::vector<int> second_parts;
  for (int r = b; r < P.rows(); ++r) {
    const int length = P.row_length(r) - a;
    if (length <= 0) break;
    second_parts.push_back(length);
  }

  std::vector<Partition> factors =
      elementary_factors(Partition(std::move(first_parts)));
  factors.push_back(Partition(std::move(second_parts)));
  return factors;
}

}  // namespace hookcells
