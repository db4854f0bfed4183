#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/partition.hpp"

namespace hookcells {

// Diagonal-length sequence (1, 2, ..., d, t_d, ..., t_j) with
// d >= t_d >= ... >= t_j > 0: the Hilbert function of a graded Artinian
// quotient of k[x,y].  Trailing zeros are stripped on construction.  The
// degenerate zero() value (empty sequence, the zero diagram) only arises
// internally for empty components.
class HilbertFunction {
 public:
  explicit HilbertFunction(std::vector<int> values) : t_(std::move(values)) {
    while (!t_.empty() && t_.back() == 0) t_.pop_back();
    if (t_.empty()) throw EmptyInput("empty diagonal-length sequence");
    validate();
  }

  static HilbertFunction zero() { return HilbertFunction(zero_tag{}); }

  bool is_zero() const { return t_.empty(); }

  // The order d: largest index with t_{d-1} = d (0 for the zero sequence).
  int order() const { return d_; }

  // The socle degree j: last index with t_j > 0 (-1 for the zero sequence).
  int socle_degree() const { return static_cast<int>(t_.size()) - 1; }

  // t_i, 0 outside [0, j].
  int t(int i) const {
    return i >= 0 && i <= socle_degree() ? t_[static_cast<std::size_t>(i)] : 0;
  }

  // First difference t_{i-1} - t_i, meaningful for i in [d, j+1]; the
  // conventions t_{d-1} = d and t_{j+1} = 0 hold automatically.
  int delta(int i) const { return t(i - 1) - t(i); }

  const std::vector<int>& values() const { return t_; }

  int weight() const {
    int w = 0;
    for (int v : t_) w += v;
    return w;
  }

  // Whether the sequence is (1, ..., d) or (1, ..., d, t): at most one block.
  bool single_block() const { return socle_degree() <= order(); }

  struct Box {
    int height;  // delta(i+1)
    int width;   // 1 + delta(i)
    friend bool operator==(const Box&, const Box&) = default;
  };

  // Box of degree i, for i in [order, socle_degree].
  Box box(int i) const {
    if (i < order() || i > socle_degree())
      throw DegreeOutOfRange("box degree outside [order, socle degree]");
    return Box{delta(i + 1), 1 + delta(i)};
  }

  friend bool operator==(const HilbertFunction&, const HilbertFunction&) =
      default;

 private:
  struct zero_tag {};
  explicit HilbertFunction(zero_tag) {}

  void validate() {
    if (t_[0] != 1)
      throw NonUnimodalShape("diagonal lengths must start with 1");
    const int n = static_cast<int>(t_.size());
    d_ = n;
    for (int i = 0; i < n; ++i) {
      if (t(i) != i + 1) {
        d_ = i;
        break;
      }
    }
    if (d_ < n && t(d_) > d_)
      throw NonUnimodalShape("value t_d exceeds the order d");
    for (int i = d_; i < n; ++i) {
      if (t(i) < 1 || (i > d_ && t(i) > t(i - 1)))
        throw NonUnimodalShape("tail must be non-increasing and positive");
    }
  }

  std::vector<int> t_;
  int d_ = 0;
};

inline HilbertFunction diagonal_lengths(const Partition& P) {
  if (P.empty()) return HilbertFunction::zero();
  std::vector<int> t;
  for (int r = 0; r < P.rows(); ++r) {
    const int len = P.row_length(r);
    if (static_cast<int>(t.size()) < r + len) t.resize(r + len, 0);
    for (int i = r; i < r + len; ++i) ++t[static_cast<std::size_t>(i)];
  }
  return HilbertFunction(std::move(t));
}

// delta_d, ..., delta_{j+1}.
inline std::vector<int> deltas(const HilbertFunction& T) {
  std::vector<int> out;
  for (int i = T.order(); i <= T.socle_degree() + 1; ++i)
    out.push_back(T.delta(i));
  return out;
}

// Generic minimal generator count over all diagonal lengths T:
// 1 + delta_d + sum over i in [d, j] of [delta_{i+1} - delta_i]^+.
inline int kappa_T(const HilbertFunction& T) {
  int k = 1 + T.delta(T.order());
  for (int i = T.order(); i <= T.socle_degree(); ++i)
    k += std::max(0, T.delta(i + 1) - T.delta(i));
  return k;
}

// Dimension of the variety of graded ideals with Hilbert function T:
// sum over i in [d, j] of (delta_i + 1) * delta_{i+1}.
inline long long dim_GT(const HilbertFunction& T) {
  long long dim = 0;
  for (int i = T.order(); i <= T.socle_degree(); ++i)
    dim += static_cast<long long>(T.delta(i) + 1) * T.delta(i + 1);
  return dim;
}

// Per-degree single-block shapes T_i = (1, ..., d_i, delta_{i+1}) with
// d_i = delta_i + delta_{i+1}, for i in [d, j].  A block with
// delta_i = delta_{i+1} = 0 yields the zero sequence.
inline std::vector<std::pair<int, HilbertFunction>> single_block_components(
    const HilbertFunction& T) {
  std::vector<std::pair<int, HilbertFunction>> out;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    const int di = T.delta(i) + T.delta(i + 1);
    if (di == 0) {
      out.emplace_back(i, HilbertFunction::zero());
      continue;
    }
    std::vector<int> values;
    for (int u = 1; u <= di; ++u) values.push_back(u);
    values.push_back(T.delta(i + 1));
    out.emplace_back(i, HilbertFunction(std::move(values)));
  }
  return out;
}

// One factorization step at the first maximal constant run
// t_i = ... = t_{i+k} = s < d; `level` records s.
struct ElementarySplit {
  HilbertFunction first;
  HilbertFunction second;
  int level;
};

inline std::optional<ElementarySplit> elementary_split(
    const HilbertFunction& T) {
  const int d = T.order(), j = T.socle_degree();
  for (int i = d; i < j; ++i) {
    const int s = T.t(i);
    if (T.t(i + 1) != s || s >= d) continue;
    int end = i + 1;
    while (end < j && T.t(end + 1) == s) ++end;
    std::vector<int> first;
    for (int u = 0; u < s; ++u) first.push_back(u + 1);
    for (int u = s; u <= end; ++u) first.push_back(s);
    for (int u = end + 1; u <= j; ++u) first.push_back(T.t(u));
    std::vector<int> second;
    for (int u = s; u < i; ++u) second.push_back(T.t(u) - s);
    return ElementarySplit{HilbertFunction(std::move(first)),
                           HilbertFunction(std::move(second)), s};
  }
  return std::nullopt;
}

// Inverse of elementary_split: re-insert `second` into `first` at `level`.
inline HilbertFunction splice(const HilbertFunction& first,
                              const HilbertFunction& second, int level) {
  const int j2 = second.socle_degree();
  std::vector<int> values;
  const int top = std::max(first.socle_degree(), level + j2 + 1);
  for (int u = 0; u <= top; ++u) {
    if (u >= level && u <= level + j2 + 1)
      values.push_back(level + second.t(u - level));
    else
      values.push_back(first.t(u));
  }
  return HilbertFunction(std::move(values));
}

// Factor T at every constant run t_i = t_{i+1} = s < d; returns (T) itself
// when T has none.
inline std::vector<HilbertFunction> elementary_factors(
    const HilbertFunction& T) {
  if (auto split = elementary_split(T)) {
    auto out = elementary_factors(split->first);
    out.push_back(split->second);
    return out;
  }
  return {T};
}

// All partitions with diagonal lengths T, in descending lexicographic order
// on part sequences.
inline std::vector<Partition> enumerate_partitions(const HilbertFunction& T) {
  if (T.is_zero()) return {Partition()};
  const int n = T.socle_degree() + 1;
  std::vector<int> remaining(T.values().begin(), T.values().end());
  std::vector<int> current;
  std::vector<Partition> out;

  auto all_done = [&] {
    for (int v : remaining)
      if (v != 0) return false;
    return true;
  };

  auto dfs = [&](auto&& self, int row, int prev) -> void {
    if (all_done()) {
      out.push_back(Partition(current));
      return;
    }
    if (row >= n || remaining[static_cast<std::size_t>(row)] == 0) return;
    int longest = 0;
    while (longest < prev && row + longest < n &&
           remaining[static_cast<std::size_t>(row + longest)] > 0)
      ++longest;
    for (int p = longest; p >= 1; --p) {
      for (int q = 0; q < p; ++q) --remaining[static_cast<std::size_t>(row + q)];
      current.push_back(p);
      self(self, row + 1, p);
      current.pop_back();
      for (int q = 0; q < p; ++q) ++remaining[static_cast<std::size_t>(row + q)];
    }
  };
  dfs(dfs, 0, n);
  return out;
}

// All valid diagonal-length sequences of weight at most max_weight (and at
// least 1), ordered by weight then lexicographically.
inline std::vector<HilbertFunction> enumerate_hilbert_functions(
    int max_weight) {
  std::vector<HilbertFunction> out;
  std::vector<int> values;
  auto emit_tails = [&](auto&& self, int d, int weight, int last) -> void {
    if (weight > max_weight) return;
    if (!values.empty()) out.push_back(HilbertFunction(values));
    for (int t = last; t >= 1; --t) {
      values.push_back(t);
      self(self, d, weight + t, t);
      values.pop_back();
    }
  };
  for (int d = 1; ; ++d) {
    const int staircase = d * (d + 1) / 2;
    if (staircase > max_weight) break;
    values.clear();
    for (int u = 1; u <= d; ++u) values.push_back(u);
    // Tail values t_d <= d; t_d = d is allowed but t_d = d with d the order
    // requires the staircase reading, handled by validation either way.
    emit_tails(emit_tails, d, staircase, d);
  }
  std::sort(out.begin(), out.end(),
            [](const HilbertFunction& a, const HilbertFunction& b) {
              if (a.weight() != b.weight()) return a.weight() < b.weight();
              return a.values() < b.values();
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Text format: comma-separated values with an optional trailing ",0".
inline HilbertFunction parse_hilbert(const std::string& text) {
  if (text.empty()) throw EmptyInput("empty diagonal-length text");
  std::vector<int> values;
  std::size_t pos = 0;
  while (true) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError("expected value", start);
    long long value = 0;
    for (std::size_t k = start; k < pos; ++k) {
      value = value * 10 + (text[k] - '0');
      if (value > 1000000) throw ParseError("value too large", start);
    }
    values.push_back(static_cast<int>(value));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  return HilbertFunction(std::move(values));
}

inline std::string format_hilbert(const HilbertFunction& T) {
  if (T.is_zero()) return "0";
  std::ostringstream out;
  for (std::size_t k = 0; k < T.values().size(); ++k) {
    if (k > 0) out << ',';
    out << T.values()[k];
  }
  return out.str();
}

}  // namespace hookcells
