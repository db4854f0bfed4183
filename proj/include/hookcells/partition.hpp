#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/errors.hpp"

namespace hookcells {

// Monomial x^a y^b of k[x,y], stored as its exponent pair.
struct Monomial {
  int xdeg = 0;
  int ydeg = 0;

  constexpr int degree() const { return xdeg + ydeg; }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

  // Degree first, then x^i < x^{i-1}y < ... < y^i within a degree.
  friend constexpr auto operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.ydeg <=> b.ydeg;
  }

  friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.xdeg + b.xdeg, a.ydeg + b.ydeg};
  }
};

inline std::string to_string(const Monomial& m) {
  if (m.xdeg == 0 && m.ydeg == 0) return "1";
  std::ostringstream out;
  if (m.xdeg > 0) {
    out << 'x';
    if (m.xdeg > 1) out << '^' << m.xdeg;
  }
  if (m.ydeg > 0) {
    if (m.xdeg > 0) out << '*';
    out << 'y';
    if (m.ydeg > 1) out << '^' << m.ydeg;
  }
  return out.str();
}

// Partition with non-increasing positive parts.  The Ferrers diagram is read
// as a set of monomials: row r (0-based, increasing y) holds
// x^0 y^r ... x^{p_{r+1}-1} y^r.  The default-constructed value is the empty
// diagram, which arises as a degenerate component; user input never parses to
// it.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 1)
        throw InvalidShape("partition parts must be positive");
      if (k > 0 && parts_[k] > parts_[k - 1])
        throw InvalidShape("partition parts must be non-increasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int rows() const { return static_cast<int>(parts_.size()); }

  // Length of 0-based row r (p_{r+1} in 1-based notation); 0 beyond the
  // diagram.
  int row_length(int r) const {
    return r >= 0 && r < rows() ? parts_[static_cast<std::size_t>(r)] : 0;
  }

  int weight() const {
    int w = 0;
    for (int p : parts_) w += p;
    return w;
  }

  // Membership of the cell m in the diagram (m a standard monomial of C_P).
  bool contains(const Monomial& m) const {
    return m.xdeg >= 0 && m.ydeg >= 0 && m.xdeg < row_length(m.ydeg);
  }

  Partition conjugate() const {
    std::vector<int> cols;
    cols.reserve(parts_.empty() ? 0 : static_cast<std::size_t>(parts_[0]));
    for (int c = 0; c < row_length(0); ++c) {
      int n = 0;
      while (n < rows() && parts_[static_cast<std::size_t>(n)] > c) ++n;
      cols.push_back(n);
    }
    return Partition(std::move(cols));
  }

  friend bool operator==(const Partition&, const Partition&) = default;

  // Ascending lexicographic order on part sequences.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

// Hook anchored at a cell of C_P: arm u counts cells rightward from the
// corner to the end of its row inclusive, leg v counts cells downward to the
// bottom of its column inclusive.
struct Hook {
  Monomial corner;
  int arm = 0;
  int leg = 0;
  Monomial hand;  // x^{u-1} * corner, the end of the row
  Monomial foot;  // y^{v-1} * corner, the bottom of the column

  int difference() const { return arm - leg; }

  friend bool operator==(const Hook&, const Hook&) = default;
};

// Minimal monomial generators of the complement ideal E_P, by increasing
// y-degree.
inline std::vector<Monomial> corner_monomials(const Partition& P) {
  std::vector<Monomial> out;
  for (int r = 0; r < P.rows(); ++r)
    if (r == 0 || P.row_length(r - 1) > P.row_length(r))
      out.push_back({P.row_length(r), r});
  out.push_back({0, P.rows()});
  return out;
}

// Every hook of P with arm - leg = 1, scanning rows top-down and cells
// left-to-right.
inline std::vector<Hook> difference_one_hooks(const Partition& P) {
  const Partition conj = P.conjugate();
  std::vector<Hook> out;
  for (int r = 0; r < P.rows(); ++r) {
    for (int c = 0; c < P.row_length(r); ++c) {
      const int u = P.row_length(r) - c;
      const int v = conj.row_length(c) - r;
      if (u - v != 1) continue;
      out.push_back(Hook{.corner = {c, r},
                         .arm = u,
                         .leg = v,
                         .hand = {c + u - 1, r},
                         .foot = {c, r + v - 1}});
    }
  }
  return out;
}

// Degree-i border monomials of E_P: `horizontal` lies just below a standard
// monomial (x^a y^b with b > 0, x^a y^{b-1} in C_P), `vertical` just right of
// one (a > 0, x^{a-1} y^b in C_P).  Both sorted by increasing y-degree.
struct BorderMonomials {
  std::vector<Monomial> horizontal;
  std::vector<Monomial> vertical;
};

inline BorderMonomials border_monomials(const Partition& P, int degree) {
  if (degree < 0) throw DegreeOutOfRange("border degree must be >= 0");
  BorderMonomials out;
  for (int b = 0; b <= degree; ++b) {
    const Monomial m{degree - b, b};
    if (P.contains(m)) continue;
    if (b > 0 && P.contains({m.xdeg, b - 1})) out.horizontal.push_back(m);
    if (m.xdeg > 0 && P.contains({m.xdeg - 1, b})) out.vertical.push_back(m);
  }
  return out;
}

// Text format: comma-separated parts with optional exponent shorthand, e.g.
// "15,12^4,11,7,6^2,5,3^4".
inline Partition parse_partition(const std::string& text) {
  if (text.empty()) throw EmptyInput("empty partition text");
  std::vector<int> parts;
  std::size_t pos = 0;
  auto read_int = [&](const char* what) {
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start) throw ParseError(std::string("expected ") + what, start);
    long long value = 0;
    for (std::size_t k = start; k < pos; ++k) {
      value = value * 10 + (text[k] - '0');
      if (value > 1000000) throw ParseError("value too large", start);
    }
    return static_cast<int>(value);
  };
  while (true) {
    const int part = read_int("part");
    int repeat = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      repeat = read_int("exponent");
      if (repeat < 1) throw ParseError("exponent must be positive", pos);
    }
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
  }
  try {
    return Partition(std::move(parts));
  } catch (const InvalidShape& e) {
    throw ParseError(e.what(), 0);
  }
}

// Mirrors the input shorthand: runs of equal parts print as part^count.
inline std::string format_partition(const Partition& P) {
  if (P.empty()) return "-";
  std::ostringstream out;
  const auto& parts = P.parts();
  for (std::size_t k = 0; k < parts.size();) {
    std::size_t run = k;
    while (run < parts.size() && parts[run] == parts[k]) ++run;
    if (k > 0) out << ',';
    out << parts[k];
    if (run - k > 1) out << '^' << (run - k);
    k = run;
  }
  return out.str();
}

}  // namespace hookcells
