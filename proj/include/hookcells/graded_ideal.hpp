#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/gf.hpp"
#include "hookcells/partition.hpp"

namespace hookcells {

// Degree-i form as its coefficient vector over the monomial basis of R_i,
// indexed by y-degree.  The initial monomial is the nonzero term of
// highest y-degree.
struct HomogeneousForm {
  int degree = 0;
  std::vector<int> coefficients;

  HomogeneousForm(int deg, std::vector<int> coeffs)
      : degree(deg), coefficients(std::move(coeffs)) {
    if (degree < 0) throw DegreeOutOfRange("form degree must be >= 0");
    if (static_cast<int>(coefficients.size()) != degree + 1)
      throw ArityMismatch("degree " + std::to_string(degree) +
                          " form needs " + std::to_string(degree + 1) +
                          " coefficients");
  }

  static HomogeneousForm monomial(const Monomial& m) {
    std::vector<int> coeffs(static_cast<std::size_t>(m.degree()) + 1, 0);
    coeffs[static_cast<std::size_t>(m.ydeg)] = 1;
    return HomogeneousForm(m.degree(), std::move(coeffs));
  }

  friend bool operator==(const HomogeneousForm&,
                         const HomogeneousForm&) = default;
};

// Per-degree reduced row-echelon bases of the ideal generated by the given
// forms, closed under multiplication by x and y up to the degree bound.
// Pivots are scanned from highest y-degree down, so the pivot monomials in
// degree i are exactly the degree-i monomials of the initial ideal.
class GradedIdealBasis {
 public:
  GradedIdealBasis(const std::vector<HomogeneousForm>& generators, int bound,
                   PrimeModulus p)
      : p_(p), bound_(bound) {
    if (bound < 0) throw DegreeOutOfRange("degree bound must be >= 0");
    rows_.resize(static_cast<std::size_t>(bound) + 1);
    fresh_.assign(static_cast<std::size_t>(bound) + 1, 0);

    std::vector<std::vector<const HomogeneousForm*>> by_degree(
        static_cast<std::size_t>(bound) + 1);
    for (const auto& g : generators) {
      if (g.degree > bound)
        throw DegreeOutOfRange("generator degree exceeds the bound");
      by_degree[static_cast<std::size_t>(g.degree)].push_back(&g);
    }

    for (int i = 0; i <= bound; ++i) {
      if (i > 0) {
        const auto previous = rows_[static_cast<std::size_t>(i - 1)];
        for (const auto& row : previous) {
          std::vector<int> by_x(static_cast<std::size_t>(i) + 1, 0);
          std::vector<int> by_y(static_cast<std::size_t>(i) + 1, 0);
          for (int s = 0; s < i; ++s) {
            by_x[static_cast<std::size_t>(s)] =
                row[static_cast<std::size_t>(s)];
            by_y[static_cast<std::size_t>(s) + 1] =
                row[static_cast<std::size_t>(s)];
          }
          insert(i, std::move(by_x));
          insert(i, std::move(by_y));
        }
      }
      for (const auto* g : by_degree[static_cast<std::size_t>(i)]) {
        std::vector<int> vec(g->coefficients.size());
        for (std::size_t s = 0; s < vec.size(); ++s)
          vec[s] = p_.reduce(g->coefficients[s]);
        if (insert(i, std::move(vec)))
          ++fresh_[static_cast<std::size_t>(i)];
      }
    }
  }

  int bound() const { return bound_; }
  const PrimeModulus& modulus() const { return p_; }

  int dimension(int degree) const {
    if (degree < 0 || degree > bound_) return 0;
    return static_cast<int>(rows_[static_cast<std::size_t>(degree)].size());
  }

  // Number of minimal generators the ideal needs in this degree: the rank
  // jump over the span of x and y times the previous degree.
  int fresh_generators(int degree) const {
    if (degree < 0 || degree > bound_) return 0;
    return fresh_[static_cast<std::size_t>(degree)];
  }

  std::vector<Monomial> pivots(int degree) const {
    std::vector<Monomial> out;
    if (degree < 0 || degree > bound_) return out;
    for (const auto& row : rows_[static_cast<std::size_t>(degree)]) {
      const int s = pivot(row);
      out.push_back({degree - s, s});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Remainder of f modulo the degree-f.degree slice; all-zero iff f lies
  // in the ideal.
  std::vector<int> reduce(const HomogeneousForm& f) const {
    if (f.degree > bound_)
      throw DegreeOutOfRange("form degree exceeds the basis bound");
    std::vector<int> vec(f.coefficients.size());
    for (std::size_t s = 0; s < vec.size(); ++s)
      vec[s] = p_.reduce(f.coefficients[s]);
    for (const auto& row : rows_[static_cast<std::size_t>(f.degree)])
      eliminate(vec, row);
    return vec;
  }

  bool contains(const HomogeneousForm& f) const {
    const auto remainder = reduce(f);
    return std::all_of(remainder.begin(), remainder.end(),
                       [](int c) { return c == 0; });
  }

 private:
  static int pivot(const std::vector<int>& vec) {
    for (int s = static_cast<int>(vec.size()) - 1; s >= 0; --s)
      if (vec[static_cast<std::size_t>(s)] != 0) return s;
    return -1;
  }

  void eliminate(std::vector<int>& vec, const std::vector<int>& row) const {
    const int q = pivot(row);
    const int c = vec[static_cast<std::size_t>(q)];
    if (c == 0) return;
    for (std::size_t s = 0; s <= static_cast<std::size_t>(q); ++s)
      vec[s] = p_.sub(vec[s], p_.mul(c, row[s]));
  }

  bool insert(int degree, std::vector<int> vec) {
    auto& slice = rows_[static_cast<std::size_t>(degree)];
    for (const auto& row : slice) eliminate(vec, row);
    const int q = pivot(vec);
    if (q < 0) return false;
    const int scale = p_.inv(vec[static_cast<std::size_t>(q)]);
    for (auto& c : vec) c = p_.mul(c, scale);
    for (auto& row : slice) {
      const int c = row[static_cast<std::size_t>(q)];
      if (c == 0) continue;
      for (std::size_t s = 0; s <= static_cast<std::size_t>(q); ++s)
        row[s] = p_.sub(row[s], p_.mul(c, vec[s]));
    }
    const auto at = std::find_if(
        slice.begin(), slice.end(),
        [&](const std::vector<int>& row) { return pivot(row) < q; });
    slice.insert(at, std::move(vec));
    return true;
  }

  std::vector<std::vector<std::vector<int>>> rows_;
  std::vector<int> fresh_;
  PrimeModulus p_;
  int bound_;
};

// Hilbert function of R modulo the span closure of the generators,
// degrees 0 through bound.
inline std::vector<int> hilbert_function(
    const std::vector<HomogeneousForm>& generators, int bound,
    PrimeModulus p) {
  const GradedIdealBasis basis(generators, bound, p);
  std::vector<int> t(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i)
    t[static_cast<std::size_t>(i)] = i + 1 - basis.dimension(i);
  return t;
}

// Monomials of the initial ideal, degree by degree.
inline std::vector<std::vector<Monomial>> initial_ideal(
    const std::vector<HomogeneousForm>& generators, int bound,
    PrimeModulus p) {
  const GradedIdealBasis basis(generators, bound, p);
  std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i)
    out[static_cast<std::size_t>(i)] = basis.pivots(i);
  return out;
}

// Minimal number of generators the ideal needs per degree.
inline std::vector<int> minimal_generator_count(
    const std::vector<HomogeneousForm>& generators, int bound,
    PrimeModulus p) {
  const GradedIdealBasis basis(generators, bound, p);
  std::vector<int> mu(static_cast<std::size_t>(bound) + 1);
  for (int i = 0; i <= bound; ++i)
    mu[static_cast<std::size_t>(i)] = basis.fresh_generators(i);
  return mu;
}

}  // namespace hookcells
