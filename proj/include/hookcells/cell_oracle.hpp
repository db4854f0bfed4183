#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hookcells/gf.hpp"
#include "hookcells/graded_ideal.hpp"
#include "hookcells/hilbert.hpp"

namespace hookcells {

// Reduced-tail coordinates around the monomial ideal of P: one generator
// per corner monomial, one free coefficient per standard monomial of the
// same degree and strictly lower y-degree.  The ideals of the cell are
// exactly the accepted points of this parameter space, but usually a
// proper subvariety of it.
struct CellParametrization {
  std::vector<Monomial> corners;
  std::vector<std::vector<Monomial>> tails;
  int parameters = 0;
};

inline CellParametrization cell_parametrization(const Partition& P) {
  CellParametrization out;
  out.corners = corner_monomials(P);
  for (const auto& corner : out.corners) {
    std::vector<Monomial> tail;
    for (int s = 0; s < corner.ydeg; ++s) {
      const Monomial m{corner.degree() - s, s};
      if (P.contains(m)) tail.push_back(m);
    }
    out.parameters += static_cast<int>(tail.size());
    out.tails.push_back(std::move(tail));
  }
  return out;
}

// Generator system for one coefficient tuple, flattened corner by corner.
inline std::vector<HomogeneousForm> cell_generators(
    const CellParametrization& shape, const std::vector<int>& tuple) {
  if (static_cast<int>(tuple.size()) != shape.parameters)
    throw ArityMismatch("tuple length does not match the parameter count");
  std::vector<HomogeneousForm> out;
  std::size_t next = 0;
  for (std::size_t k = 0; k < shape.corners.size(); ++k) {
    auto f = HomogeneousForm::monomial(shape.corners[k]);
    for (const auto& m : shape.tails[k])
      f.coefficients[static_cast<std::size_t>(m.ydeg)] = tuple[next++];
    out.push_back(std::move(f));
  }
  return out;
}

struct CellPoint {
  std::vector<int> coefficients;
  std::vector<HomogeneousForm> generators;
};

struct CellScan {
  int prime = 0;
  bool exhaustive = false;
  long long tuples_tested = 0;
  long long accepted = 0;
};

// Runs the acceptance test over the parameter space of P: exhaustively if
// the tuple count fits the budget, otherwise by uniform sampling.  A tuple
// is accepted when the resulting ideal has the Hilbert function of P,
// which pins its initial ideal to the monomial ideal of P.  The visitor
// receives each accepted point together with its echelon bases.
template <typename Visit>
CellScan scan_cell(const Partition& P, PrimeModulus p, long long budget,
                   Visit&& visit, std::uint64_t seed = 1) {
  const HilbertFunction T = diagonal_lengths(P);
  const int bound = T.socle_degree() + 1;
  if (p.value() <= T.socle_degree())
    throw InvalidModulus("modulus must exceed the socle degree " +
                         std::to_string(T.socle_degree()));
  if (budget < 1) throw BudgetExhausted("budget must be at least 1");

  const auto shape = cell_parametrization(P);
  long long space = 1;
  bool exhaustive = true;
  for (int k = 0; k < shape.parameters; ++k) {
    space *= p.value();
    if (space > budget) {
      exhaustive = false;
      break;
    }
  }

  CellScan scan;
  scan.prime = p.value();
  scan.exhaustive = exhaustive;

  const auto test = [&](const std::vector<int>& tuple) {
    CellPoint point{tuple, cell_generators(shape, tuple)};
    const GradedIdealBasis basis(point.generators, bound, p);
    ++scan.tuples_tested;
    for (int i = 0; i <= bound; ++i)
      if (i + 1 - basis.dimension(i) != T.t(i)) return;
    ++scan.accepted;
    visit(point, basis);
  };

  std::vector<int> tuple(static_cast<std::size_t>(shape.parameters), 0);
  if (exhaustive) {
    for (;;) {
      test(tuple);
      std::size_t k = 0;
      while (k < tuple.size() && ++tuple[k] == p.value()) tuple[k++] = 0;
      if (k == tuple.size()) break;
    }
  } else {
    // Plain modulo draw: the bias is negligible for small p and, unlike
    // std::uniform_int_distribution, reproducible across standard
    // libraries.
    std::mt19937_64 rng(seed);
    const auto modulus = static_cast<std::uint64_t>(p.value());
    for (long long n = 0; n < budget; ++n) {
      for (auto& c : tuple) c = static_cast<int>(rng() % modulus);
      test(tuple);
    }
  }

  if (scan.accepted == 0)
    throw BudgetExhausted("no accepted point among " +
                          std::to_string(scan.tuples_tested) +
                          " tuples over GF(" + std::to_string(p.value()) +
                          ")");
  return scan;
}

inline std::vector<CellPoint> cell_points(const Partition& P, PrimeModulus p,
                                          long long budget,
                                          std::uint64_t seed = 1) {
  std::vector<CellPoint> out;
  scan_cell(
      P, p, budget,
      [&](const CellPoint& point, const GradedIdealBasis&) {
        out.push_back(point);
      },
      seed);
  return out;
}

// Generator count of a generic ideal in the cell of P, measured as the
// minimum over accepted points; the count is upper-semicontinuous, so the
// minimum is the generic value once a generic point has been visited.
struct OracleCount {
  int prime = 0;
  bool exhaustive = false;
  long long tuples_tested = 0;
  long long accepted = 0;
  int total = 0;
  std::vector<int> profile;
};

inline OracleCount oracle_kappa_at(const Partition& P, PrimeModulus p,
                                   long long budget, std::uint64_t seed = 1) {
  OracleCount best;
  bool first = true;
  const auto scan = scan_cell(
      P, p, budget,
      [&](const CellPoint&, const GradedIdealBasis& basis) {
        std::vector<int> profile(static_cast<std::size_t>(basis.bound()) + 1);
        int total = 0;
        for (int i = 0; i <= basis.bound(); ++i) {
          profile[static_cast<std::size_t>(i)] = basis.fresh_generators(i);
          total += basis.fresh_generators(i);
        }
        if (first || std::pair(total, profile) <
                         std::pair(best.total, best.profile)) {
          best.total = total;
          best.profile = std::move(profile);
          first = false;
        }
      },
      seed);
  best.prime = scan.prime;
  best.exhaustive = scan.exhaustive;
  best.tuples_tested = scan.tuples_tested;
  best.accepted = scan.accepted;
  return best;
}

inline PrimeModulus starting_prime(const Partition& P) {
  return next_prime(std::max(4, diagonal_lengths(P).socle_degree()));
}

// Retries with the next prime until the minimum is stable across two
// consecutive primes; the stable value stands in for the generic count
// over an infinite field.
inline OracleCount oracle_kappa(const Partition& P, PrimeModulus p,
                                long long budget, std::uint64_t seed = 1) {
  OracleCount previous = oracle_kappa_at(P, p, budget, seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    p = next_prime(p.value());
    OracleCount current = oracle_kappa_at(P, p, budget, seed);
    current.tuples_tested += previous.tuples_tested;
    current.accepted += previous.accepted;
    if (current.total == previous.total && current.profile == previous.profile)
      return current;
    previous = std::move(current);
  }
  throw BudgetExhausted("generator count did not stabilize across primes");
}

inline OracleCount oracle_kappa(const Partition& P, long long budget,
                                std::uint64_t seed = 1) {
  return oracle_kappa(P, starting_prime(P), budget, seed);
}

// Degree-d forms f_0, ..., f_m with consecutive leading monomials
// x^{m-i} y^{d-m+i} whose pairwise relations x f_{i+1} - y f_i land on the
// degree-(d+1) targets: target i enters the ideal exactly when lambda_i
// is nonzero.
inline std::vector<HomogeneousForm> kick_off_generators(
    int d, int m, const std::vector<int>& lambdas,
    const std::vector<Monomial>& targets, PrimeModulus p) {
  if (m < 0 || 2 * m > d)
    throw DegreeTooSmall("need 2m <= d to chain " + std::to_string(m + 1) +
                         " consecutive leading monomials in degree " +
                         std::to_string(d));
  if (static_cast<int>(lambdas.size()) != m ||
      static_cast<int>(targets.size()) != m)
    throw ArityMismatch("need exactly m lambdas and m targets");
  for (int k = 0; k < m; ++k) {
    const auto& N = targets[static_cast<std::size_t>(k)];
    if (N.xdeg + N.ydeg != d + 1)
      throw InvalidShape("targets must have degree d + 1");
    if (N.ydeg < 0 || N.ydeg >= d - m)
      throw InvalidShape("target y-degrees must lie in [0, d - m)");
    if (k > 0 && targets[static_cast<std::size_t>(k - 1)].ydeg >= N.ydeg)
      throw InvalidShape("target y-degrees must strictly increase");
  }

  // u starts as y^{d-m} and keeps lowest-x coefficient 1, so the leading
  // monomial of f_i stays x^{m-i} y^{d-m+i}.
  std::vector<int> u(static_cast<std::size_t>(d - m) + 1, 0);
  u.back() = 1;

  const auto with_x_shift = [&](const std::vector<int>& v, int deg) {
    std::vector<int> coeffs(static_cast<std::size_t>(deg) + 1, 0);
    std::copy(v.begin(), v.end(), coeffs.begin());
    return coeffs;
  };

  std::vector<HomogeneousForm> forms;
  forms.emplace_back(d, with_x_shift(u, d));
  for (int i = 0; i < m; ++i) {
    if (i >= 1)
      u[static_cast<std::size_t>(
          targets[static_cast<std::size_t>(i - 1)].ydeg)] =
          p.add(u[static_cast<std::size_t>(
                    targets[static_cast<std::size_t>(i - 1)].ydeg)],
                lambdas[static_cast<std::size_t>(i - 1)]);
    u.insert(u.begin(), 0);
    auto coeffs = with_x_shift(u, d);
    const int beta = targets[static_cast<std::size_t>(i)].ydeg;
    coeffs[static_cast<std::size_t>(beta)] =
        p.add(coeffs[static_cast<std::size_t>(beta)],
              lambdas[static_cast<std::size_t>(i)]);
    forms.emplace_back(d, std::move(coeffs));
  }
  return forms;
}

}  // namespace hookcells
