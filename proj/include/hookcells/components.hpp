#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hookcells/errors.hpp"
#include "hookcells/hilbert.hpp"
#include "hookcells/hook_code.hpp"
#include "hookcells/partition.hpp"

namespace hookcells {

// The two monomial sets attached to a block degree i.
//
// border: the horizontal border monomials of degree i, in increasing y
// degree, followed (when x^i lies outside the diagram) by one vertical
// border monomial, the one with the largest y degree still strictly below
// every horizontal border monomial.  Its size is delta_i + 1.
//
// hands: the first delta_{i+1} degree-i hand monomials in increasing y
// degree, i.e. the hands that carry the parts of the hook-code block at
// degree i.
struct ComponentSets {
  std::vector<Monomial> border;
  std::vector<Monomial> hands;
};

inline ComponentSets component_sets(const Partition& P, int degree) {
  const HilbertFunction T = diagonal_lengths(P);
  if (P.empty() || degree < T.order() || degree > T.socle_degree())
    throw DegreeOutOfRange("no block at degree " + std::to_string(degree));

  ComponentSets sets;
  const BorderMonomials b = border_monomials(P, degree);
  sets.border = b.horizontal;
  if (!P.contains({degree, 0})) {
    const int ceiling = sets.border.empty() ? degree + 1
                                            : sets.border.front().ydeg;
    const Monomial* pick = nullptr;
    for (const auto& m : b.vertical)
      if (m.ydeg < ceiling && (!pick || m.ydeg > pick->ydeg)) pick = &m;
    if (!pick)
      throw Error("no vertical border monomial available at degree " +
                  std::to_string(degree));
    sets.border.push_back(*pick);
  }

  const auto row = hands(P, degree);
  const int used = T.delta(degree + 1);
  if (static_cast<int>(row.size()) < used)
    throw Error("fewer hands than block height at degree " +
                std::to_string(degree));
  sets.hands.assign(row.begin(), row.begin() + used);
  return sets;
}

// The single-block partition P_i cut out of P by the block at the given
// degree: keep exactly the columns and rows indexed by the exponents of the
// monomials in V_i1 and V_i2, delete the rest, and reread the cells that
// survive as a Ferrers diagram.
inline Partition component_partition(const Partition& P, int degree) {
  const ComponentSets sets = component_sets(P, degree);

  std::vector<int> columns;
  std::vector<int> row_indices;
  for (const auto& m : sets.border) {
    columns.push_back(m.xdeg);
    row_indices.push_back(m.ydeg);
  }
  for (const auto& m : sets.hands) {
    columns.push_back(m.xdeg);
    row_indices.push_back(m.ydeg);
  }
  std::sort(columns.begin(), columns.end());
  std::sort(row_indices.begin(), row_indices.end());

  std::vector<int> parts;
  for (int r : row_indices) {
    const int length = P.row_length(r);
    const int kept = static_cast<int>(
        std::lower_bound(columns.begin(), columns.end(), length) -
        columns.begin());
    if (kept == 0) break;
    parts.push_back(kept);
  }
  return Partition(std::move(parts));
}

struct Component {
  int degree = 0;                                    // block degree i in P
  HilbertFunction lengths = HilbertFunction::zero(); // diagonal lengths of P_i
  Partition partition;                               // P_i
  ComponentSets sets;                                // V_i1 and V_i2
};

// One component per block degree of P, in increasing degree.  Empty blocks
// come out as staircases (possibly the empty diagram), so sums over the
// entries need no special cases.
inline std::vector<Component> decompose(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  std::vector<Component> components;
  for (int i = T.order(); i <= T.socle_degree(); ++i) {
    Component entry;
    entry.degree = i;
    entry.sets = component_sets(P, i);
    entry.partition = component_partition(P, i);
    entry.lengths = diagonal_lengths(entry.partition);
    components.push_back(std::move(entry));
  }
  return components;
}

}  // namespace hookcells
