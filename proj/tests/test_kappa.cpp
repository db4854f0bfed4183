#include <map>

#include "catch2/catch_amalgamated.hpp"
#include "hookcells/components.hpp"
#include "hookcells/kappa.hpp"

using namespace hookcells;

namespace {

// Independent route to kappa for single-block diagonal lengths: strip the
// first column of the diagram and recurse.  Removing a trailing zero part
// of the code drops t by one and adds a generator; otherwise every part
// drops by one and kappa is unchanged unless it would fall below s.
int column_recursion(const HilbertFunction& T, std::vector<int> parts) {
  if (T.socle_degree() < T.order()) {
    for (int p : parts) REQUIRE(p == 0);
    return T.order() + 1;
  }
  const int d = T.order();
  const int t = T.t(d);
  const int s = d + 1 - t;
  REQUIRE(static_cast<int>(parts.size()) == t);

  std::vector<int> values;
  for (int i = 1; i < d; ++i) values.push_back(i);
  if (parts.back() == 0) {
    parts.pop_back();
    if (t - 1 > 0) values.push_back(t - 1);
    const auto bar =
        values.empty() ? HilbertFunction::zero() : HilbertFunction(values);
    return column_recursion(bar, std::move(parts)) + 1;
  }
  for (int& p : parts) --p;
  values.push_back(t);
  const int bar = column_recursion(HilbertFunction(values), std::move(parts));
  REQUIRE(bar >= s - 1);
  return std::max(bar, s);
}

int column_recursion(const Partition& P) {
  const HilbertFunction T = diagonal_lengths(P);
  std::vector<int> parts;
  if (T.socle_degree() >= T.order())
    parts = hook_code(P).block_at(T.order()).parts;
  return column_recursion(T, std::move(parts));
}

}  // namespace

TEST_CASE("kappa on worked examples") {
  CHECK(kappa(Partition{5, 3, 1}) == 2);
  CHECK(kappa(Partition{3, 3, 1, 1, 1}) == 3);
  CHECK(kappa(Partition{2, 2}) == 2);
  CHECK(kappa(parse_partition("15,12^4,11,7,6^2,5,3^4")) == 7);
  CHECK(kappa(parse_partition("10^2,4,3^2,2^5")) == 5);
  CHECK(kappa(Partition()) == 1);
  CHECK(kappa(Partition{1}) == 2);
}

TEST_CASE("kappa over the ten partitions in the 2x3 box") {
  const std::map<Partition, int> expected{
      {Partition{5, 4, 2, 1}, 3},    {Partition{5, 3, 3, 1}, 3},
      {Partition{5, 3, 2, 2}, 3},    {Partition{4, 4, 3, 1}, 3},
      {Partition{5, 3, 2, 1, 1}, 4}, {Partition{4, 4, 2, 2}, 3},
      {Partition{4, 3, 3, 2}, 4},    {Partition{4, 4, 2, 1, 1}, 4},
      {Partition{4, 3, 3, 1, 1}, 4}, {Partition{4, 3, 2, 2, 1}, 5}};
  for (const auto& [P, value] : expected) {
    CHECK(kappa(P) == value);
    CHECK(kappa_single_block(P) == value);
  }
}

TEST_CASE("single-block closed form") {
  CHECK(kappa_single_block(Partition{4, 3, 2, 2, 1}) == 5);
  CHECK(kappa_single_block(Partition{7, 7, 5, 4, 4, 3, 1, 1}) == 6);
  CHECK(kappa_single_block(Partition{3, 1}) == 2);
  CHECK(kappa_single_block(Partition{3, 2, 1}) == 4);  // staircase
  CHECK(kappa_single_block(Partition()) == 1);
  CHECK_THROWS_AS(kappa_single_block(Partition{5, 3, 1}), NotSingleBlock);
}

TEST_CASE("block statistics of a single-block code") {
  // Code (5,4,4,3): two degree-9 corner monomials survive, x^9 and x^6y^3.
  const Partition P{9, 7, 7, 6, 4, 4, 2, 1};
  CHECK(hook_code(P) == parse_code("8:5,4,4,3"));
  const auto stats = block_stats(P, 8);
  CHECK(stats.values == std::vector<int>{5, 4, 3});
  CHECK(stats.multiplicities == std::vector<int>{1, 2, 1});
  CHECK(stats.tau == std::vector<int>{-1, -1, -2});
  CHECK(stats.g.front() == 2);

  int degree9 = 0;
  for (const auto& corner : corner_monomials(P))
    if (corner.degree() == 9) ++degree9;
  CHECK(degree9 == 2);
}

TEST_CASE("block statistics of the fourteen-degree example") {
  const auto P = parse_partition("14^2,12,11^2,10,7^2,5^3,4,3,1");
  CHECK(hook_code(P) == parse_code("13:2,2,2,1,0,0;14:6,4,4,2,2,2"));

  const auto first = block_stats(P, 13);
  CHECK(first.values == std::vector<int>{2, 1, 0});
  CHECK(first.multiplicities == std::vector<int>{3, 1, 2});
  CHECK(first.tau == std::vector<int>{4, 2, 2});

  const auto second = block_stats(P, 14);
  CHECK(second.tau == std::vector<int>{0, 1, 1});
  CHECK(second.tau[1] == 1);

  const auto profile = beta_profile(P);
  CHECK(profile.start_degree == 13);
  CHECK(profile.counts == std::vector<int>{2, 5, 1});
}

TEST_CASE("block statistics reject empty or missing blocks") {
  const Partition P{2, 2, 1, 1, 1};
  CHECK_THROWS_AS(block_stats(P, 3), EmptyBlock);
  CHECK_THROWS_AS(block_stats(P, 99), DegreeOutOfRange);
}

TEST_CASE("generator profile of the seven-generator example") {
  const auto P = parse_partition("15,12^4,11,7,6^2,5,3^4");
  const auto profile = beta_profile(P);
  CHECK(profile.start_degree == 13);
  CHECK(profile.counts == std::vector<int>{4, 2, 0, 1});
  CHECK(profile.total() == 7);

  // The corner census: the monomial ideal needs one more generator, whose
  // degree-15 corner a generic deformation trades for one of degree 16.
  const auto betti = monomial_betti(P);
  CHECK(betti.counts == std::vector<int>{4, 2, 1, 1});
  CHECK(betti.total() == 8);
}

TEST_CASE("monomial betti numbers count corners by degree") {
  const auto betti = monomial_betti(Partition{9, 7, 7, 6, 4, 4, 2, 1});
  CHECK(betti.start_degree == 8);
  CHECK(betti.counts == std::vector<int>{5, 2});

  CHECK(monomial_betti(Partition{1}) == GeneratorProfile{1, {2}});
  CHECK(monomial_betti(Partition()) == GeneratorProfile{0, {1}});

  for (const auto& T : enumerate_hilbert_functions(11)) {
    for (const auto& P : enumerate_partitions(T)) {
      const auto counts = monomial_betti(P);
      std::map<int, int> by_degree;
      for (const auto& corner : corner_monomials(P))
        ++by_degree[corner.degree()];
      int sum = 0;
      for (std::size_t k = 0; k < counts.counts.size(); ++k) {
        CHECK(counts.counts[k] ==
              by_degree[counts.start_degree + static_cast<int>(k)]);
        sum += counts.counts[k];
      }
      CHECK(sum == static_cast<int>(corner_monomials(P).size()));
    }
  }
}

TEST_CASE("specialness of worked examples") {
  CHECK(is_special(Partition{3, 3, 1, 1, 1}));
  CHECK_FALSE(is_special(Partition{5, 3, 1}));
  CHECK_FALSE(is_special(Partition{5, 4, 2, 1}));
  CHECK(is_special(Partition{4, 3, 2, 2, 1}));
}

TEST_CASE("components give kappa through the block sum") {
  const auto P = parse_partition("15,12^4,11,7,6^2,5,3^4");
  CHECK(kappa_single_block(Partition{7, 7, 5, 4, 4, 3, 1, 1}) == 6);
  CHECK(kappa_single_block(Partition{8, 6, 6, 4, 3, 2, 2}) == 5);
  CHECK(kappa_single_block(Partition{6, 5, 5, 4, 2, 2}) == 5);
  CHECK(kappa(P) == 6 + 5 + 5 - (10 - 3) - (15 - 13));

  const auto Q = parse_partition("10^2,4,3^2,2^5");
  const int parts[] = {3, 2, 1, 3, 3};
  const auto components = decompose(Q);
  REQUIRE(components.size() == 5);
  for (std::size_t k = 0; k < components.size(); ++k)
    CHECK(kappa_single_block(components[k].partition) == parts[k]);
}

TEST_CASE("elementary factors of a partition") {
  const auto P = parse_partition("10^2,4,3^2,2^5");
  const auto factors = elementary_factors(P);
  REQUIRE(factors.size() == 2);
  CHECK(factors[0] == parse_partition("10^2,2^8"));
  CHECK(factors[1] == Partition{2, 1, 1});
  CHECK(kappa(factors[0]) == 3);
  CHECK(kappa(factors[1]) == 3);

  CHECK(elementary_factors(Partition{5, 4, 2, 1}) ==
        std::vector<Partition>{Partition{5, 4, 2, 1}});
}

TEST_CASE("factor diagonal lengths match the sequence factorization") {
  for (const auto& T : enumerate_hilbert_functions(12)) {
    const auto shapes = elementary_factors(T);
    for (const auto& P : enumerate_partitions(T)) {
      const auto factors = elementary_factors(P);
      REQUIRE(factors.size() == shapes.size());
      for (std::size_t k = 0; k < factors.size(); ++k)
        CHECK(diagonal_lengths(factors[k]) == shapes[k]);
    }
  }
}

TEST_CASE("three routes to kappa agree") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    for (const auto& P : enumerate_partitions(T)) {
      const int direct = kappa(P);

      int block_sum = 0;
      for (const auto& entry : decompose(P))
        block_sum += kappa_single_block(entry.partition);
      block_sum -= T.t(T.order()) - T.t(T.socle_degree());
      block_sum -= T.socle_degree() - T.order();
      CHECK(direct == block_sum);

      int factor_sum = 1;
      for (const auto& factor : elementary_factors(P))
        factor_sum += kappa(factor) - 1;
      CHECK(direct == factor_sum);
    }
  }
}

TEST_CASE("column recursion agrees with the closed form") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    if (!T.single_block()) continue;
    for (const auto& P : enumerate_partitions(T))
      CHECK(column_recursion(P) == kappa_single_block(P));
  }
}

TEST_CASE("profile invariants") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    for (const auto& P : enumerate_partitions(T)) {
      const auto profile = beta_profile(P);
      CHECK(profile.start_degree == T.order());
      CHECK(profile.counts.front() == T.order() + 1 - T.t(T.order()));
      CHECK(profile.total() == kappa(P));

      const auto betti = monomial_betti(P);
      REQUIRE(betti.counts.size() == profile.counts.size());
      for (std::size_t k = 0; k < profile.counts.size(); ++k) {
        const int i = profile.start_degree + static_cast<int>(k);
        if (k > 0)
          CHECK(profile.counts[k] >= std::max(T.delta(i) - T.delta(i - 1), 0));
        CHECK(profile.counts[k] <= betti.counts[k]);
      }
    }
  }
}

TEST_CASE("kappa bounds over a cell decomposition") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    const int floor = kappa_T(T);
    int minimum = -1;
    for (const auto& P : enumerate_partitions(T)) {
      const int value = kappa(P);
      CHECK(value >= floor);
      CHECK(value <= static_cast<int>(corner_monomials(P).size()));
      CHECK(is_special(P) == (value != floor));
      if (minimum < 0 || value < minimum) minimum = value;
    }
    CHECK(minimum == floor);
    if (T.socle_degree() >= T.order())
      CHECK(kappa(partition_from_code(maximum_code(T), T)) == floor);
  }
}

TEST_CASE("single-block range and specialness test") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    if (!T.single_block() || T.socle_degree() < T.order()) continue;
    const int d = T.order();
    const int t = T.t(d);
    const int s = d + 1 - t;
    const int delta = std::max(t + 1 - s, 0);
    for (const auto& P : enumerate_partitions(T)) {
      const int value = kappa_single_block(P);
      CHECK(value >= s + delta);
      CHECK(value <= s + t);

      const auto stats = block_stats(P, d);
      const bool tau_exceeds =
          std::any_of(stats.tau.begin(), stats.tau.end(),
                      [&](int tau) { return tau > delta; });
      CHECK(is_special(P) == tau_exceeds);
    }
  }
}

TEST_CASE("specialness is detected on the components") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    for (const auto& P : enumerate_partitions(T)) {
      bool component_special = false;
      for (const auto& entry : decompose(P))
        if (is_special(entry.partition)) component_special = true;
      CHECK(is_special(P) == component_special);
    }
  }
}

TEST_CASE("run statistics are monotone and sized by the deltas") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    for (const auto& P : enumerate_partitions(T)) {
      for (int i = T.order(); i <= T.socle_degree(); ++i) {
        if (T.delta(i + 1) == 0) continue;
        const auto stats = block_stats(P, i);
        int parts = 0;
        for (int l : stats.multiplicities) parts += l;
        CHECK(parts == T.delta(i + 1));
        CHECK(stats.values.front() <= T.delta(i) + 1);
        for (std::size_t k = 1; k < stats.g.size(); ++k) {
          CHECK(stats.g[k - 1] >= stats.g[k]);
          CHECK(stats.r[k - 1] >= stats.r[k]);
        }
      }
    }
  }
}

TEST_CASE("generic blocks keep the box statistics") {
  for (const auto& T : enumerate_hilbert_functions(11)) {
    if (T.socle_degree() < T.order()) continue;
    const auto P = partition_from_code(maximum_code(T), T);
    for (int i = T.order(); i <= T.socle_degree(); ++i) {
      if (T.delta(i + 1) == 0) continue;
      const auto stats = block_stats(P, i);
      CHECK(stats.g.front() == T.delta(i + 1));
      CHECK(stats.r.front() == T.delta(i));
    }
  }
}
