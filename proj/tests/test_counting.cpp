#include <map>

#include "catch2/catch_amalgamated.hpp"
#include "hookcells/counting.hpp"
#include "hookcells/kappa.hpp"

using namespace hookcells;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == Count("118264581564861424"));
}

TEST_CASE("partition counts") {
  CHECK(count_partitions(HilbertFunction({1, 2, 3, 4, 2})) == 10);
  CHECK(count_partitions(HilbertFunction({1, 2, 3, 2, 1})) == 9);
  CHECK(count_partitions(HilbertFunction({1, 1})) == 2);
  CHECK(count_partitions(HilbertFunction({1, 2, 3})) == 1);
  CHECK(count_partitions(HilbertFunction::zero()) == 1);
}

TEST_CASE("partition counts leave 64-bit range") {
  std::vector<int> values;
  for (int u = 1; u <= 60; ++u) values.push_back(u);
  values.push_back(30);
  values.push_back(15);
  const HilbertFunction T(std::move(values));
  CHECK(count_partitions(T) == Count("153798066882952066080"));
}

TEST_CASE("single-block distribution") {
  const HilbertFunction T({1, 2, 3, 4, 2});
  CHECK(mu_single(T, 3) == 5);
  CHECK(mu_single(T, 4) == 4);
  CHECK(mu_single(T, 5) == 1);
  CHECK(mu_single(T, 2) == 0);
  CHECK(mu_single(T, 6) == 0);
  CHECK_THROWS_AS(mu_single(HilbertFunction({1, 2, 3, 2, 1}), 3),
                  NotSingleBlock);

  // Staircases have a one-point distribution.
  CHECK(mu_single(HilbertFunction({1, 2, 3}), 4) == 1);
  CHECK(mu_single(HilbertFunction({1, 2, 3}), 3) == 0);
  CHECK(mu_single(HilbertFunction::zero(), 1) == 1);
}

TEST_CASE("single-block tail counts telescope to one binomial") {
  for (const auto& T : enumerate_hilbert_functions(12)) {
    if (!T.single_block()) continue;
    const int d = T.order();
    const int t = T.t(d);
    const int s = d + 1 - t;
    CHECK(count_partitions(T) == binomial(s + t, t));
    const auto window = detail::kappa_window(T);
    for (int k = window.low + 1; k <= window.high; ++k) {
      Count tail = 0;
      for (int u = k; u <= window.high; ++u) tail += mu_single(T, u);
      CHECK(tail == binomial(s + t, k));
    }
  }
}

TEST_CASE("distribution over the ten partitions in the 2x3 box") {
  const auto dist = kappa_distribution(HilbertFunction({1, 2, 3, 4, 2}));
  CHECK(dist.start == 3);
  CHECK(dist.counts == std::vector<Count>{5, 4, 1});
  CHECK(dist.total == 10);
  CHECK(dist.special == 5);
  CHECK(dist.at(2) == 0);
  CHECK(dist.at(5) == 1);
  CHECK(dist.at(6) == 0);
}

TEST_CASE("special counts") {
  CHECK(count_special(HilbertFunction({1, 2, 3, 4, 2})) == 5);
  CHECK(count_special(HilbertFunction({1, 2, 3, 2, 1})) == 5);  // 3^2 - 2^2
  CHECK(count_special(HilbertFunction({1, 2, 3})) == 0);
  CHECK(count_special(HilbertFunction({1, 2, 2})) == 0);
  CHECK(count_special(HilbertFunction({1, 2, 2, 2, 1})) == 2);
}

TEST_CASE("sharp-peak distribution matches the closed form") {
  const auto T = ci_jordan_shape(3, 0);
  CHECK(T == HilbertFunction({1, 2, 3, 2, 1}));
  CHECK(mu(T, 2) == 4);
  CHECK(count_partitions(T) == 9);
}

TEST_CASE("complete intersection counts") {
  CHECK(ci_jordan_count(4, 0) == 8);
  CHECK(ci_jordan_count(3, 2) == 8);
  CHECK(ci_jordan_count(2, 0) == 2);
  CHECK_THROWS_AS(ci_jordan_count(1, 0), InvalidShape);
  CHECK_THROWS_AS(ci_jordan_count(3, 1), InvalidShape);
  CHECK_THROWS_AS(ci_jordan_count(3, -1), InvalidShape);

  for (int d = 2; d <= 8; ++d) {
    CHECK(ci_jordan_count(d, 0) == Count(1) << (d - 1));
    for (int k : {2, 3, 5}) CHECK(ci_jordan_count(d, k) == Count(1) << d);
  }
}

TEST_CASE("plateau shapes are built as stated") {
  CHECK(ci_jordan_shape(3, 2) == HilbertFunction({1, 2, 3, 3, 2, 1}));
  CHECK(ci_jordan_shape(2, 4) == HilbertFunction({1, 2, 2, 2, 2, 1}));
  CHECK(ci_jordan_shape(4, 0) == HilbertFunction({1, 2, 3, 4, 3, 2, 1}));
}

TEST_CASE("formulas agree with exhaustive enumeration") {
  for (const auto& T : enumerate_hilbert_functions(14)) {
    const auto partitions = enumerate_partitions(T);
    CHECK(count_partitions(T) == Count(partitions.size()));

    std::map<int, long long> observed;
    long long observed_special = 0;
    for (const auto& P : partitions) {
      ++observed[kappa(P)];
      if (is_special(P)) ++observed_special;
    }
    CHECK(count_special(T) == Count(observed_special));

    const auto dist = kappa_distribution(T);
    CHECK(dist.start == kappa_T(T));
    CHECK(dist.total == Count(partitions.size()));
    CHECK(dist.special == Count(observed_special));
    CHECK(dist.counts.front() > 0);
    CHECK(dist.counts.back() > 0);

    const int high = dist.start + static_cast<int>(dist.counts.size());
    for (int k = 1; k <= high + 1; ++k)
      CHECK(mu(T, k) == Count(observed.count(k) ? observed[k] : 0));

    Count tail = 0;
    for (int k = dist.start + 1; k <= high; ++k) tail += dist.at(k);
    CHECK(tail == dist.special);
  }
}
