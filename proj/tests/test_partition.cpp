#include <algorithm>
#include <set>

#include "catch2/catch_amalgamated.hpp"
#include "hookcells/hilbert.hpp"
#include "hookcells/partition.hpp"

using namespace hookcells;

TEST_CASE("partition construction validates shape") {
  CHECK_NOTHROW(Partition({5, 3, 1}));
  CHECK_NOTHROW(Partition({1}));
  CHECK_NOTHROW(Partition());
  CHECK_THROWS_AS(Partition({3, 4}), InvalidShape);
  CHECK_THROWS_AS(Partition({2, 0}), InvalidShape);
  CHECK_THROWS_AS(Partition({-1}), InvalidShape);
}

TEST_CASE("monomial order is degree then increasing y-degree") {
  CHECK(Monomial{3, 0} < Monomial{2, 1});
  CHECK(Monomial{2, 1} < Monomial{0, 3});
  CHECK(Monomial{0, 3} < Monomial{4, 0});
  CHECK(to_string(Monomial{0, 0}) == "1");
  CHECK(to_string(Monomial{1, 0}) == "x");
  CHECK(to_string(Monomial{2, 3}) == "x^2*y^3");
  CHECK(to_string(Monomial{0, 1}) == "y");
}

TEST_CASE("cell membership matches row lengths") {
  const Partition P{4, 2, 1};
  CHECK(P.contains({3, 0}));
  CHECK_FALSE(P.contains({4, 0}));
  CHECK(P.contains({1, 1}));
  CHECK_FALSE(P.contains({2, 1}));
  CHECK(P.contains({0, 2}));
  CHECK_FALSE(P.contains({0, 3}));
  CHECK(P.weight() == 7);
}

TEST_CASE("conjugate transposes the diagram") {
  CHECK(Partition{6, 5, 3, 1}.conjugate() == Partition{4, 3, 3, 2, 2, 1});
  CHECK(Partition{3, 1}.conjugate() == Partition{2, 1, 1});
  CHECK(Partition{2, 2}.conjugate() == Partition{2, 2});
  CHECK(Partition().conjugate() == Partition());
}

TEST_CASE("conjugate is an involution and preserves diagonal lengths") {
  for (const auto& T : enumerate_hilbert_functions(9)) {
    for (const auto& P : enumerate_partitions(T)) {
      CHECK(P.conjugate().conjugate() == P);
      CHECK(diagonal_lengths(P.conjugate()) == diagonal_lengths(P));
    }
  }
}

TEST_CASE("diagonal lengths of known diagrams") {
  CHECK(diagonal_lengths(Partition{5, 3, 1}).values() ==
        std::vector<int>{1, 2, 3, 2, 1});
  CHECK(diagonal_lengths(Partition{1}).values() == std::vector<int>{1});
  CHECK(diagonal_lengths(Partition{4, 3, 1}).values() ==
        std::vector<int>{1, 2, 3, 2});
}

TEST_CASE("weight equals total diagonal length") {
  for (const auto& T : enumerate_hilbert_functions(10))
    for (const auto& P : enumerate_partitions(T))
      CHECK(P.weight() == diagonal_lengths(P).weight());
}

TEST_CASE("corner monomials generate the complement ideal minimally") {
  const auto corners = corner_monomials(Partition{9, 7, 7, 6, 4, 4, 2, 1});
  const std::vector<Monomial> expected{{9, 0}, {7, 1}, {6, 3}, {4, 4},
                                       {2, 6}, {1, 7}, {0, 8}};
  CHECK(corners == expected);

  CHECK(corner_monomials(Partition{1}) ==
        std::vector<Monomial>{{1, 0}, {0, 1}});
  CHECK(corner_monomials(Partition{2, 2}) ==
        std::vector<Monomial>{{2, 0}, {0, 2}});
  CHECK(corner_monomials(Partition()) == std::vector<Monomial>{{0, 0}});
}

TEST_CASE("corner monomials are exactly the minimal generators") {
  // x^a y^b is a minimal generator of E_P iff it lies outside the diagram
  // while both x^{a-1} y^b and x^a y^{b-1} (when defined) lie inside.
  for (const auto& T : enumerate_hilbert_functions(9)) {
    for (const auto& P : enumerate_partitions(T)) {
      std::set<std::pair<int, int>> expected;
      const int top = P.rows() + 2;
      const int wide = P.row_length(0) + 2;
      for (int b = 0; b <= top; ++b) {
        for (int a = 0; a <= wide; ++a) {
          const Monomial m{a, b};
          if (P.contains(m)) continue;
          const bool left_ok = a == 0 || P.contains({a - 1, b});
          const bool below_ok = b == 0 || P.contains({a, b - 1});
          if (left_ok && below_ok) expected.insert({a, b});
        }
      }
      std::set<std::pair<int, int>> actual;
      int prev_ydeg = -1;
      for (const auto& m : corner_monomials(P)) {
        actual.insert({m.xdeg, m.ydeg});
        CHECK(m.ydeg > prev_ydeg);
        prev_ydeg = m.ydeg;
      }
      CHECK(actual == expected);
    }
  }
}

TEST_CASE("difference-one hooks of small diagrams") {
  SECTION("P = (4,1,1)") {
    const auto hooks = difference_one_hooks(Partition{4, 1, 1});
    REQUIRE(hooks.size() == 2);
    CHECK(hooks[0].corner == Monomial{0, 0});
    CHECK(hooks[0].arm == 4);
    CHECK(hooks[0].leg == 3);
    CHECK(hooks[0].hand == Monomial{3, 0});
    CHECK(hooks[0].foot == Monomial{0, 2});
    CHECK(hooks[1].corner == Monomial{2, 0});
    CHECK(hooks[1].hand == Monomial{3, 0});
    CHECK(hooks[1].foot == Monomial{2, 0});
  }
  SECTION("P = (4,3,1) has the hook with corner x, hand x^3, foot xy") {
    const auto hooks = difference_one_hooks(Partition{4, 3, 1});
    const bool found =
        std::any_of(hooks.begin(), hooks.end(), [](const Hook& h) {
          return h.corner == Monomial{1, 0} && h.arm == 3 && h.leg == 2 &&
                 h.hand == Monomial{3, 0} && h.foot == Monomial{1, 1};
        });
    CHECK(found);
  }
  SECTION("P = (1) has none") {
    CHECK(difference_one_hooks(Partition{1}).empty());
  }
  SECTION("P = (2,2) has one") {
    const auto hooks = difference_one_hooks(Partition{2, 2});
    REQUIRE(hooks.size() == 1);
    CHECK(hooks[0].corner == Monomial{0, 1});
  }
}

TEST_CASE("hook ends stay inside the diagram and extensions leave it") {
  for (const auto& T : enumerate_hilbert_functions(9)) {
    for (const auto& P : enumerate_partitions(T)) {
      for (const auto& h : difference_one_hooks(P)) {
        CHECK(h.arm - h.leg == 1);
        CHECK(P.contains(h.hand));
        CHECK(P.contains(h.foot));
        CHECK_FALSE(P.contains({h.hand.xdeg + 1, h.hand.ydeg}));
        CHECK_FALSE(P.contains({h.foot.xdeg, h.foot.ydeg + 1}));
        CHECK(h.hand == Monomial{h.corner.xdeg + h.arm - 1, h.corner.ydeg});
        CHECK(h.foot == Monomial{h.corner.xdeg, h.corner.ydeg + h.leg - 1});
      }
    }
  }
}

TEST_CASE("border monomials at a degree") {
  SECTION("P = (1), degree 1") {
    const auto border = border_monomials(Partition{1}, 1);
    CHECK(border.horizontal == std::vector<Monomial>{{0, 1}});
    CHECK(border.vertical == std::vector<Monomial>{{1, 0}});
  }
  SECTION("P = (5,5,5,3,1,1,1), degree 5 and 6") {
    const Partition P{5, 5, 5, 3, 1, 1, 1};
    const auto b5 = border_monomials(P, 5);
    CHECK(b5.horizontal == std::vector<Monomial>{{1, 4}});
    const auto b6 = border_monomials(P, 6);
    CHECK(b6.horizontal == std::vector<Monomial>{{3, 3}, {2, 4}});
  }
  SECTION("P = (9,7,7,4,4,2,1,1), degree 7") {
    const auto b7 = border_monomials(Partition{9, 7, 7, 4, 4, 2, 1, 1}, 7);
    CHECK(b7.horizontal == std::vector<Monomial>{{4, 3}, {2, 5}, {1, 6}});
  }
  SECTION("negative degree is rejected") {
    CHECK_THROWS_AS(border_monomials(Partition{1}, -1), DegreeOutOfRange);
  }
}

TEST_CASE("border sizes follow the delta counts") {
  for (const auto& T : enumerate_hilbert_functions(10)) {
    for (const auto& P : enumerate_partitions(T)) {
      for (int i = T.order(); i <= T.socle_degree() + 1; ++i) {
        const auto border = border_monomials(P, i);
        const int a_expected = T.delta(i) + (P.contains({i, 0}) ? 1 : 0);
        const int b_expected = i >= 1 ? T.t(i - 1) - T.t(i) +
                                            (P.contains({0, i}) ? 1 : 0)
                                      : 0;
        CHECK(static_cast<int>(border.horizontal.size()) == a_expected);
        CHECK(static_cast<int>(border.vertical.size()) == b_expected);
      }
    }
  }
}

TEST_CASE("partition text round-trips") {
  CHECK(parse_partition("5,3,1") == Partition{5, 3, 1});
  CHECK(parse_partition("15,12^4,11,7,6^2,5,3^4") ==
        Partition{15, 12, 12, 12, 12, 11, 7, 6, 6, 5, 3, 3, 3, 3});
  CHECK(format_partition(Partition{15, 12, 12, 12, 12, 11, 7, 6, 6, 5, 3, 3,
                                   3, 3}) == "15,12^4,11,7,6^2,5,3^4");
  CHECK(format_partition(Partition{4, 3, 3, 1}) == "4,3^2,1");
  CHECK(format_partition(Partition{1}) == "1");
  CHECK(format_partition(Partition()) == "-");
  for (const auto& T : enumerate_hilbert_functions(9))
    for (const auto& P : enumerate_partitions(T))
      CHECK(parse_partition(format_partition(P)) == P);
}

TEST_CASE("partition parse errors carry positions") {
  CHECK_THROWS_AS(parse_partition(""), EmptyInput);
  CHECK_THROWS_AS(parse_partition("3,a"), ParseError);
  CHECK_THROWS_AS(parse_partition("3,,1"), ParseError);
  CHECK_THROWS_AS(parse_partition("3^"), ParseError);
  CHECK_THROWS_AS(parse_partition("1,3"), ParseError);
  CHECK_THROWS_AS(parse_partition("3 1"), ParseError);
  try {
    parse_partition("5,x");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}
