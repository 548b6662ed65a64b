#include <catch_amalgamated.hpp>

#include "anfan/hring.hpp"

using namespace anfan;

TEST_CASE("relation shapes") {
  HRelations rels = h_relations(2);
  REQUIRE(rels.linear.size() == 2);
  // T(-1) - T(1,1) - T(1,2)
  HPoly expect;
  expect.add_term({TVar::negative(1)}, 1);
  expect.add_term({TVar::positive(Root{1, 1})}, -1);
  expect.add_term({TVar::positive(Root{1, 2})}, -1);
  CHECK(rels.linear[0] == expect);
  // incompatible pairs at n=2: (-1,[1,1]), (-1,[1,2]), (-2,[2,2]),
  // (-2,[1,2]), ([1,1],[2,2])
  CHECK(rels.quadratic.size() == 5);
}

TEST_CASE("linear relations agree with the ray vectors") {
  for (int n = 1; n <= 6; ++n) CHECK(linear_relations_from_rays(n));
}

TEST_CASE("elimination") {
  HPoly p = h_var(TVar::negative(1));
  HPoly e = eliminate_linear(p, 2);
  HPoly expect;
  expect.add_term({TVar::positive(Root{1, 1})}, 1);
  expect.add_term({TVar::positive(Root{1, 2})}, 1);
  CHECK(e == expect);
  // products expand multiplicatively
  HPoly sq = eliminate_linear(p * p, 2);
  CHECK(sq == expect * expect);
}

TEST_CASE("quotient ranks match the Betti numbers") {
  CHECK(quotient_ranks(2) == std::vector<Int>{1, 3, 1});
  CHECK(quotient_ranks(3) == std::vector<Int>{1, 6, 6, 1});
  for (int n = 1; n <= 5; ++n) {
    std::vector<Int> ranks = quotient_ranks(n);
    for (int d = 0; d <= n; ++d)
      CHECK(ranks[d] ==
            Int(static_cast<unsigned long>(enumerate_usets(n, d).size())));
  }
}

TEST_CASE("quadratic relations reduce to zero") {
  for (int n = 2; n <= 4; ++n) {
    HQuotient q(n, 2);
    for (const HPoly& rel : h_relations(n).quadratic)
      CHECK(q.reduces_to_zero(eliminate_linear(rel, n)));
  }
}

TEST_CASE("squares of the negative variables vanish") {
  for (int n = 1; n <= 6; ++n) CHECK(negative_squares_vanish(n));
}

TEST_CASE("derived relations lie in the ideal") {
  for (int n = 2; n <= 6; ++n) CHECK(derived_relations_vanish(n));
}

TEST_CASE("reduction is linear and idempotent on residues") {
  HQuotient q(3, 2);
  HPoly p;
  p.add_term({TVar::negative(1), TVar::positive(Root{2, 3})}, 1);
  SparseVec r = q.reduce(eliminate_linear(p, 3));
  // rebuild the residue as a polynomial; it must reduce to itself
  HPoly res;
  for (const auto& [col, c] : r) {
    REQUIRE(c.get_den() == 1);
    res.add_term(q.allowed()[col], Int(c.get_num()));
  }
  CHECK(q.reduce(res) == r);
}

TEST_CASE("top degree is one dimensional") {
  for (int n = 2; n <= 4; ++n) {
    HQuotient q(n, n);
    CHECK(q.quotient_rank() == 1);
  }
}
