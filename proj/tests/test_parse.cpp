#include <catch_amalgamated.hpp>

#include <random>

#include "anfan/parse.hpp"

using namespace anfan;

TEST_CASE("parse single generators") {
  RingElt e = parse_element("S(2)", 3);
  CHECK(e == ring_elt(3, monomial({gen_simple(2)})));
  RingElt f = parse_element("S(1,3)", 3);
  CHECK(f == ring_elt(3, monomial({gen_root(Root{1, 3})})));
}

TEST_CASE("parse terms and signs") {
  RingElt e = parse_element("2*S(1)*S(2) - S(1,2)", 2);
  RingElt expect;
  expect.n = 2;
  expect.add_term(monomial({gen_simple(1), gen_simple(2)}), 2);
  expect.add_term(monomial({gen_root(Root{1, 2})}), -1);
  CHECK(e == expect);

  CHECK(parse_element("-S(1)", 2) ==
        ring_elt(2, monomial({gen_simple(1)}), Int(-1)));
  CHECK(parse_element("+S(1)", 2) == ring_elt(2, monomial({gen_simple(1)})));
  CHECK(parse_element("  S( 1 ) * S( 2 )  ", 2) ==
        parse_element("S(1)*S(2)", 2));
  // bare integer terms and cancellation
  CHECK(parse_element("3", 2) == ring_elt(2, Monomial{}, Int(3)));
  CHECK(parse_element("S(1) - S(1)", 2).is_zero());
}

TEST_CASE("powers expand without normalization") {
  RingElt e = parse_element("S(1,2)^2", 2);
  CHECK(e == ring_elt(2, monomial({gen_root(Root{1, 2}),
                                   gen_root(Root{1, 2})})));
  CHECK(parse_element("S(1)^3", 2) ==
        ring_elt(2, monomial({gen_simple(1), gen_simple(1), gen_simple(1)})));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_element("S(2,2)", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(3,1)", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(4)", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(0)", 3), ParseError);
  CHECK_THROWS_AS(parse_element("", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(1) S(2)", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(1)^0", 3), ParseError);
  CHECK_THROWS_AS(parse_element("S(1,", 3), ParseError);
  CHECK_THROWS_MATCHES(parse_element("S(2,2)", 3), ParseError,
                       Catch::Matchers::MessageMatches(Catch::Matchers::ContainsSubstring(
                           "use S(2)")));
}

TEST_CASE("parse T expressions") {
  HPoly p = parse_t_element("T(-1)*T(2,3) - 2*T(1,1)", 3);
  HPoly expect;
  expect.add_term({TVar::negative(1), TVar::positive(Root{2, 3})}, 1);
  expect.add_term({TVar::positive(Root{1, 1})}, -2);
  CHECK(p == expect);
  CHECK_THROWS_AS(parse_t_element("T(-4)", 3), ParseError);
  CHECK_THROWS_AS(parse_t_element("T(3,1)", 3), ParseError);
}

TEST_CASE("canonical printing") {
  CHECK(print_element(RingElt{2, {}}) == "0");
  CHECK(print_element(parse_element("S(1)", 2)) == "S(1)");
  CHECK(print_element(parse_element("-S(1) + 2*S(2)", 2)) ==
        "-S(1) + 2*S(2)");
  // ordering: degree, then height, then generator order
  CHECK(print_element(parse_element("S(1,2)*S(2,3) + S(2)*S(3)", 3)) ==
        "S(2)*S(3) + S(1,2)*S(2,3)");
  CHECK(print_element(parse_element("S(1,2) + S(1) + 1", 2)) ==
        "1 + S(1) + S(1,2)");
}

TEST_CASE("print then parse is the identity") {
  std::mt19937 rng(5);
  int n = 4;
  std::vector<Gen> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(gen_simple(i));
  for (const Root& a : nonsimple_roots(n)) gens.push_back(gen_root(a));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> degree(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    RingElt e;
    e.n = n;
    for (int t = 0; t < 4; ++t) {
      Monomial m;
      int d = degree(rng);
      for (int k = 0; k < d; ++k) m.gens.push_back(gens[pick(rng)]);
      m.normalize();
      e.add_term(m, coeff(rng));
    }
    CHECK(parse_element(print_element(e), n) == e);
  }
}
