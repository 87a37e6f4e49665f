#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "midk/monomial.hpp"
#include "midk/render.hpp"

using namespace midk;

TEST_CASE("divisibility is componentwise") {
  const Monomial x1{1, 0};
  const Monomial x1x2{1, 1};
  const Monomial x1sq{2, 0};
  CHECK(x1.divides(x1x2));
  CHECK_FALSE(x1sq.divides(x1x2));
  CHECK(x1x2.divides(x1x2));
}

TEST_CASE("degree and accessors") {
  const Monomial m{2, 0, 3};
  CHECK(m.degree() == 5);
  CHECK(m.exponent(1) == 2);
  CHECK(m.exponent(3) == 3);
  CHECK(m.vars() == 3);
  CHECK(Monomial(3).is_one());
  CHECK_THROWS_AS(m.exponent(4), std::invalid_argument);
}

TEST_CASE("lattice operations") {
  const Monomial a{2, 1, 0};
  const Monomial b{1, 3, 1};
  CHECK(a.lcm(b) == Monomial{2, 3, 1});
  CHECK(a.gcd(b) == Monomial{1, 1, 0});
  CHECK(a.times(b) == Monomial{3, 4, 1});
  CHECK(a.colon_by(b) == Monomial{1, 0, 0});
  CHECK(b.colon_by(a) == Monomial{0, 2, 1});
  CHECK(a.times(b).quotient_by(a) == b);
  CHECK_THROWS_AS(a.quotient_by(b), std::invalid_argument);
}

TEST_CASE("exchanged moves one exponent") {
  const Monomial v{1, 0, 0, 1, 0};  // x1*x4
  CHECK(v.exchanged(5, 1) == Monomial{0, 0, 0, 1, 1});  // x4*x5
  CHECK(v.exchanged(5, 4) == Monomial{1, 0, 0, 0, 1});  // x1*x5
  CHECK_THROWS_AS(v.exchanged(2, 3), std::invalid_argument);
}

TEST_CASE("ambient mismatch is rejected") {
  const Monomial two{1, 0};
  const Monomial three{1, 0, 0};
  const Monomial one{1};
  CHECK_THROWS_AS(two.divides(three), std::invalid_argument);
  CHECK_THROWS_AS(two.times(one), std::invalid_argument);
}

TEST_CASE("exponent overflow is a hard error") {
  const Exponent big = std::numeric_limits<Exponent>::max();
  const Monomial a{big, 0};
  CHECK_THROWS_AS(a.times(a), std::overflow_error);
  CHECK_THROWS_AS((Monomial{big, 1}.degree()), std::overflow_error);
}

TEST_CASE("canonical order: degree first, then lex descending") {
  // the six-generator running example lists exactly in canonical order
  CHECK(canonical_less(Monomial{2, 0, 0}, Monomial{1, 2, 0}));  // degree
  CHECK(canonical_less(Monomial{1, 2, 0}, Monomial{1, 1, 1}));
  CHECK(canonical_less(Monomial{1, 1, 1}, Monomial{0, 2, 1}));
  CHECK(canonical_less(Monomial{0, 2, 1}, Monomial{1, 0, 3}));
  CHECK(canonical_less(Monomial{1, 0, 3}, Monomial{0, 1, 3}));
  CHECK_FALSE(canonical_less(Monomial{0, 1, 3}, Monomial{1, 0, 3}));
}

TEST_CASE("rendering") {
  CHECK(to_string(Monomial{2, 0, 1}) == "x1^2*x3");
  CHECK(to_string(Monomial(3)) == "1");
  CHECK(to_string(Monomial{0, 1, 0}) == "x2");
}

TEST_CASE("parsing round trip and errors") {
  CHECK(parse_monomial("x1^2*x3", 3) == Monomial{2, 0, 1});
  CHECK(parse_monomial("1", 4) == Monomial(4));
  CHECK(parse_monomial("x2", 2) == Monomial{0, 1});
  CHECK_THROWS_AS(parse_monomial("x9", 3), midk::parse_error);
  CHECK_THROWS_AS(parse_monomial("x1^", 3), midk::parse_error);
  CHECK_THROWS_AS(parse_monomial("x1*", 3), midk::parse_error);
  CHECK_THROWS_AS(parse_monomial("y2", 3), midk::parse_error);
}
