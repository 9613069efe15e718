#include <doctest.h>

#include "weylexp/polyring.hpp"

using namespace weylexp;

namespace {

SparsePoly<Int> P(const char *text, std::size_t n = 2) { return parse_poly<Int>(text, n); }

} // namespace

TEST_CASE("monomial bases are graded lexicographic") {
  const MonomialBasis b(3, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0].exponents() == std::vector<int>{2, 0, 0});
  CHECK(b[1].exponents() == std::vector<int>{1, 1, 0});
  CHECK(b[5].exponents() == std::vector<int>{0, 0, 2});
  CHECK(b.index(Monomial({0, 1, 1})) == 4);
  CHECK_THROWS(b.index(Monomial({1, 0, 0})));
  CHECK(MonomialBasis(4, 4).size() == 35);
  CHECK(monomials_of_degree(2, 0).size() == 1);
}

TEST_CASE("text form round-trips") {
  const auto p = P("3*w1^2*w2 - w2^3 + 5", 2);
  CHECK(to_string(p) == "3*w1^2*w2 - w2^3 + 5");
  CHECK(to_string(SparsePoly<Int>(2)) == "0");
  CHECK(P("w2 + w1") == P("w1+w2"));
  CHECK(to_string(P("-w1*w2 + w1^2")) == "w1^2 - w1*w2");

  const auto g = parse_poly<GoldenInt>("(2+tau)*w1^2 + (-1-3*tau)*w1*w2 - tau*w2^2", 2);
  CHECK(g.coefficient(Monomial({2, 0})) == GoldenInt(2, 1));
  CHECK(g.coefficient(Monomial({1, 1})) == GoldenInt(-1, -3));
  CHECK(g.coefficient(Monomial({0, 2})) == GoldenInt(0, -1));
  CHECK(parse_poly<GoldenInt>(to_string(g), 2) == g);
  CHECK_THROWS_AS(parse_poly<Int>("w3", 2), UsageError);
  CHECK_THROWS_AS(parse_poly<Int>("2**w1", 2), UsageError);
}

TEST_CASE("arithmetic") {
  const auto x = P("w1 + w2"), y = P("w1 - w2");
  CHECK(x * y == P("w1^2 - w2^2"));
  CHECK(x.pow(3) == P("w1^3 + 3*w1^2*w2 + 3*w1*w2^2 + w2^3"));
  CHECK(x - x == SparsePoly<Int>(2));
  CHECK((x - x).degree() == -1);
  CHECK(SparsePoly<Int>::multiply(x, x.pow(2), 2) == SparsePoly<Int>(2));
  CHECK(Int(3) * x == P("3*w1 + 3*w2"));
  auto z = P("4*w1 + 6*w2");
  CHECK(z.try_divide(2));
  CHECK(z == P("2*w1 + 3*w2"));
  CHECK_FALSE(z.try_divide(2));
  CHECK(z == P("2*w1 + 3*w2"));
  CHECK(P("w1^2*w2 + 7").evaluate({Int(2), Int(3)}) == 19);
}

TEST_CASE("homogeneous components") {
  const auto p = P("1 + w1 + w1*w2");
  CHECK(p.homogeneous_component(2) == P("w1*w2"));
  CHECK(p.homogeneous_component(5).is_zero());
}

TEST_CASE("coordinate vectors") {
  const MonomialBasis b(2, 2);
  const auto p = P("w1^2 - w1*w2 + w2^2");
  CHECK(p.to_vector(b) == std::vector<Int>{1, -1, 1});
  CHECK(SparsePoly<Int>::from_vector(b, p.to_vector(b)) == p);
}

TEST_CASE("linear substitution") {
  const auto p = P("w1^2 + 3*w1*w2");
  const std::vector<SparsePoly<Int>> id = {P("w1"), P("w2")};
  CHECK(p.substitute(id) == p);
  CHECK(P("w1^2").substitute({P("w1 + w2"), P("w2")}) == P("w1^2 + 2*w1*w2 + w2^2"));
  // images may live in a different number of variables
  CHECK(P("w1*w2").substitute({P("w1 + w3", 3), P("w2", 3)}) == P("w1*w2 + w2*w3", 3));
}

TEST_CASE("simple reflections act on polynomials") {
  const auto a2 = RootSystem::build({Family::A, 2});
  const auto q = P("w1^2 - w1*w2 + w2^2");
  for (std::size_t k = 0; k < 2; ++k) {
    const auto images = reflection_images<Int>(a2, k);
    CHECK(q.substitute(images) == q);
    CHECK(P("w1").substitute(images).substitute(images) == P("w1"));
  }
  CHECK(P("w1").substitute(reflection_images<Int>(a2, 0)) == P("-w1 + w2"));
}

TEST_CASE("binomial coefficients and geometric powers") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-3, 2) == 6);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(7, 0) == 1);

  CHECK(geometric_power(1, 0, 1, 2).poly() == parse_poly<Int>("1 + w1 + w1^2", 1));
  CHECK(geometric_power(2, 1, 0, 4).poly() == P("1"));
  CHECK(geometric_power(1, 0, -1, 5).poly() == parse_poly<Int>("1 - w1", 1));
  CHECK(geometric_power(1, 0, -2, 5).poly() == parse_poly<Int>("1 - 2*w1 + w1^2", 1));
  CHECK(geometric_power(1, 0, 2, 3).poly() == parse_poly<Int>("1 + 2*w1 + 3*w1^2 + 4*w1^3", 1));

  // (1 - w)^{-a} (1 - w)^{-b} = (1 - w)^{-(a+b)} in the truncation
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      CHECK(geometric_power(1, 0, a, 4) * geometric_power(1, 0, b, 4) == geometric_power(1, 0, a + b, 4));
}

TEST_CASE("truncation drops high degrees") {
  const TruncatedPoly<Int> t(P("1 + w1 + w1^2*w2"), 2);
  CHECK(t.poly() == P("1 + w1"));
  CHECK(t.cap() == 2);
  CHECK((t * t).poly() == P("1 + 2*w1 + w1^2"));
}
