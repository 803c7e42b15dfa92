#include <doctest.h>

#include "commgroup/laurent.hpp"
#include "commgroup/random.hpp"

using namespace commgroup;

namespace {

LaurentPoly random_poly(Rng& rng, int rank) {
  LaurentPoly p(rank);
  const auto terms = uniform(rng, 0, 5);
  for (std::int64_t t = 0; t < terms; ++t) {
    p.add_term(random_vector(rng, static_cast<std::size_t>(rank), 2), Integer(uniform(rng, -4, 4)));
  }
  return p;
}

Monomial m(std::initializer_list<Exponent> e) { return Monomial(e); }

}  // namespace

TEST_CASE("construction and printing") {
  const LaurentPoly zero(2);
  CHECK(zero.is_zero());
  CHECK(to_string(zero) == "0");
  CHECK(to_string(LaurentPoly::constant(2, -1)) == "-1");
  CHECK(to_string(LaurentPoly::t_minus_one(2, 2)) == "t2 - 1");
  LaurentPoly p = LaurentPoly::monomial(2, m({2, -1}), 3);
  p.add_term(m({0, 0}), -1);
  CHECK(to_string(p) == "3 t1^2 t2^-1 - 1");
  CHECK(p.coefficient(m({2, -1})) == 3);
  CHECK(p.coefficient(m({1, 1})) == 0);
  p.add_term(m({2, -1}), -3);
  CHECK(p.terms().size() == 1);
  CHECK(LaurentPoly::constant(3, 0).is_zero());
  CHECK_THROWS_AS(LaurentPoly::monomial(2, m({1, 2, 3})), Error);
  CHECK_THROWS_AS(LaurentPoly::t_minus_one(2, 3), Error);
  CHECK_THROWS_AS(LaurentPoly(2) + LaurentPoly(3), Error);
}

TEST_CASE("products of monomials add exponents") {
  const LaurentPoly a = LaurentPoly::monomial(3, m({1, -2, 0}), 2);
  const LaurentPoly b = LaurentPoly::monomial(3, m({-1, 5, 4}), -3);
  CHECK(a * b == LaurentPoly::monomial(3, m({0, 3, 4}), -6));
  const LaurentPoly t = LaurentPoly::t_minus_one(1, 1);
  LaurentPoly sq(1);
  sq.add_term(m({2}), 1);
  sq.add_term(m({1}), -2);
  sq.add_term(m({0}), 1);
  CHECK(t * t == sq);
  CHECK((t * t).augmentation() == 0);
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng = make_stream(41, "laurent-axioms");
  for (int c = 0; c < 200; ++c) {
    const int rank = 1 + c % 3;
    const LaurentPoly a = random_poly(rng, rank);
    const LaurentPoly b = random_poly(rng, rank);
    const LaurentPoly d = random_poly(rng, rank);
    const LaurentPoly one = LaurentPoly::constant(rank, 1);
    CHECK(a + b == b + a);
    CHECK((a + b) + d == a + (b + d));
    CHECK(a * b == b * a);
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a * one == a);
    CHECK((a - a).is_zero());
    CHECK(a + (-a) == LaurentPoly(rank));
    CHECK(a * Integer(3) == a + a + a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK(a.bar().bar() == a);
    CHECK((a * b).augmentation() == a.augmentation() * b.augmentation());
    CHECK((a + b).augmentation() == a.augmentation() + b.augmentation());
    const LaurentPoly ab = a * b;
    for (const auto& [e, coef] : ab.terms()) CHECK(coef != 0);
  }
}

TEST_CASE("coefficients beyond 64 bits") {
  LaurentPoly p = LaurentPoly::constant(1, Integer("9223372036854775807"));
  p *= Integer(4);
  CHECK(p.coefficient(m({0})) == Integer("36893488147419103228"));
  CHECK(to_string(p) == "36893488147419103228");
}
