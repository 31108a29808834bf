#include <doctest.h>

#include <random>

#include "hessberg/poly.hpp"

using namespace hessberg;

namespace {

Poly P(const std::string& s, int nv) { return Poly::parse(s, nv); }

Poly random_poly(std::mt19937_64& rng, int nv, int maxdeg, int maxterms) {
  Poly p(nv);
  int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(maxterms));
  for (int t = 0; t < terms; ++t) {
    Monomial m(nv);
    int budget = static_cast<int>(rng() % static_cast<uint64_t>(maxdeg + 1));
    for (int v = 1; v <= nv && budget > 0; ++v) {
      int e = static_cast<int>(rng() % static_cast<uint64_t>(budget + 1));
      m.set_exp(v, e);
      budget -= e;
    }
    long num = static_cast<long>(rng() % 19) - 9;
    long den = 1 + static_cast<long>(rng() % 7);
    Rat c(num, den);
    c.canonicalize();
    p += Poly::monomial(m, c);
  }
  return p;
}

}  // namespace

TEST_CASE("product of linear forms") {
  CHECK(P("x1-x2", 2) * P("x1+x2", 2) == P("x1^2-x2^2", 2));
  CHECK(P("x1+x2+x3", 3) * Poly::constant(3, 1) == P("x1+x2+x3", 3));
}

TEST_CASE("four-factor product expands to 16 terms") {
  Poly p = P("x1-x3", 5) * P("x2-x5", 5) * P("x2-x4", 5) * P("x3-x5", 5);
  CHECK(p.term_count() == 16);
  CHECK(p.degree() == 4);
  CHECK(p.is_homogeneous());
  // expansion cross-checked against an independent CAS
  Poly expected = P(
      "x1*x2^2*x3 - x1*x2^2*x5 - x1*x2*x3*x4 - x1*x2*x3*x5 + x1*x2*x4*x5 "
      "+ x1*x2*x5^2 + x1*x3*x4*x5 - x1*x4*x5^2 - x2^2*x3^2 + x2^2*x3*x5 "
      "+ x2*x3^2*x4 + x2*x3^2*x5 - x2*x3*x4*x5 - x2*x3*x5^2 - x3^2*x4*x5 "
      "+ x3*x4*x5^2",
      5);
  CHECK(p == expected);
}

TEST_CASE("homogeneity and degree") {
  CHECK(P("x1^2+x2^2+x3^2", 3).is_homogeneous());
  CHECK(P("x1^2+x2^2+x3^2", 3).degree() == 2);
  CHECK_FALSE(P("x1+1", 2).is_homogeneous());
  CHECK(Poly::zero(2).is_homogeneous());
  CHECK_THROWS_AS(Poly::zero(2).degree(), std::domain_error);
}

TEST_CASE("substitution") {
  Poly zero4 = Poly::zero(4);
  CHECK(P("x1+x4", 4).substitute(1, P("-x4", 4)) == zero4);
  CHECK(P("x1^2-x2^2", 2).substitute(2, P("x1", 2)) == Poly::zero(2));
  // f^A_{2,3} = (x1-x3)x1 + (x2-x3)x2 under x1 := x3
  Poly f23 = P("x1^2-x1*x3+x2^2-x2*x3", 3);
  CHECK(f23.substitute(1, P("x3", 3)) == P("x2^2-x2*x3", 3));
  CHECK_THROWS_AS(P("x1", 2).substitute(3, P("x1", 2)), std::out_of_range);
}

TEST_CASE("variable-count mismatch is rejected") {
  CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), std::invalid_argument);
  CHECK_THROWS_AS(P("x1", 2) * P("x1", 3), std::invalid_argument);
}

TEST_CASE("parse accepts the documented grammar") {
  CHECK(P("x1^2*x2 - 3/2*x3", 3) == P("  x1 ^ 2 * x2-3/2 x3 ", 3));
  CHECK(P("-x1", 2) == Poly::variable(2, 1).scaled(-1));
  CHECK(P("2*x1*x1", 2) == P("2*x1^2", 2));
  CHECK(P("0", 3).is_zero());
  CHECK_THROWS_AS(P("x9", 3), std::invalid_argument);
  CHECK_THROWS_AS(P("3/0", 3), std::invalid_argument);
  CHECK_THROWS_AS(P("", 3), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(20240817);
  for (int round = 0; round < 200; ++round) {
    int nv = 2 + static_cast<int>(rng() % 3);
    Poly a = random_poly(rng, nv, 4, 4);
    Poly b = random_poly(rng, nv, 4, 4);
    Poly c = random_poly(rng, nv, 4, 4);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Poly::zero(nv));
  }
}

TEST_CASE("print/parse round-trip") {
  std::mt19937_64 rng(987654321);
  for (int round = 0; round < 200; ++round) {
    int nv = 1 + static_cast<int>(rng() % 5);
    Poly p = random_poly(rng, nv, 5, 6);
    CHECK(Poly::parse(p.str(), nv) == p);
  }
}

TEST_CASE("degrevlex order pins the leading term") {
  // x1^2 > x1*x2 > x2^2 > x1*x3 > x2*x3 > x3^2 for x1 > x2 > x3
  Poly p = P("x3^2 + x2*x3 + x1*x3 + x2^2 + x1*x2 + x1^2", 3);
  CHECK(p.leading_monomial() == Monomial::var(3, 1, 2));
  Poly q = P("x1*x3 + x2^2", 3);
  CHECK(q.leading_monomial() == Monomial::var(3, 2, 2));
}
