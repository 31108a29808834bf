#include <doctest.h>

#include "hessberg/linalg.hpp"
#include "hessberg/pdual.hpp"

using namespace hessberg;

namespace {

Poly P(const std::string& s, int nv) { return Poly::parse(s, nv); }

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  // column-major maps: (a o b)[col j] = a applied to b's column j
  REQUIRE(!a.empty());
  RatMatrix out;
  for (const auto& bcol : b) {
    std::vector<Rat> col(a[0].size(), Rat(0));
    REQUIRE(bcol.size() == a.size());
    for (size_t k = 0; k < a.size(); ++k)
      for (size_t r = 0; r < a[k].size(); ++r) col[r] += a[k][r] * bcol[k];
    out.push_back(std::move(col));
  }
  return out;
}

}  // namespace

TEST_CASE("dual classes") {
  RootTable t = build_root_table({LieFamily::A, 4});
  HessFn h{{LieFamily::A, 4}, {3, 5, 5, 5, 5}};

  DualClass self = pdual_class(h, h, t);
  CHECK(self.scalar == 1);
  CHECK(self.product == Poly::constant(5, 1));

  HessFn h0{{LieFamily::A, 4}, {2, 3, 4, 5, 5}};
  DualClass dc = pdual_class(h, h0, t);
  CHECK(dc.product ==
        P("x1-x3", 5) * P("x2-x5", 5) * P("x2-x4", 5) * P("x3-x5", 5));

  RootTable a2 = build_root_table({LieFamily::A, 2});
  HessFn flag{{LieFamily::A, 2}, {3, 3, 3}};
  HessFn minimal{{LieFamily::A, 2}, {1, 2, 3}};
  DualClass pt = pdual_class(flag, minimal, a2);
  CHECK(pt.scalar == Rat(1, 6));
  Poly expect = Poly::constant(3, 1);
  for (const PositiveRoot* r : a2.all_roots()) expect *= r->linear_form();
  CHECK(pt.product == expect);
  CHECK(pt.product.degree() == 3);

  CHECK_THROWS_AS(pdual_class(minimal, flag, a2), std::invalid_argument);
}

TEST_CASE("poincare duals are independent (A_2 and G2)") {
  RootTable a2 = build_root_table({LieFamily::A, 2});
  HessFn flag{{LieFamily::A, 2}, {3, 3, 3}};
  QuotientRing qr = build_quotient(generators(flag, a2));
  IndependenceReport rep = verify_duals_independent(flag, qr, a2);
  CHECK(rep.count == 5);
  CHECK(rep.rank == 5);
  CHECK(rep.independent);

  RootTable g2 = build_root_table({LieFamily::G, 2});
  HessFn gflag{{LieFamily::G, 2}, {6, 3, 3}};
  QuotientRing gq = build_quotient(generators(gflag, g2));
  IndependenceReport grep = verify_duals_independent(gflag, gq, g2);
  CHECK(grep.count == 8);
  CHECK(grep.rank == 8);
  CHECK(grep.independent);

  HessFn minimal{{LieFamily::A, 2}, {1, 2, 3}};
  QuotientRing mq = build_quotient(generators(minimal, a2));
  IndependenceReport mrep = verify_duals_independent(minimal, mq, a2);
  CHECK(mrep.count == 1);
  CHECK(mrep.independent);
}

TEST_CASE("the basis extends the duals") {
  RootTable a2 = build_root_table({LieFamily::A, 2});
  HessFn flag{{LieFamily::A, 2}, {3, 3, 3}};
  QuotientRing qr = build_quotient(generators(flag, a2));
  ExtendReport rep = verify_basis_extends_duals(flag, qr, a2);
  CHECK(rep.pairs == 5);
  CHECK(rep.ok);

  // type D inherits the identity through the untwisting of v_m
  RootTable d4 = build_root_table({LieFamily::D, 4});
  HessFn h{{LieFamily::D, 4}, {3, 5, 4, 7}};
  QuotientRing qd = build_quotient(generators(h, d4));
  ExtendReport drep = verify_basis_extends_duals(h, qd, d4);
  CHECK(drep.ok);
  CHECK(drep.pairs == static_cast<long>(enumerate_sub(h).size()));
}

TEST_CASE("gysin maps") {
  // identity pair
  GysinReport self = gysin_injective(parse_hessfn("A2:2,3,3"),
                                     parse_hessfn("A2:2,3,3"));
  CHECK(self.degree_shift == 0);
  CHECK(self.rank == self.dim_sub);
  CHECK(self.injective);

  GysinReport a2 = gysin_injective(parse_hessfn("A2:2,3,3"),
                                   parse_hessfn("A2:3,3,3"));
  CHECK(a2.dim_sub == 4);
  CHECK(a2.rank == 4);
  CHECK(a2.injective);

  GysinReport g2 = gysin_injective(parse_hessfn("G2:1,2,3"),
                                   parse_hessfn("G2:2,2,3"));
  CHECK(g2.dim_sub == 1);
  CHECK(g2.dim_amb == 2);
  CHECK(g2.rank == 1);
  CHECK(g2.injective);
}

TEST_CASE("gysin rejects non-nested pairs") {
  CHECK_THROWS_AS(gysin_injective(parse_hessfn("A2:3,3,3"),
                                  parse_hessfn("A2:2,3,3")),
                  std::invalid_argument);
}

TEST_CASE("gysin maps raise degree by the codimension") {
  RootTable g2 = build_root_table({LieFamily::G, 2});
  QuotientRing sub = build_quotient(generators(parse_hessfn("G2:2,3,3"), g2));
  QuotientRing amb = build_quotient(generators(parse_hessfn("G2:5,3,3"), g2));
  DualClass dc = pdual_class(*amb.h, *sub.h, g2);
  const long shift = complex_dimension(*amb.h) - complex_dimension(*sub.h);
  CHECK(dc.product.degree() == shift);
  for (const Monomial& u : sub.std_monomials) {
    Poly img = normal_form(dc.product * Poly::monomial(u), amb);
    if (img.is_zero()) continue;
    CHECK(img.is_homogeneous());
    CHECK(img.degree() == u.deg() + shift);
  }
}

TEST_CASE("gysin composition equals the two-step composition") {
  RootTable a2 = build_root_table({LieFamily::A, 2});
  QuotientRing q_small = build_quotient(generators(parse_hessfn("A2:1,2,3"), a2));
  QuotientRing q_mid = build_quotient(generators(parse_hessfn("A2:2,2,3"), a2));
  QuotientRing q_big = build_quotient(generators(parse_hessfn("A2:3,3,3"), a2));
  RatMatrix direct = gysin_matrix(q_small, q_big, a2);
  RatMatrix first = gysin_matrix(q_small, q_mid, a2);
  RatMatrix second = gysin_matrix(q_mid, q_big, a2);
  CHECK(direct == matmul(second, first));

  RootTable d4 = build_root_table({LieFamily::D, 4});
  QuotientRing d_small =
      build_quotient(generators(parse_hessfn("D4:2,3,4,5"), d4));
  QuotientRing d_mid =
      build_quotient(generators(parse_hessfn("D4:3,3,4,6"), d4));
  QuotientRing d_big =
      build_quotient(generators(parse_hessfn("D4:3,5,4,7"), d4));
  RatMatrix ddirect = gysin_matrix(d_small, d_big, d4);
  RatMatrix dfirst = gysin_matrix(d_small, d_mid, d4);
  RatMatrix dsecond = gysin_matrix(d_mid, d_big, d4);
  CHECK(ddirect == matmul(dsecond, dfirst));
}
