#include "hessberg/pdual.hpp"

#include <algorithm>
#include <stdexcept>

#include "hessberg/linalg.hpp"

namespace hessberg {

DualClass pdual_class(const HessFn& h, const HessFn& h_sub,
                      const RootTable& table) {
  if (!includes(h, h_sub))
    throw std::invalid_argument("h_sub is not included in h");
  LowerIdeal big = to_ideal(h), small = to_ideal(h_sub);
  DualClass dc{h, h_sub, Rat(1), Poly::constant(table.nvars(), 1), {}};
  Rat w_sub(parabolic_weyl_order(table, small));
  Rat w_amb(parabolic_weyl_order(table, big));
  dc.scalar = w_sub / w_amb;
  for (const auto& [i, j] : big.members)
    if (!small.contains(i, j)) dc.product *= table.root(i, j).linear_form();
  return dc;
}

IndependenceReport verify_duals_independent(const HessFn& h,
                                            const QuotientRing& qr,
                                            const RootTable& table) {
  IndependenceReport rep;
  RatMatrix cols;
  for (const HessFn& h_sub : enumerate_sub(h)) {
    DualClass dc = pdual_class(h, h_sub, table);
    cols.push_back(coordinates(dc.product, qr));
  }
  rep.count = static_cast<long>(cols.size());
  rep.rank = rank_exact(cols);
  rep.independent = (rep.rank == rep.count);
  return rep;
}

namespace {

// a = lambda * b for a nonzero rational lambda
bool proportional_nonzero(const std::vector<Rat>& a,
                          const std::vector<Rat>& b) {
  if (a.size() != b.size()) return false;
  Rat lambda(0);
  for (size_t k = 0; k < a.size(); ++k) {
    if ((a[k] == 0) != (b[k] == 0)) return false;
    if (b[k] == 0) continue;
    Rat r = a[k] / b[k];
    if (lambda == 0)
      lambda = r;
    else if (r != lambda)
      return false;
  }
  return lambda != 0;
}

}  // namespace

ExtendReport verify_basis_extends_duals(const HessFn& h,
                                        const QuotientRing& qr,
                                        const RootTable& table) {
  ExtendReport rep;
  const bool type_d = h.type.family == LieFamily::D;
  std::vector<BasisElement> all;
  if (type_d) all = basis_elements_D(h, table);

  for (const HessFn& h_sub : enumerate_sub(h)) {
    ++rep.pairs;
    std::vector<int> m(static_cast<size_t>(h.n()));
    for (int i = 1; i <= h.n(); ++i)
      m[static_cast<size_t>(i - 1)] = h(i) - h_sub(i);

    Poly element(table.nvars());
    if (type_d) {
      auto it = std::find_if(all.begin(), all.end(),
                             [&](const BasisElement& e) { return e.m == m; });
      element = it->poly;
    } else {
      Poly prod = Poly::constant(table.nvars(), 1);
      for (int i = 1; i <= h.n(); ++i)
        for (int s = 0; s < m[static_cast<size_t>(i - 1)]; ++s)
          prod *= table.root(i, h(i) - s).linear_form();
      element = prod;
    }

    DualClass dc = pdual_class(h, h_sub, table);
    if (element != dc.product) {
      rep.failures.push_back(h_sub.text() + ": products differ syntactically");
      continue;
    }
    std::vector<Rat> ce = coordinates(element, qr);
    std::vector<Rat> cd = coordinates(dc.product, qr);
    if (!proportional_nonzero(ce, cd))
      rep.failures.push_back(h_sub.text() +
                             ": coordinates not a nonzero multiple");
  }
  rep.ok = rep.failures.empty();
  return rep;
}

RatMatrix gysin_matrix(const QuotientRing& sub, const QuotientRing& amb,
                       const RootTable& table) {
  if (!sub.h || !amb.h)
    throw std::invalid_argument("gysin map needs Hessenberg-built rings");
  DualClass dc = pdual_class(*amb.h, *sub.h, table);
  // well-definedness: the product must carry the sub-ideal into the ambient
  for (const Poly& g : sub.gens)
    if (!normal_form(dc.product * g, amb).is_zero())
      throw std::runtime_error(
          "presentation inconsistency: sub-ideal generator does not map into "
          "the ambient ideal");
  RatMatrix cols;
  cols.reserve(sub.std_monomials.size());
  for (const Monomial& u : sub.std_monomials)
    cols.push_back(coordinates(dc.product * Poly::monomial(u), amb));
  return cols;
}

GysinReport gysin_injective(const QuotientRing& sub, const QuotientRing& amb,
                            const RootTable& table) {
  GysinReport rep;
  rep.dim_sub = sub.dim();
  rep.dim_amb = amb.dim();
  RatMatrix cols = gysin_matrix(sub, amb, table);  // validates both rings
  rep.degree_shift = complex_dimension(*amb.h) - complex_dimension(*sub.h);
  rep.rank = rank_exact(cols);
  rep.injective = (rep.rank == rep.dim_sub);
  return rep;
}

GysinReport gysin_injective(const HessFn& h_sub, const HessFn& h) {
  if (!includes(h, h_sub))
    throw std::invalid_argument("h_sub is not included in h");
  RootTable table = build_root_table(h.type);
  QuotientRing sub = build_quotient(generators(h_sub, table));
  QuotientRing amb = build_quotient(generators(h, table));
  return gysin_injective(sub, amb, table);
}

}  // namespace hessberg
