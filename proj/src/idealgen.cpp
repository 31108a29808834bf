#include "hessberg/idealgen.hpp"

#include <stdexcept>

namespace hessberg {

namespace {

Poly var_diff(int nv, int a, int b) {  // x_a - x_b
  Poly p = Poly::variable(nv, a);
  return p - Poly::variable(nv, b);
}

Poly var_sum(int nv, int a, int b) {  // x_a + x_b
  Poly p = Poly::variable(nv, a);
  return p + Poly::variable(nv, b);
}

// f_{i,j} = sum_{k<=i} c_k (prod_{l=i+1..j} alpha_{k,l}) x_k, shared by
// types A, B, C (and their generic-coefficient variants)
Poly row_product_sum(const RootTable& table, int i, int j,
                     const std::vector<Rat>* coeffs) {
  const int nv = table.nvars();
  Poly f(nv);
  for (int k = 1; k <= i; ++k) {
    Poly term = Poly::variable(nv, k);
    for (int l = i + 1; l <= j; ++l)
      term *= table.root(k, l).linear_form();
    if (coeffs) term = term.scaled((*coeffs)[static_cast<size_t>(k - 1)]);
    f += term;
  }
  return f;
}

Poly generator_D(const HessFn& h, int i) {
  const int n = h.type.rank;
  const int nv = n;
  const int j = h(i);
  if (i <= n - 1) {
    if (j <= n - 2) {
      Poly f(nv);
      for (int k = 1; k <= i; ++k) {
        Poly term = Poly::variable(nv, k);
        for (int l = i + 1; l <= j; ++l) term *= var_diff(nv, k, l);
        f += term;
      }
      return f;
    }
    if (j == n - 1) {
      Poly f(nv);
      for (int k = 1; k <= i; ++k) {
        Poly term = var_sum(nv, k, n);
        for (int l = i + 1; l <= n - 1; ++l) term *= var_diff(nv, k, l);
        f += term;
      }
      Poly mono = Poly::constant(nv, Rat(((n - i) % 2 == 0) ? n : -n));
      for (int l = i + 1; l <= n; ++l) mono *= Poly::variable(nv, l);
      return f + mono;
    }
    const int jp = j - n;  // 0 <= jp <= n-1-i
    Poly f(nv);
    for (int k = 1; k <= i; ++k) {
      Poly term = Poly::constant(nv, 1);
      for (int l = i + 1; l <= n; ++l) term *= var_diff(nv, k, l);
      for (int a = 0; a <= jp; ++a) term *= var_sum(nv, k, n - a);
      f += term;
    }
    Poly mono = Poly::constant(nv, Rat(((n - i + 1) % 2 == 0) ? n : -n));
    for (int l = i + 1; l <= n - 1 - jp; ++l) mono *= Poly::variable(nv, l);
    for (int l = n - jp; l <= n; ++l)
      mono *= Poly::variable(nv, l) * Poly::variable(nv, l);
    return f + mono;
  }
  // row n
  const int r = 2 * n - 1 - j;  // 0 <= r <= n-1
  Poly f(nv);
  const Rat sign(((n - r + 1) % 2 == 0) ? 1 : -1);
  for (int k = 1; k <= r; ++k) {
    Poly term = Poly::constant(nv, sign);
    for (int l = r + 1; l <= n; ++l) term *= var_diff(nv, k, l);
    f += term;
  }
  Poly mono = Poly::constant(nv, Rat(n));
  for (int l = r + 1; l <= n; ++l) mono *= Poly::variable(nv, l);
  return f + mono;
}

Poly generator_G(const RootTable& table, const HessFn& h, int i) {
  const int j = h(i);
  if (i == 1) {
    Poly base = Poly::parse("-x2+x3", 3);
    if (j == 1) return base;
    Poly f = base;
    for (int l = 2; l <= j; ++l) f *= table.root(1, l).linear_form();
    return f;
  }
  if (i == 2)
    return j == 2 ? Poly::variable(3, 3) : Poly::parse("x1^2+x2^2+x3^2", 3);
  return Poly::parse("x1+x2+x3", 3);
}

void require_valid(const HessFn& h) {
  ValidityReport rep = validate(h);
  if (!rep.ok)
    throw std::invalid_argument("invalid Hessenberg function " + h.text() +
                                ": " + rep.message());
}

}  // namespace

GeneratorSet generators(const HessFn& h, const RootTable& table) {
  require_valid(h);
  GeneratorSet gs{h, {}};
  const int nv = h.type.nvars();
  gs.gens.reserve(static_cast<size_t>(nv));
  for (int i = 1; i <= nv; ++i) {
    switch (h.type.family) {
      case LieFamily::A:
      case LieFamily::B:
      case LieFamily::C:
        gs.gens.push_back(row_product_sum(table, i, h(i), nullptr));
        break;
      case LieFamily::D:
        gs.gens.push_back(generator_D(h, i));
        break;
      case LieFamily::G:
        gs.gens.push_back(generator_G(table, h, i));
        break;
    }
  }
  return gs;
}

GeneratorSet generators(const HessFn& h) {
  return generators(h, build_root_table(h.type));
}

GeneratorSet generators_generic(const HessFn& h,
                                const std::vector<std::vector<Rat>>& coeffs,
                                const RootTable& table) {
  require_valid(h);
  if (h.type.family != LieFamily::A && h.type.family != LieFamily::B)
    throw std::invalid_argument(
        "generic variant defined only for types A and B");
  const int nv = h.type.nvars();
  for (int i = 1; i <= nv; ++i)
    if (h(i) != i + table.exponent(i))
      throw std::invalid_argument(
          "generic variant defined only for the flag case");
  if (static_cast<int>(coeffs.size()) != nv)
    throw std::invalid_argument("coefficient matrix needs one row per i");
  GeneratorSet gs{h, {}};
  for (int i = 1; i <= nv; ++i) {
    const auto& row = coeffs[static_cast<size_t>(i - 1)];
    if (static_cast<int>(row.size()) != i)
      throw std::invalid_argument("coefficient row " + std::to_string(i) +
                                  " must have length " + std::to_string(i));
    gs.gens.push_back(row_product_sum(table, i, h(i), &row));
  }
  return gs;
}

GeneratorSet generators_generic(const HessFn& h,
                                const std::vector<std::vector<Rat>>& coeffs) {
  return generators_generic(h, coeffs, build_root_table(h.type));
}

}  // namespace hessberg
