#ifndef HESSBERG_QUOTIENT_HPP
#define HESSBERG_QUOTIENT_HPP

#include <memory>
#include <mutex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessberg/idealgen.hpp"
#include "hessberg/poly.hpp"

namespace hessberg {

// Artinian quotient R[x1..xn]/(f1,...,fn): reduced degrevlex Groebner basis,
// standard monomials (ascending degrevlex) and the Hilbert function.
struct QuotientRing {
  int nvars = 0;
  std::optional<HessFn> h;  // present when built from generators(h)
  std::vector<Poly> gens;
  std::vector<Poly> gb;                 // reduced, monic, LM ascending
  std::vector<Monomial> std_monomials;  // ascending degrevlex
  std::vector<long> hilbert;            // hilbert[d] = #std monomials of deg d

  long dim() const { return static_cast<long>(std_monomials.size()); }
  // index into std_monomials, -1 if not standard
  int monomial_index(const Monomial& m) const;
};

// reduced Groebner basis of arbitrary input (degrevlex, x1 > ... > xn)
std::vector<Poly> groebner_basis(std::vector<Poly> gens);

// throws "not Artinian: generators are not a regular sequence" when the
// leading-term ideal misses a pure power of some variable
QuotientRing build_quotient(const GeneratorSet& gs);
QuotientRing build_quotient_raw(int nvars, std::vector<Poly> gens);

// canonical representative supported on the standard monomials
Poly normal_form(const Poly& p, const QuotientRing& qr);

// coefficients of normal_form(p) on std_monomials
std::vector<Rat> coordinates(const Poly& p, const QuotientRing& qr);

std::vector<long> hilbert_series(const QuotientRing& qr);

// coefficients of prod_i (1 + t + ... + t^{h(i)-i})
std::vector<long> product_formula_series(const HessFn& h);

// shared, thread-safe memo of quotient rings keyed by the Hessenberg text
// form; the CLI suite and the acceptance harness reuse rings through it
class QuotientCache {
 public:
  std::shared_ptr<const QuotientRing> get(const HessFn& h);

 private:
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const QuotientRing>> store_;
};

}  // namespace hessberg

#endif
