#ifndef HESSBERG_PDUAL_HPP
#define HESSBERG_PDUAL_HPP

#include <string>
#include <vector>

#include "hessberg/basis.hpp"
#include "hessberg/linalg.hpp"
#include "hessberg/quotient.hpp"

namespace hessberg {

// [Hess(N,I')] = (|W_{I'}|/|W_I|) prod_{alpha in I\I'} alpha. The scalar is
// reported but excluded from every rank test (it is positive).
struct DualClass {
  HessFn h;
  HessFn h_sub;
  Rat scalar;
  Poly product;
  std::vector<Rat> coords;
};

DualClass pdual_class(const HessFn& h, const HessFn& h_sub,
                      const RootTable& table);

struct IndependenceReport {
  long count = 0;
  long rank = 0;
  bool independent = false;
};

// ranks the coordinate matrix of the dual products over all h' subset h
IndependenceReport verify_duals_independent(const HessFn& h,
                                            const QuotientRing& qr,
                                            const RootTable& table);

struct ExtendReport {
  long pairs = 0;
  bool ok = false;
  std::vector<std::string> failures;
};

// the basis element at m = h - h' must equal the dual product syntactically
// and be a nonzero multiple of it in coordinates
ExtendReport verify_basis_extends_duals(const HessFn& h,
                                        const QuotientRing& qr,
                                        const RootTable& table);

struct GysinReport {
  long dim_sub = 0;
  long dim_amb = 0;
  long rank = 0;
  long degree_shift = 0;
  bool injective = false;
};

// multiplication by the dual product as a map on standard-monomial bases;
// throws a presentation-inconsistency error if a generator of the sub-ideal
// does not map into the ambient ideal
GysinReport gysin_injective(const QuotientRing& sub, const QuotientRing& amb,
                            const RootTable& table);
GysinReport gysin_injective(const HessFn& h_sub, const HessFn& h);

// the matrix of the map, columns indexed by the sub-ring standard monomials
RatMatrix gysin_matrix(const QuotientRing& sub, const QuotientRing& amb,
                       const RootTable& table);

}  // namespace hessberg

#endif
