#ifndef HESSBERG_IDEALGEN_HPP
#define HESSBERG_IDEALGEN_HPP

#include <vector>

#include "hessberg/hessfn.hpp"
#include "hessberg/poly.hpp"

namespace hessberg {

// The defining ideal (f_{1,h(1)}, ..., f_{n,h(n)}). gens[i-1] is homogeneous
// of degree h(i) - i + 1.
struct GeneratorSet {
  HessFn h;
  std::vector<Poly> gens;
};

GeneratorSet generators(const HessFn& h, const RootTable& table);
GeneratorSet generators(const HessFn& h);

// Generic-coefficient variants for the flag case of types A and B; coeffs
// row i must have length i. With all coefficients 1 this equals generators().
GeneratorSet generators_generic(const HessFn& h,
                                const std::vector<std::vector<Rat>>& coeffs,
                                const RootTable& table);
GeneratorSet generators_generic(const HessFn& h,
                                const std::vector<std::vector<Rat>>& coeffs);

}  // namespace hessberg

#endif
