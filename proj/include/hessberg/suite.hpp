#ifndef HESSBERG_SUITE_HPP
#define HESSBERG_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hessberg/pdual.hpp"
#include "hessberg/quotient.hpp"

namespace hessberg {

// per-instance verification bundle: Hilbert/product-formula match, dimension
// product, palindromicity, basis (identity and random permutation tuples),
// dual independence, covering-pair Gysin injectivity
struct InstanceChecks {
  std::string h_text;
  long dim = 0;
  bool hilbert_match = false;
  bool dim_product = false;
  bool palindromic = false;
  bool basis_identity = false;
  int random_perm_tuples = 0;     // 0 for type D
  bool basis_random_perms = true;
  long dual_count = 0;
  bool duals_independent = false;
  long gysin_pairs = 0;
  bool gysin_all_injective = false;

  bool pass() const {
    return hilbert_match && dim_product && palindromic && basis_identity &&
           basis_random_perms && duals_independent && gysin_all_injective;
  }
};

// seed for instance-level randomness is derived from (seed, h) so results do
// not depend on scheduling
InstanceChecks run_instance_checks(const HessFn& h, const RootTable& table,
                                   QuotientCache& cache, uint64_t seed,
                                   int perm_tuples);

struct SuiteReport {
  LieType type;
  uint64_t seed = 0;
  std::vector<InstanceChecks> results;  // ordered by h
  bool all_pass = false;
};

SuiteReport run_suite(const LieType& type, uint64_t seed, int jobs,
                      int perm_tuples = 5);

// covering subfunctions h' of h: ideals differ by exactly one root
std::vector<HessFn> covering_subs(const HessFn& h);

}  // namespace hessberg

#endif
