#ifndef HESSBERG_BASIS_HPP
#define HESSBERG_BASIS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hessberg/quotient.hpp"

namespace hessberg {

// A tuple of window permutations w^(i) on {i+1, ..., h(i)}; perms[i-1][t] is
// w^(i)(i+1+t). Types A, B, C, G2 only; type D admits no permutation freedom.
struct BasisSpec {
  HessFn h;
  std::vector<std::vector<int>> perms;
};

BasisSpec identity_spec(const HessFn& h);
BasisSpec random_spec(const HessFn& h, std::mt19937_64& rng);

struct BasisElement {
  std::vector<int> m;  // 0 <= m_i <= h(i)-i
  Poly poly;
  std::vector<Rat> coords;  // filled by verify_basis
};

// the products alpha_{i,w(h(i))} ... alpha_{i,w(h(i)-m_i+1)}, one element per
// m-vector, Prod_i (h(i)-i+1) in total
std::vector<BasisElement> basis_elements(const BasisSpec& spec,
                                         const RootTable& table);

// ---- type D ----

enum class DStep { proc1r, proc3r, proc2r, proc2n, proc3n };
const char* dstep_name(DStep s);

// the reduction l = l^(1) -> ... -> l^(N); steps[k] labels the transition
// l^(k+1) -> l^(k+2) (0-based); terminal is set when the run ends by rule
// proc2n/proc3n rather than by length exhaustion.
struct DTrace {
  std::vector<std::vector<int>> vectors;
  std::vector<DStep> steps;
  std::optional<DStep> terminal;

  // true when transition r (1-based, as in l^(r) -> l^(r+1)) exists and
  // carries the given label
  bool transition_is(int r, DStep s) const {
    return r >= 1 && r <= static_cast<int>(steps.size()) &&
           steps[static_cast<size_t>(r - 1)] == s;
  }
  std::string str() const;
};

// throws on out-of-range l (needs i <= l_i <= 2n-1-i for i < n and
// n <= l_n <= 2n-1)
DTrace d_procedure(const std::vector<int>& l);

// alpha^(l)_{i,j}: x_k, x_i - x_k or the untwisted root, per the trace
Poly d_alpha(const DTrace& trace, int i, int j, const RootTable& table);
Poly d_alpha(const std::vector<int>& l, int i, int j, const RootTable& table);

// the classes v_m^(h), one per m-vector
std::vector<BasisElement> basis_elements_D(const HessFn& h,
                                           const RootTable& table);

struct BasisReport {
  long count = 0;
  long dim = 0;
  long rank = 0;
  bool is_basis = false;
};

// fills each element's coordinates and ranks the dim x count matrix exactly
BasisReport verify_basis(const QuotientRing& qr,
                         std::vector<BasisElement>& elements);

}  // namespace hessberg

#endif
