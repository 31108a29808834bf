#ifndef HESSBERG_ROOTSYSTEM_HPP
#define HESSBERG_ROOTSYSTEM_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hessberg/poly.hpp"

namespace hessberg {

enum class LieFamily { A, B, C, D, G };

char family_letter(LieFamily f);

// rank is the Lie-theoretic rank: A4 means rank 4 acting on 5 ambient
// variables, G2 is fixed at the 3-variable presentation with two chains.
struct LieType {
  LieFamily family;
  int rank;

  int nvars() const;
  std::string name() const;  // "A4", "D4", "G2"
  bool operator==(const LieType& o) const {
    return family == o.family && rank == o.rank;
  }
  bool operator<(const LieType& o) const {
    return family != o.family ? family < o.family : rank < o.rank;
  }
};

// throws "unsupported type" on out-of-scope families/ranks
void check_supported(const LieType& type);

// alpha_{i,j}: the coefficient vector of the linear form in x1..xn together
// with its chain position.
struct PositiveRoot {
  std::vector<int> coeffs;
  int row = 0;  // i
  int col = 0;  // j

  Poly linear_form() const;
  bool operator==(const PositiveRoot& o) const {
    return coeffs == o.coeffs && row == o.row && col == o.col;
  }
};

// A lower ideal recorded by chain indices (i,j). Downward-closedness is what
// hessfn's conversions certify; this type is just the member set.
struct LowerIdeal {
  std::set<std::pair<int, int>> members;

  bool contains(int i, int j) const { return members.count({i, j}) != 0; }
  size_t size() const { return members.size(); }
  bool operator==(const LowerIdeal& o) const { return members == o.members; }
};

// The fixed chain decomposition Phi+ = union of Phi+_i. chains[i-1] lists
// alpha_{i,i+1}, ..., alpha_{i,i+e_i}; trailing chains may be empty (type A
// row n, G2 row 3) so that rows align with the ambient variables.
struct RootTable {
  LieType type;
  std::vector<std::vector<PositiveRoot>> chains;

  int nvars() const { return type.nvars(); }
  int exponent(int i) const {
    return static_cast<int>(chains[static_cast<size_t>(i - 1)].size());
  }
  const PositiveRoot& root(int i, int j) const;
  size_t root_count() const;
  std::vector<const PositiveRoot*> all_roots() const;
  // simple roots alpha_{i,i+1} of the nonempty chains, in row order
  std::vector<const PositiveRoot*> simple_roots() const;
};

RootTable build_root_table(const LieType& type);

// sum of the coefficients of the root in the simple-root basis, computed by
// an exact linear solve; throws if the root is not a nonnegative integer
// combination of simple roots.
int height(const PositiveRoot& root, const RootTable& table);

// |W_I| for Delta_I = I intersect Delta, by decomposing the Dynkin
// sub-diagram spanned by Delta_I into connected components.
Int parabolic_weyl_order(const RootTable& table, const LowerIdeal& ideal);

}  // namespace hessberg

#endif
