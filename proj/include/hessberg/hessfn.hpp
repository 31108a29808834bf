#ifndef HESSBERG_HESSFN_HPP
#define HESSBERG_HESSFN_HPP

#include <string>
#include <vector>

#include "hessberg/rootsystem.hpp"

namespace hessberg {

struct HessFn {
  LieType type;
  std::vector<int> values;  // h(1..nvars)

  int operator()(int i) const { return values[static_cast<size_t>(i - 1)]; }
  int n() const { return static_cast<int>(values.size()); }
  std::string text() const;  // "D4:3,5,4,7"
  bool operator==(const HessFn& o) const {
    return type == o.type && values == o.values;
  }
  bool operator<(const HessFn& o) const {
    return type == o.type ? values < o.values : type < o.type;
  }
};

// parses the text form "D4:3,5,4,7" / "A4:3,5,5,5,5" / "G2:6,3,3"
HessFn parse_hessfn(const std::string& spec);

// ok iff all type-specific conditions hold; violated lists the numbered
// conditions of the type's definition (0 flags a codomain range violation
// in type A, whose definition numbers only the two order conditions).
struct ValidityReport {
  bool ok = false;
  std::vector<int> violated;
  std::string message() const;
};

// throws "arity error" when values has the wrong length for the type
ValidityReport validate(const HessFn& h);

// I = { alpha_{i,j} : i < j <= h(i) }; throws on invalid h
LowerIdeal to_ideal(const HessFn& h);

// h(i) = i + #(I intersect Phi+_i); throws "not a lower ideal" when chain
// membership is not a prefix or the resulting h fails validation
HessFn from_ideal(const LowerIdeal& ideal, const RootTable& table);

// all valid Hessenberg functions, lexicographically sorted
std::vector<HessFn> enumerate_all(const LieType& type);

// all h' with to_ideal(h') contained in to_ideal(h), h itself included
std::vector<HessFn> enumerate_sub(const HessFn& h);

// ideal inclusion h_sub subset-of h
bool includes(const HessFn& h, const HessFn& h_sub);

long complex_dimension(const HessFn& h);

}  // namespace hessberg

#endif
