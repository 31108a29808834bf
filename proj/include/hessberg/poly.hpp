#ifndef HESSBERG_POLY_HPP
#define HESSBERG_POLY_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hessberg/rational.hpp"

namespace hessberg {

// Sparse multivariate polynomials over Rat in variables x1..xn, n <= kMaxVars.
// The monomial order is graded reverse lexicographic with x1 > x2 > ... > xn
// throughout the library; term lists are kept strictly descending in it.

inline constexpr int kMaxVars = 8;

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);

  static Monomial one(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int i, int power = 1);

  int nvars() const { return nvars_; }
  int deg() const { return deg_; }
  int exp(int i) const { return exps_[static_cast<size_t>(i - 1)]; }
  void set_exp(int i, int e);

  bool is_one() const { return deg_ == 0; }
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // quotient this / other; requires other.divides(*this)
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& other) const;
  bool operator!=(const Monomial& other) const { return !(*this == other); }

  std::string str() const;  // "x1^2*x2", "1" for the unit

 private:
  std::array<uint8_t, kMaxVars> exps_{};
  int16_t deg_ = 0;
  int8_t nvars_ = 0;
};

// a < b in degrevlex
bool degrevlex_less(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Rat coef;
};

class Poly {
 public:
  explicit Poly(int nvars = 0) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly variable(int nvars, int i);
  // c1*x1 + ... + cn*xn
  static Poly linear(int nvars, std::span<const int> coeffs);
  static Poly monomial(const Monomial& m, const Rat& c = 1);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }

  // throws on the zero polynomial
  int degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }
  Poly& operator*=(const Poly& other) { return *this = *this * other; }

  Poly scaled(const Rat& c) const;
  Poly mul_term(const Monomial& m, const Rat& c) const;
  Poly monic() const;  // leading coefficient 1; zero stays zero

  // exact substitution x_var := replacement
  Poly substitute(int var, const Poly& replacement) const;

  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  std::string str() const;
  // text grammar: term = [sign] coeff ["*"] {var "^" exp}, whitespace-insensitive
  static Poly parse(const std::string& text, int nvars);

  // terms must be sorted strictly descending; used by the arithmetic kernels
  static Poly from_sorted_terms(int nvars, std::vector<Term> terms);

 private:
  int nvars_;
  std::vector<Term> terms_;  // strictly descending in degrevlex, no zero coefs
};

}  // namespace hessberg

#endif
