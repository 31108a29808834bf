#include "hessberg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace hessberg {

Monomial::Monomial(int nvars) : nvars_(static_cast<int8_t>(nvars)) {
  if (nvars < 0 || nvars > kMaxVars)
    throw std::invalid_argument("variable count out of range");
}

Monomial Monomial::var(int nvars, int i, int power) {
  Monomial m(nvars);
  m.set_exp(i, power);
  return m;
}

void Monomial::set_exp(int i, int e) {
  if (i < 1 || i > nvars_) throw std::out_of_range("variable index");
  if (e < 0 || e > 255) throw std::out_of_range("exponent");
  deg_ = static_cast<int16_t>(deg_ - exps_[static_cast<size_t>(i - 1)] + e);
  exps_[static_cast<size_t>(i - 1)] = static_cast<uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  for (int k = 0; k < nvars_; ++k)
    if (exps_[k] > other.exps_[k]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (int k = 0; k < nvars_; ++k) {
    int e = exps_[k] + other.exps_[k];
    if (e > 255) throw std::overflow_error("monomial exponent overflow");
    r.exps_[k] = static_cast<uint8_t>(e);
  }
  r.deg_ = static_cast<int16_t>(deg_ + other.deg_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(nvars_);
  for (int k = 0; k < nvars_; ++k)
    r.exps_[k] = static_cast<uint8_t>(exps_[k] - other.exps_[k]);
  r.deg_ = static_cast<int16_t>(deg_ - other.deg_);
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  int d = 0;
  for (int k = 0; k < a.nvars_; ++k) {
    r.exps_[k] = std::max(a.exps_[k], b.exps_[k]);
    d += r.exps_[k];
  }
  r.deg_ = static_cast<int16_t>(d);
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  for (int k = 0; k < a.nvars_; ++k)
    if (a.exps_[k] != 0 && b.exps_[k] != 0) return false;
  return true;
}

bool Monomial::operator==(const Monomial& other) const {
  return nvars_ == other.nvars_ && deg_ == other.deg_ &&
         std::equal(exps_.begin(), exps_.begin() + nvars_, other.exps_.begin());
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= nvars_; ++i) {
    int e = exp(i);
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << i;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

bool degrevlex_less(const Monomial& a, const Monomial& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.nvars(); i >= 1; --i) {
    int ea = a.exp(i), eb = b.exp(i);
    if (ea != eb) return ea > eb;  // rightmost difference, larger exponent loses
  }
  return false;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.push_back({Monomial::one(nvars), c});
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Poly p(nvars);
  p.terms_.push_back({Monomial::var(nvars, i), Rat(1)});
  return p;
}

Poly Poly::linear(int nvars, std::span<const int> coeffs) {
  Poly p(nvars);
  for (int i = 1; i <= nvars; ++i) {
    int c = coeffs[static_cast<size_t>(i - 1)];
    if (c != 0) p.terms_.push_back({Monomial::var(nvars, i), Rat(c)});
  }
  // x1 > x2 > ... > xn already descending for degree-1 monomials
  return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

const Term& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

int Poly::degree() const {
  if (terms_.empty())
    throw std::domain_error("degree of the zero polynomial is undefined");
  int d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.deg());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.deg();
  for (const Term& t : terms_)
    if (t.mono.deg() != d) return false;
  return true;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, -t.coef});
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("variable-count mismatch");
  Poly r(nvars_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    const Term& a = terms_[i];
    const Term& b = other.terms_[j];
    if (a.mono == b.mono) {
      Rat c = a.coef + b.coef;
      if (c != 0) r.terms_.push_back({a.mono, std::move(c)});
      ++i, ++j;
    } else if (degrevlex_less(b.mono, a.mono)) {
      r.terms_.push_back(a);
      ++i;
    } else {
      r.terms_.push_back(b);
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < other.terms_.size(); ++j) r.terms_.push_back(other.terms_[j]);
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  if (nvars_ != other.nvars_)
    throw std::invalid_argument("variable-count mismatch");
  if (is_zero() || other.is_zero()) return Poly(nvars_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const Term& a : terms_)
    for (const Term& b : other.terms_)
      prod.push_back({a.mono * b.mono, a.coef * b.coef});
  std::sort(prod.begin(), prod.end(), [](const Term& a, const Term& b) {
    return degrevlex_less(b.mono, a.mono);
  });
  Poly r(nvars_);
  r.terms_.reserve(prod.size());
  for (Term& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coef += t.coef;
      if (r.terms_.back().coef == 0) r.terms_.pop_back();
    } else {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, t.coef * c});
  return r;
}

Poly Poly::mul_term(const Monomial& m, const Rat& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono * m, t.coef * c});
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading_term().coef);
}

Poly Poly::substitute(int var, const Poly& replacement) const {
  if (var < 1 || var > nvars_) throw std::out_of_range("variable index");
  if (replacement.nvars_ != nvars_)
    throw std::invalid_argument("variable-count mismatch");
  int maxexp = 0;
  for (const Term& t : terms_) maxexp = std::max(maxexp, t.mono.exp(var));
  std::vector<Poly> powers;
  powers.push_back(Poly::constant(nvars_, 1));
  for (int k = 1; k <= maxexp; ++k)
    powers.push_back(powers.back() * replacement);
  Poly r(nvars_);
  for (const Term& t : terms_) {
    int e = t.mono.exp(var);
    Monomial rest = t.mono;
    rest.set_exp(var, 0);
    r += powers[static_cast<size_t>(e)].mul_term(rest, t.coef);
  }
  return r;
}

bool Poly::operator==(const Poly& other) const {
  if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size())
    return false;
  for (size_t k = 0; k < terms_.size(); ++k)
    if (terms_[k].mono != other.terms_[k].mono ||
        terms_[k].coef != other.terms_[k].coef)
      return false;
  return true;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    Rat c = t.coef;
    if (first) {
      if (c < 0) {
        os << '-';
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (t.mono.is_one()) {
      os << to_string(c);
    } else {
      if (c != 1) os << to_string(c) << '*';
      os << t.mono.str();
    }
    first = false;
  }
  return os.str();
}

Poly Poly::from_sorted_terms(int nvars, std::vector<Term> terms) {
  Poly p(nvars);
  p.terms_ = std::move(terms);
  return p;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }
  long read_uint() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      fail("expected digit");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > 1'000'000'000L) fail("number too large");
      ++pos;
    }
    return v;
  }
};

}  // namespace

Poly Poly::parse(const std::string& text, int nvars) {
  Cursor c{text};
  Poly result(nvars);
  bool any_term = false;
  while (!c.eof()) {
    int sign = 1;
    while (true) {
      char ch = c.peek();
      if (ch == '+') {
        ++c.pos;
      } else if (ch == '-') {
        sign = -sign;
        ++c.pos;
      } else {
        break;
      }
    }
    Rat coef(sign);
    bool saw_number = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      long num = c.read_uint();
      long den = 1;
      if (c.peek() == '/') {
        ++c.pos;
        den = c.read_uint();
        if (den == 0) c.fail("zero denominator");
      }
      coef = Rat(sign * num, den);
      coef.canonicalize();
      saw_number = true;
    }
    Monomial mono = Monomial::one(nvars);
    bool saw_var = false;
    while (true) {
      if (c.peek() == '*') {
        ++c.pos;
        continue;
      }
      if (c.peek() != 'x') break;
      ++c.pos;
      long idx = c.read_uint();
      if (idx < 1 || idx > nvars) c.fail("variable index out of range");
      long e = 1;
      if (c.peek() == '^') {
        ++c.pos;
        e = c.read_uint();
      }
      mono.set_exp(static_cast<int>(idx),
                   mono.exp(static_cast<int>(idx)) + static_cast<int>(e));
      saw_var = true;
    }
    if (!saw_number && !saw_var) c.fail("expected term");
    result += Poly::monomial(mono, coef);
    any_term = true;
  }
  if (!any_term) throw std::invalid_argument("empty polynomial text");
  return result;
}

}  // namespace hessberg
