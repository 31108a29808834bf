#ifndef HESSBERG_RATIONAL_HPP
#define HESSBERG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hessberg {

// Exact coefficient arithmetic. Every value in the library is a rational or an
// integer; no floating point anywhere.
using Rat = mpq_class;
using Int = mpz_class;

inline Int factorial(long n) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

inline Int pow2(long k) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return r;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

}  // namespace hessberg

#endif
