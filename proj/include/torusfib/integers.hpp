#pragma once

// Exact integer arithmetic helpers on top of GMP. Everything in this
// library is integer-exact; no floating point appears anywhere.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>

namespace torusfib {

using Int = mpz_class;

inline bool fits_int64(const Int& v) { return v.fits_slong_p(); }

inline Int gcd_int(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// g = s*a + t*b with g = gcd(a, b) >= 0.
struct ExtendedGcd {
  Int g, s, t;
};

inline ExtendedGcd extended_gcd(const Int& a, const Int& b) {
  ExtendedGcd r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
             a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Integer square root, defined only when the argument is a perfect square.
inline std::optional<Int> exact_sqrt(const Int& v) {
  if (v < 0 || mpz_perfect_square_p(v.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// Exact quotient; throws unless b divides a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0 || mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) == 0)
    throw std::domain_error("exact_div: " + b.get_str() +
                            " does not divide " + a.get_str());
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace torusfib
