#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace e6voa {

using Scalar = mpq_class;

// Accepts "p/q", "p" or "-p/q"; throws std::invalid_argument otherwise.
Scalar parse_scalar(std::string_view text);

// Canonical "p/q" (or "p" when the denominator is 1).
std::string to_string(const Scalar& x);

// Ordinary binomial coefficient for n >= 0; zero when k < 0 or k > n.
mpz_class binomial(long n, long k);

// p/q in lowest terms.
inline Scalar frac(long p, long q) {
  Scalar r(p);
  r /= q;
  return r;
}

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace e6voa
