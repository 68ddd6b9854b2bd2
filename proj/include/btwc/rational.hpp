#pragma once

#include <gmpxx.h>

#include <string>

namespace btwc {

// Arbitrary-precision integer and rational types for the exact path.
// Geodesic counts grow factorially (a d-cube has d! geodesics between
// antipodes), so fixed-width integers are not an option.
using Int = mpz_class;
using Rat = mpq_class;

// mpq_class does not reduce to lowest terms on construction; every rational
// assembled from a numerator/denominator pair goes through here.
inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Canonical text form: "p/q" in lowest terms, "/1" elided ("5/2", "6").
inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// n choose 2.
inline Int choose2(const Int& n) { return n * (n - 1) / 2; }
inline Int choose2(long n) { return choose2(Int(n)); }

}  // namespace btwc
