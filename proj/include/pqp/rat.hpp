#ifndef PQP_RAT_HPP
#define PQP_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pqp {

// Exact rational scalar. All solver arithmetic happens on this type; there is
// no floating-point path anywhere. GMP keeps values canonical (lowest terms,
// positive denominator) under arithmetic, so sign tests are always exact.
using Rat = mpq_class;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data.
struct StructureError : Error {
  using Error::Error;
};

// A condition that is guaranteed by construction was observed to fail
// (singular basis, pivot cap, repeated basis). Not a user error.
struct InvariantFault : Error {
  using Error::Error;
};

// n/d reduced to canonical form. d must be nonzero.
Rat make_rat(long n, long d = 1);

// Accepts integers ("7", "-3"), finite decimals ("0.25" -> 1/4) and
// fractions ("p/q" with positive q). Decimals convert exactly; anything
// float-flavored ("1e3", NaN) is rejected.
Rat parse_rat(const std::string& text);

// Canonical exact form: "p/q", or just "p" when the denominator is 1.
std::string rat_str(const Rat& v);

// Decimal rendering with `sig_digits` significant digits, ties rounded to
// even. Plain notation for moderate exponents, scientific otherwise.
std::string rat_decimal(const Rat& v, int sig_digits = 12);

std::string vec_str(const std::vector<Rat>& v);

}  // namespace pqp

#endif
