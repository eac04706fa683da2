#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace modmaj {

/// Arbitrary-precision signed integer used for every count and character value.
using BigInt = mpz_class;

/// Raised when an exactness guarantee fails (a division that must be exact
/// left a remainder, a count came out negative, ...). Always a bug or an
/// inconsistent input table, never a user error.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when enumeration would exceed the caller's tableau budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const BigInt& value) { return value.get_str(); }

/// Exact quotient; throws InternalError on a nonzero remainder.
BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator,
                      const char* context);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt power(const BigInt& base, unsigned exponent);

}  // namespace modmaj
