#include "modmaj/numtheory.hpp"

#include <stdexcept>
#include <string>

#include "modmaj/common.hpp"

namespace modmaj {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator,
                      const char* context) {
  if (denominator == 0) {
    throw InternalError(std::string(context) + ": division by zero");
  }
  BigInt quotient;
  BigInt remainder;
  mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
              denominator.get_mpz_t());
  if (remainder != 0) {
    throw InternalError(std::string(context) + ": inexact division " +
                        numerator.get_str() + " / " + denominator.get_str());
  }
  return quotient;
}

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt power(const BigInt& base, unsigned exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

}  // namespace modmaj

namespace modmaj::numtheory {

namespace {

void require_positive(Int m, const char* what) {
  if (m < 1) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " +
                                std::to_string(m));
  }
}

}  // namespace

Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int moebius(Int m) {
  require_positive(m, "moebius");
  int sign = 1;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    m /= p;
    if (m % p == 0) return 0;
    sign = -sign;
  }
  if (m > 1) sign = -sign;
  return sign;
}

Int totient(Int m) {
  require_positive(m, "totient");
  Int result = m;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<Int> divisors(Int n) {
  require_positive(n, "divisors");
  std::vector<Int> small;
  std::vector<Int> large;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Int ramanujan_sum(Int j, Int s) {
  require_positive(j, "ramanujan_sum");
  const Int g = gcd(j, s);
  const Int reduced = j / g;
  return moebius(reduced) * (totient(j) / totient(reduced));
}

Int ramanujan_sum_oracle(Int j, Int s) {
  require_positive(j, "ramanujan_sum_oracle");
  const Int g = gcd(j, s);
  Int total = 0;
  for (Int d : divisors(g)) {
    total += moebius(j / d) * d;
  }
  return total;
}

bool IntMatrix::is_scalar(Int diagonal) const {
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t c = 0; c < size; ++c) {
      if (at(r, c) != (r == c ? diagonal : 0)) return false;
    }
  }
  return true;
}

IntMatrix ramanujan_matrix(Int n) {
  const auto divs = divisors(n);
  IntMatrix c{divs.size(), std::vector<Int>(divs.size() * divs.size())};
  for (std::size_t row = 0; row < divs.size(); ++row) {
    for (std::size_t col = 0; col < divs.size(); ++col) {
      c.at(row, col) = ramanujan_sum(n / divs[col], divs[row]);
    }
  }
  return c;
}

IntMatrix ramanujan_matrix_square(Int n) {
  const IntMatrix c = ramanujan_matrix(n);
  IntMatrix sq{c.size, std::vector<Int>(c.entries.size())};
  for (std::size_t i = 0; i < c.size; ++i) {
    for (std::size_t j = 0; j < c.size; ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < c.size; ++k) acc += c.at(i, k) * c.at(k, j);
      sq.at(i, j) = acc;
    }
  }
  return sq;
}

}  // namespace modmaj::numtheory
