#pragma once

#include <string>
#include <vector>

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"
#include "modmaj/tableaux.hpp"

namespace modmaj {

/// Dense polynomial in q with exact integer coefficients; index = exponent.
/// The highest stored coefficient is nonzero; the zero polynomial stores
/// nothing.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);
  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(int exponent, const BigInt& c = 1);

  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of q^i; 0 outside the stored range.
  BigInt coefficient(int i) const;
  BigInt evaluate(const BigInt& q) const;

  /// "c0 + c1*q + c2*q^2 + ..." with zero terms omitted; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

/// [a]_q = 1 + q + ... + q^{a-1}. Throws std::invalid_argument for a < 1.
IntPolynomial q_int(int a);

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& r);

/// Quotient by long division; throws InternalError if the remainder is
/// nonzero or a step needs a non-integral coefficient, and
/// std::invalid_argument if d is zero.
IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& d);

/// exact_divide(p, q_int(a)) in O(deg p).
IntPolynomial divide_by_q_int(const IntPolynomial& p, int a);

/// p * [a]_q in O(deg p).
IntPolynomial multiply_by_q_int(const IntPolynomial& p, int a);

/// q^{d(λ)} [n]_q! / prod_c [h_c]_q, whose q^i coefficient counts the
/// tableaux with maj = i.
IntPolynomial maj_generating_polynomial(const Partition& shape);

/// Folds exponents mod n; the result has degree < n.
IntPolynomial reduce_mod_qn_minus_1(const IntPolynomial& p, int n);

/// a_{λ,r} read off from the folded maj generating polynomial.
ModularClassVector amod_by_qhook(const Partition& shape);

}  // namespace modmaj
