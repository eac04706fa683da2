#include "modmaj/qpoly.hpp"

#include <stdexcept>
#include <utility>

namespace modmaj {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::monomial(int exponent, const BigInt& c) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(exponent) + 1, 0);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

BigInt IntPolynomial::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].get_str();
    if (i == 1) out += "*q";
    if (i > 1) out += "*q^" + std::to_string(i);
  }
  return out;
}

IntPolynomial q_int(int a) {
  if (a < 1) throw std::invalid_argument("q_int: argument must be >= 1");
  return IntPolynomial(std::vector<BigInt>(static_cast<std::size_t>(a), 1));
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& r) {
  if (p.is_zero() || r.is_zero()) return {};
  const auto& x = p.coefficients();
  const auto& y = r.coefficients();
  std::vector<BigInt> out(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial exact_divide(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide: zero divisor");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw InternalError("exact_divide: divisor degree too large");
  std::vector<BigInt> rem = p.coefficients();
  const auto& div = d.coefficients();
  const std::size_t dd = div.size() - 1;
  const BigInt& lead = div.back();
  std::vector<BigInt> quot(rem.size() - dd, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigInt& top = rem[k + dd];
    if (top == 0) continue;
    quot[k] = exact_quotient(top, lead, "exact_divide");
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= quot[k] * div[j];
  }
  for (const auto& c : rem) {
    if (c != 0) throw InternalError("exact_divide: nonzero remainder");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial divide_by_q_int(const IntPolynomial& p, int a) {
  if (a < 1) throw std::invalid_argument("divide_by_q_int: argument must be >= 1");
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  const std::size_t width = static_cast<std::size_t>(a) - 1;
  if (c.size() <= width) throw InternalError("divide_by_q_int: divisor degree too large");
  // p = quot * [a]_q  =>  quot_i = p_i - (quot_{i-1} + ... + quot_{i-a+1}).
  std::vector<BigInt> quot(c.size() - width, 0);
  BigInt window = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    BigInt value = c[i] - window;
    if (i < quot.size()) {
      quot[i] = value;
      window += value;
    } else if (value != 0) {
      throw InternalError("divide_by_q_int: nonzero remainder");
    }
    if (i >= width && i - width < quot.size()) window -= quot[i - width];
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial multiply_by_q_int(const IntPolynomial& p, int a) {
  if (a < 1) throw std::invalid_argument("multiply_by_q_int: argument must be >= 1");
  if (p.is_zero()) return {};
  const auto& c = p.coefficients();
  const std::size_t width = static_cast<std::size_t>(a);
  std::vector<BigInt> out(c.size() + width - 1, 0);
  BigInt window = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < c.size()) window += c[k];
    if (k >= width) window -= c[k - width];
    out[k] = window;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial maj_generating_polynomial(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("maj_generating_polynomial: empty shape");
  int shift = 0;
  for (int b = 1; b <= shape.length(); ++b) shift += (b - 1) * shape.row(b);
  IntPolynomial poly = IntPolynomial::monomial(shift);
  for (int i = 2; i <= shape.size(); ++i) poly = multiply_by_q_int(poly, i);
  for (int h : shape.hook_lengths()) {
    if (h > 1) poly = divide_by_q_int(poly, h);
  }
  return poly;
}

IntPolynomial reduce_mod_qn_minus_1(const IntPolynomial& p, int n) {
  if (n < 1) throw std::invalid_argument("reduce_mod_qn_minus_1: n must be >= 1");
  std::vector<BigInt> folded(static_cast<std::size_t>(n), 0);
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % static_cast<std::size_t>(n)] += c[i];
  return IntPolynomial(std::move(folded));
}

ModularClassVector amod_by_qhook(const Partition& shape) {
  const int n = shape.size();
  const auto folded = reduce_mod_qn_minus_1(maj_generating_polynomial(shape), n);
  ModularClassVector out{n, std::vector<BigInt>(static_cast<std::size_t>(n), 0)};
  for (int r = 0; r < n; ++r) out.counts[static_cast<std::size_t>(r)] = folded.coefficient(r);
  return out;
}

}  // namespace modmaj
