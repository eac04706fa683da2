#include "modmaj/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "modmaj/characters.hpp"
#include "modmaj/numtheory.hpp"
#include "modmaj/qpoly.hpp"

namespace modmaj {

namespace {

double log_of(const BigInt& x) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

BigInt abs_of(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt pow_int(long base, unsigned exponent) { return power(BigInt(base), exponent); }

}  // namespace

ShapeData analyze(const Partition& shape) {
  ShapeData data{shape, dimension(shape), amod_by_qhook(shape), {}};
  for (auto ell : numtheory::divisors(shape.size())) {
    data.rect_chars[static_cast<int>(ell)] = rect_character(shape, static_cast<int>(ell));
  }
  return data;
}

bool equidistribution_check(const ShapeData& data) {
  const long n = data.shape.size();
  const BigInt rhs = 4 * pow_int(n, 5) * data.f * data.f;
  for (const auto& a : data.a.counts) {
    const BigInt dev = n * a - data.f;
    if (dev * dev * data.f > rhs) return false;
  }
  return true;
}

bool equidistribution_check(const Partition& shape) {
  return equidistribution_check(analyze(shape));
}

std::optional<bool> dist_check(const ShapeData& data) {
  const long n = data.shape.size();
  if (data.f < pow_int(n, 5)) return std::nullopt;
  for (const auto& a : data.a.counts) {
    if (abs_of(n * a - data.f) * n >= data.f) return false;
  }
  return true;
}

std::optional<bool> dist_check(const Partition& shape) { return dist_check(analyze(shape)); }

bool fl_bound_check(const Partition& shape, int ell, const BigInt& chi, const BigInt& f) {
  const int n = shape.size();
  if (ell < 1 || n % ell != 0) throw std::invalid_argument("fl_bound_check: ℓ must divide n");
  const auto s = static_cast<unsigned>(n / ell);
  const auto e = static_cast<unsigned>(ell);
  const BigInt lhs = power(abs_of(chi), e) * factorial(static_cast<unsigned>(n));
  const BigInt rhs = power(factorial(s), e) * pow_int(ell, s * e) * f;
  return lhs <= rhs;
}

bool fl_bound_check(const Partition& shape, int ell) {
  return fl_bound_check(shape, ell, rect_character(shape, ell), dimension(shape));
}

double fl_log_bound(int n, int ell, const BigInt& f) {
  if (ell < 2 || n % ell != 0) throw std::invalid_argument("fl_log_bound: need ℓ >= 2, ℓ | n");
  const double dn = n;
  const double dl = ell;
  const double log_sqrt_2pi = 0.5 * std::log(2.0 * std::numbers::pi);
  return (1.0 - 1.0 / dl) * (0.5 * std::log(dn) - log_of(f) + log_sqrt_2pi) +
         dl / (12.0 * dn) - 0.5 * std::log(dl);
}

bool fl_log_check(const ShapeData& data) {
  for (const auto& [ell, chi] : data.rect_chars) {
    if (ell == 1 || chi == 0) continue;
    const double lhs = log_of(abs_of(chi)) - log_of(data.f);
    if (lhs > fl_log_bound(data.shape.size(), ell, data.f) + kLogBoundSlack) return false;
  }
  return true;
}

std::optional<bool> phi_d_check(const ShapeData& data, int d) {
  if (d != 1 && d != 2) throw std::invalid_argument("phi_d_check: d must be 1 or 2");
  const long n = data.shape.size();
  const BigInt nd = pow_int(n, static_cast<unsigned>(d));
  for (const auto& [ell, chi] : data.rect_chars) {
    if (ell == 1 || chi == 0) continue;
    if (abs_of(chi) * nd * static_cast<long>(numtheory::totient(ell)) > data.f) {
      return std::nullopt;
    }
  }
  const BigInt scale = pow_int(n, static_cast<unsigned>(d - 1));
  for (const auto& a : data.a.counts) {
    if (abs_of(n * a - data.f) * scale >= data.f) return false;
  }
  return true;
}

std::optional<bool> phi_d_check(const Partition& shape, int d) {
  return phi_d_check(analyze(shape), d);
}

bool n_cubed_criterion(const Partition& shape) {
  return dimension(shape) >= pow_int(shape.size(), 3);
}

bool n_cubed_criterion(const ShapeData& data) {
  return data.f >= pow_int(data.shape.size(), 3);
}

bool n_cubed_check(const ShapeData& data) {
  if (!n_cubed_criterion(data)) return true;
  return std::all_of(data.a.counts.begin(), data.a.counts.end(),
                     [](const BigInt& a) { return a >= 1; });
}

bool excess_binomial_check(const ShapeData& data) {
  const auto n = static_cast<unsigned>(data.shape.size());
  BigInt op_product = 1;
  for (int h : data.shape.opposite_hook_lengths()) op_product *= h;
  const int cap = capped_excess(data.shape);
  for (int m = 0; m <= cap; ++m) {
    const auto um = static_cast<unsigned>(m);
    if (op_product > factorial(n - um) * factorial(um + 1)) return false;
    if ((m + 1) * data.f < binomial(n, um)) return false;
  }
  return true;
}

bool first_residue_gap_check(const ShapeData& data) {
  const int n = data.shape.size();
  if (n < 2) return true;
  const BigInt& a1 = data.a[1];
  return a1 <= 1 || 6 * a1 >= n - 6;
}

Partition sample_partition(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("sample_partition: n must be >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double cut = unit(rng);
  std::vector<int> parts;
  int run = 1;
  for (int i = 1; i < n; ++i) {
    if (unit(rng) < cut) {
      parts.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts.push_back(run);
  std::sort(parts.rbegin(), parts.rend());
  return Partition(std::move(parts));
}

namespace {

bool large_shape_applies(const Partition& shape) {
  const int n = shape.size();
  return shape.row(1) < n - 7 && shape.length() < n - 7;
}

void record_large_shape(const Partition& shape, LargeShapeSample& out) {
  ++out.sampled;
  if (dimension(shape) < pow_int(shape.size(), 5)) {
    ++out.violations;
    if (out.violating.size() < 16) out.violating.push_back(shape);
  }
}

}  // namespace

LargeShapeSample large_shape_sample(int n, std::uint64_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LargeShapeSample out;
  std::uint64_t attempts = 0;
  while (out.sampled < samples && attempts < 100 * samples + 100) {
    ++attempts;
    Partition shape = sample_partition(n, rng);
    if (large_shape_applies(shape)) record_large_shape(shape, out);
  }
  return out;
}

LargeShapeSample large_shape_exhaustive(int n) {
  LargeShapeSample out;
  for_each_partition(n, [&](const Partition& shape) {
    if (large_shape_applies(shape)) record_large_shape(shape, out);
  });
  return out;
}

}  // namespace modmaj
