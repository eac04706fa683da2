#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"
#include "modmaj/tableaux.hpp"

namespace modmaj {

/// Everything the bound checks need about one shape, computed once.
struct ShapeData {
  Partition shape;
  BigInt f;
  ModularClassVector a;
  /// χ^λ(ℓ^{n/ℓ}) for every divisor ℓ of n.
  std::map<int, BigInt> rect_chars;
};

/// a from the q-hook route, characters from the hook-quotient route.
ShapeData analyze(const Partition& shape);

/// |a/f - 1/n| <= 2 n^{3/2} / sqrt(f), as (n a - f)^2 f <= 4 n^5 f^2.
bool equidistribution_check(const ShapeData& data);
bool equidistribution_check(const Partition& shape);

/// When f >= n^5: |n a - f| n < f for every r. Empty when f < n^5.
std::optional<bool> dist_check(const ShapeData& data);
std::optional<bool> dist_check(const Partition& shape);

/// |χ|^ℓ n! <= (s!)^ℓ ℓ^{sℓ} f with s = n/ℓ.
bool fl_bound_check(const Partition& shape, int ell, const BigInt& chi, const BigInt& f);
bool fl_bound_check(const Partition& shape, int ell);

/// (1 - 1/ℓ)[ln n / 2 - ln f + ln sqrt(2π)] + ℓ/(12n) - ln(ℓ)/2.
double fl_log_bound(int n, int ell, const BigInt& f);

inline constexpr double kLogBoundSlack = 1e-9;

/// ln(|χ|/f) <= fl_log_bound + slack for every ℓ | n, ℓ >= 2, χ != 0.
bool fl_log_check(const ShapeData& data);

/// d in {1, 2}. If |χ| n^d φ(ℓ) <= f for every ℓ != 1 with nonzero χ,
/// returns whether |n a - f| n^{d-1} < f for every r; otherwise empty.
std::optional<bool> phi_d_check(const ShapeData& data, int d);
std::optional<bool> phi_d_check(const Partition& shape, int d);

/// f >= n^3.
bool n_cubed_criterion(const Partition& shape);
bool n_cubed_criterion(const ShapeData& data);
/// n_cubed_criterion implies every a_{λ,r} >= 1.
bool n_cubed_check(const ShapeData& data);

/// For 0 <= M <= capped_excess: prod h^op <= (n-M)!(M+1)! and
/// (M+1) f >= binom(n, M).
bool excess_binomial_check(const ShapeData& data);

/// a_{λ,1} > 1 implies 6 a_{λ,1} >= n - 6.
bool first_residue_gap_check(const ShapeData& data);

/// Random partition of n by sorting a random composition whose cut
/// probability is itself drawn uniformly.
Partition sample_partition(int n, std::mt19937_64& rng);

struct LargeShapeSample {
  std::uint64_t sampled = 0;    // shapes meeting λ_1, λ_1' < n - 7
  std::uint64_t violations = 0; // of those, shapes with f < n^5
  std::vector<Partition> violating;
};

/// Samples shapes of size n (>= 81) with λ_1 < n - 7 and λ_1' < n - 7 and
/// checks f >= n^5 on each.
LargeShapeSample large_shape_sample(int n, std::uint64_t samples, std::uint64_t seed);
/// Same predicate, exhaustively over every partition of n.
LargeShapeSample large_shape_exhaustive(int n);

}  // namespace modmaj
