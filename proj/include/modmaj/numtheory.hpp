#pragma once

#include <cstdint>
#include <vector>

namespace modmaj::numtheory {

using Int = std::int64_t;

// All functions reject nonpositive moduli with std::invalid_argument.

int moebius(Int m);
Int totient(Int m);
std::vector<Int> divisors(Int n);

/// gcd with gcd(j, 0) = j and a nonnegative result.
Int gcd(Int a, Int b);

/// Ramanujan sum c_j(s) by Hölder's closed form
/// mu(j/g) * phi(j) / phi(j/g) with g = gcd(j, s).
Int ramanujan_sum(Int j, Int s);

/// Ramanujan sum by the divisor-sum form sum_{d | gcd(j,s)} mu(j/d) * d.
/// Shares no code path with ramanujan_sum beyond moebius/gcd.
Int ramanujan_sum_oracle(Int j, Int s);

/// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t size = 0;
  std::vector<Int> entries;

  Int at(std::size_t row, std::size_t col) const { return entries[row * size + col]; }
  Int& at(std::size_t row, std::size_t col) { return entries[row * size + col]; }
  bool is_scalar(Int diagonal) const;
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// C = (c_{n/r}(s)) with rows s | n and columns r | n, both ascending.
IntMatrix ramanujan_matrix(Int n);

/// C * C for the matrix above. Equals n * I.
IntMatrix ramanujan_matrix_square(Int n);

}  // namespace modmaj::numtheory
