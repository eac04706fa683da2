#pragma once

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"

namespace modmaj {

/// χ^λ(μ) by the Murnaghan–Nakayama rule, stripping the cycles of μ
/// largest first and memoizing on (remaining shape, cycles left). The memo
/// is local to the call. Throws std::invalid_argument when |λ| != |μ|.
BigInt mn_character(const Partition& shape, const Partition& cycle_type);

/// ℓ^{n/ℓ}. Throws std::invalid_argument unless ℓ divides n.
Partition rectangular_cycle_type(int n, int ell);

/// |χ^λ(ℓ^{n/ℓ})|: zero when the ℓ-core is nonempty, otherwise
/// prod{i <= n : ℓ | i} / prod{h_c : ℓ | h_c}.
BigInt rect_character_magnitude(const Partition& shape, int ell);

/// Sign of χ^λ(ℓ^{n/ℓ}) as the product of (-1)^height along one greedy
/// ribbon-stripping sequence. Throws std::invalid_argument when the ℓ-core
/// is nonempty.
int rect_character_sign(const Partition& shape, int ell,
                        RemovalOrder order = RemovalOrder::first);

/// χ^λ(ℓ^{n/ℓ}) = sign * magnitude.
BigInt rect_character(const Partition& shape, int ell);

}  // namespace modmaj
