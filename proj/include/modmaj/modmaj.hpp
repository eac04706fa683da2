#pragma once

#include <map>
#include <vector>

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"
#include "modmaj/tableaux.hpp"

namespace modmaj {

/// a_{λ,r} from rectangular character values and Ramanujan sums:
///   n * a_{λ,r} = f^λ + sum_{ℓ | n, ℓ != 1} χ^λ(ℓ^{n/ℓ}) c_ℓ(r).
/// Throws InternalError if some n * a_{λ,r} is not a multiple of n or is
/// negative.
ModularClassVector amod_by_character_formula(const Partition& shape);

/// Integer class weights c_μ = sum of χ^M(h) over h in H of cycle type μ,
/// together with |H|.
struct ClassWeightTable {
  std::map<Partition, BigInt> weights;
  BigInt group_order = 1;
};

/// H = C_n generated by the long cycle, M = χ^r: weight c_ℓ(r) on ℓ^{n/ℓ}.
ClassWeightTable cyclic_class_weights(int n, int r);
/// H = S_n, M trivial: weight = size of the conjugacy class.
ClassWeightTable symmetric_trivial_class_weights(int n);

/// n! / z_μ.
BigInt conjugacy_class_size(const Partition& cycle_type);

/// <M↑^{S_n}, S^λ> = (1/|H|) sum_μ c_μ χ^λ(μ). Throws std::invalid_argument
/// on a size mismatch and InternalError when the sum is not a nonnegative
/// multiple of |H|.
BigInt induced_multiplicity(const ClassWeightTable& table, const Partition& shape);

/// Whether (λ, r) is one of the listed cases where a_{λ,r} vanishes.
bool expected_zero(const Partition& shape, int r);

/// A shape together with the residues it is predicted to miss.
struct ExceptionRecord {
  Partition shape;
  std::vector<int> residues;
  friend bool operator==(const ExceptionRecord&, const ExceptionRecord&) = default;
};

/// All shapes of size n with a predicted zero, in lexicographic order.
std::vector<ExceptionRecord> exception_records(int n);

}  // namespace modmaj
