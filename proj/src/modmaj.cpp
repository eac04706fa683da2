#include "modmaj/modmaj.hpp"

#include <stdexcept>

#include "modmaj/characters.hpp"
#include "modmaj/numtheory.hpp"

namespace modmaj {

ModularClassVector amod_by_character_formula(const Partition& shape) {
  if (shape.empty()) throw std::invalid_argument("amod_by_character_formula: empty shape");
  const int n = shape.size();
  const BigInt f = dimension(shape);
  std::vector<std::pair<int, BigInt>> chars;
  for (auto ell : numtheory::divisors(n)) {
    if (ell == 1) continue;
    BigInt chi = rect_character(shape, static_cast<int>(ell));
    if (chi != 0) chars.emplace_back(static_cast<int>(ell), std::move(chi));
  }
  ModularClassVector out{n, {}};
  out.counts.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    BigInt total = f;
    for (const auto& [ell, chi] : chars) {
      total += chi * static_cast<long>(numtheory::ramanujan_sum(ell, r));
    }
    BigInt count = exact_quotient(total, n, "character formula");
    if (count < 0) {
      throw InternalError("character formula: negative count for " + shape.to_string() +
                          " at r = " + std::to_string(r));
    }
    out.counts.push_back(std::move(count));
  }
  return out;
}

ClassWeightTable cyclic_class_weights(int n, int r) {
  ClassWeightTable table;
  table.group_order = n;
  for (auto ell : numtheory::divisors(n)) {
    const auto c = numtheory::ramanujan_sum(ell, r);
    if (c != 0) {
      table.weights[Partition::rectangle(static_cast<int>(ell), n / static_cast<int>(ell))] =
          static_cast<long>(c);
    }
  }
  return table;
}

BigInt conjugacy_class_size(const Partition& cycle_type) {
  // z_μ = prod_i i^{m_i} m_i!
  BigInt z = 1;
  std::map<int, unsigned> multiplicity;
  for (int part : cycle_type.parts()) ++multiplicity[part];
  for (const auto& [part, m] : multiplicity) {
    z *= power(part, m) * factorial(m);
  }
  return exact_quotient(factorial(static_cast<unsigned>(cycle_type.size())), z,
                        "conjugacy class size");
}

ClassWeightTable symmetric_trivial_class_weights(int n) {
  ClassWeightTable table;
  table.group_order = factorial(static_cast<unsigned>(n));
  for_each_partition(n, [&](const Partition& mu) {
    table.weights[mu] = conjugacy_class_size(mu);
  });
  return table;
}

BigInt induced_multiplicity(const ClassWeightTable& table, const Partition& shape) {
  BigInt total = 0;
  for (const auto& [mu, weight] : table.weights) {
    if (mu.size() != shape.size()) {
      throw std::invalid_argument("induced_multiplicity: cycle type " + mu.to_string() +
                                  " has the wrong size");
    }
    if (weight == 0) continue;
    total += weight * mn_character(shape, mu);
  }
  BigInt mult = exact_quotient(total, table.group_order, "induced multiplicity");
  if (mult < 0) throw InternalError("induced multiplicity is negative");
  return mult;
}

bool expected_zero(const Partition& shape, int r) {
  const int n = shape.size();
  if (n <= 1) return false;
  r = ((r % n) + n) % n;
  if (shape == Partition{2, 2} && (r == 1 || r == 3)) return true;
  if (shape == Partition{2, 2, 2} && (r == 1 || r == 5)) return true;
  if (shape == Partition{3, 3} && (r == 2 || r == 4)) return true;
  if (shape == Partition::hook(n, 1) && r == 0) return true;
  if (shape == Partition::hook(n, n - 2) && r == (n % 2 == 1 ? 0 : n / 2)) return true;
  if (shape == Partition::hook(n, 0) && r != 0) return true;
  if (shape == Partition::hook(n, n - 1)) {
    return n % 2 == 1 ? r != 0 : r != n / 2;
  }
  return false;
}

std::vector<ExceptionRecord> exception_records(int n) {
  if (n < 1) throw std::invalid_argument("exception_records: n must be >= 1");
  std::vector<Partition> candidates{Partition{2, 2}, Partition{2, 2, 2}, Partition{3, 3},
                                    Partition::hook(n, 0), Partition::hook(n, n - 1)};
  if (n >= 2) {
    candidates.push_back(Partition::hook(n, 1));
    candidates.push_back(Partition::hook(n, n - 2));
  }
  std::map<Partition, std::vector<int>> found;
  for (const auto& shape : candidates) {
    if (shape.size() != n || found.count(shape)) continue;
    std::vector<int> residues;
    for (int r = 0; r < n; ++r) {
      if (expected_zero(shape, r)) residues.push_back(r);
    }
    if (!residues.empty()) found.emplace(shape, std::move(residues));
  }
  std::vector<ExceptionRecord> out;
  for (auto& [shape, residues] : found) out.push_back({shape, std::move(residues)});
  return out;
}

}  // namespace modmaj
