#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"
#include "modmaj/tableaux.hpp"

namespace modmaj {

/// Maps `fn` over `items` on `jobs` threads; output order matches input order.
template <typename T, typename Fn>
auto parallel_map(const std::vector<T>& items, int jobs, Fn fn)
    -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<std::optional<R>> slots(items.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i; !failed && (i = next++) < items.size();) {
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  const auto count = static_cast<std::size_t>(std::max(1, jobs));
  if (count == 1 || items.size() < 2) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(count, items.size()); ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<R> out;
  out.reserve(items.size());
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

/// Per-shape report entry.
struct ShapeRecord {
  Partition shape;
  BigInt f;
  ModularClassVector a;
  std::vector<int> zero_residues;
  std::vector<int> predicted_residues;
  std::map<std::string, bool> flags;
};

/// Outcome of one suite at one size n.
struct SuiteResult {
  std::string suite;
  int n = 0;
  std::uint64_t shapes = 0;
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  /// Suite-specific tallies (e.g. "census" for the f < n^3 count).
  std::map<std::string, std::uint64_t> counters;
  /// Human-readable descriptions of the first few violations.
  std::vector<std::string> failures;
  std::vector<ShapeRecord> records;
};

struct SweepOptions {
  int jobs = 1;
  std::uint64_t enumeration_budget = kDefaultEnumerationBudget;
};

/// Suites run by `verify`.
const std::vector<std::string>& verify_suites();
/// Suites run by `bounds`.
const std::vector<std::string>& bound_suites();

/// Runs one named suite at one size. Throws std::invalid_argument for an
/// unknown suite name.
SuiteResult run_suite(const std::string& suite, int n, const SweepOptions& options);

/// Record for one shape with a computed a-vector.
ShapeRecord make_record(const Partition& shape, const BigInt& f, const ModularClassVector& a);

/// Classification sweep over every λ ⊢ n <= n_max using the q-hook route.
struct TheoremReport {
  int n_max = 0;
  std::uint64_t shapes = 0;
  std::uint64_t mismatches = 0;
  /// #{λ ⊢ n : f^λ < n^3} summed over 1 <= n <= n_max.
  std::uint64_t small_dimension_shapes = 0;
  std::vector<ShapeRecord> mismatch_records;
  /// Shapes with at least one observed or predicted zero.
  std::vector<ShapeRecord> exception_records;
};

TheoremReport verify_main_theorem(int n_max, int jobs = 1);

}  // namespace modmaj
