#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "modmaj/common.hpp"
#include "modmaj/partition.hpp"

namespace modmaj {

/// (a_{λ,0}, ..., a_{λ,n-1}): how many tableaux have maj ≡ r (mod n).
struct ModularClassVector {
  int n = 0;
  std::vector<BigInt> counts;

  const BigInt& operator[](int r) const;
  BigInt total() const;
  std::vector<int> zero_residues() const;
  friend bool operator==(const ModularClassVector&, const ModularClassVector&) = default;
};

/// A standard filling of a shape. Stored as the row of each entry (the
/// Yamanouchi word), which determines the tableau.
class StandardTableau {
 public:
  /// `rows[k]` is the 1-based French row holding entry k + 1. Throws
  /// std::invalid_argument if the word is not a standard filling of `shape`.
  StandardTableau(Partition shape, std::vector<int> rows);

  const Partition& shape() const { return shape_; }
  int size() const { return shape_.size(); }
  int row_of(int entry) const { return rows_[static_cast<std::size_t>(entry - 1)]; }
  int column_of(int entry) const { return columns_[static_cast<std::size_t>(entry - 1)]; }
  /// Entry at a cell of the shape.
  int at(Cell c) const;
  const std::vector<int>& row_word() const { return rows_; }

  friend bool operator==(const StandardTableau& x, const StandardTableau& y) {
    return x.shape_ == y.shape_ && x.rows_ == y.rows_;
  }

 private:
  Partition shape_;
  std::vector<int> rows_;
  std::vector<int> columns_;
};

/// Lexicographic backtracking over placements of 1..n. Single consumer.
class SytStream {
 public:
  explicit SytStream(Partition shape);

  /// Advances to the next tableau; false once exhausted.
  bool next();
  /// Row word of the current tableau (valid after next() returned true).
  const std::vector<int>& row_word() const { return word_; }
  StandardTableau current() const { return StandardTableau(shape_, word_); }

 private:
  bool fits(int row) const;
  void place(std::size_t from);

  Partition shape_;
  std::vector<int> word_;    // 0-based rows while enumerating
  std::vector<int> filled_;  // cells used per row
  std::vector<int> out_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<StandardTableau> enumerate_syt(const Partition& shape);

/// i such that i + 1 sits in a strictly higher row than i.
std::vector<int> descent_set(const StandardTableau& t);
int maj(const StandardTableau& t);
StandardTableau transpose(const StandardTableau& t);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Histogram of maj mod n over every tableau. Throws BudgetExceeded if the
/// shape has more than `budget` tableaux.
ModularClassVector amod_by_enumeration(const Partition& shape,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// b_{λ,i} histogram by enumeration (index = maj).
std::vector<BigInt> maj_counts_by_enumeration(
    const Partition& shape, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace modmaj
