#pragma once

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "modmaj/common.hpp"

namespace modmaj {

/// A cell of a Young diagram in French coordinates: column `a`, row `b`,
/// both starting at 1, row 1 at the bottom.
struct Cell {
  int a = 1;
  int b = 1;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Integer partition with weakly decreasing positive parts. The empty
/// partition is a legal value (size 0).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "4,2,1" or the exponent shorthand "2^3,1". An empty string
  /// yields the empty partition. Throws std::invalid_argument.
  static Partition parse(std::string_view text);

  /// (n - leg, 1^leg).
  static Partition hook(int n, int leg);
  /// (width^height).
  static Partition rectangle(int width, int height);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Length of row b (1-based); 0 past the last row.
  int row(int b) const;
  /// Length of column a (1-based); 0 past the first row's end.
  int column(int a) const;

  bool contains(Cell c) const;
  /// True when every row of `inner` fits inside the matching row of *this.
  bool contains(const Partition& inner) const;

  Partition conjugate() const;
  bool is_rectangle() const;

  /// All cells, row by row from the bottom.
  std::vector<Cell> cells() const;

  /// arm + leg + 1 at a cell of the diagram.
  int hook_length(Cell c) const;
  /// a + b - 1 at a cell of the diagram.
  static int opposite_hook_length(Cell c) { return c.a + c.b - 1; }

  /// Hook length multiset, sorted ascending.
  std::vector<int> hook_lengths() const;
  /// Opposite hook length multiset, sorted ascending.
  std::vector<int> opposite_hook_lengths() const;

  /// Comma-separated parts, largest first; "" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic order of the part lists.
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Removal of one length-ℓ rim hook.
struct RibbonStep {
  Partition result;
  int height = 0;  // rows spanned minus one
};

/// Every partition of n in lexicographic order of part lists.
std::vector<Partition> partitions_of(int n);
/// Streams partitions of n in the same order without storing them.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// Number of standard tableaux, by the hook length formula.
BigInt dimension(const Partition& shape);

/// All ways to strip one length-ℓ rim hook, in order of the removed hook's
/// top row (English row index of the hook's corner cell).
std::vector<RibbonStep> removable_ribbons(const Partition& shape, int ell);

/// ℓ-core via first-column hook lengths (beta numbers) on an ℓ-abacus.
Partition ell_core(const Partition& shape, int ell);

enum class RemovalOrder { first, last };

/// ℓ-core by repeatedly stripping rim hooks. Test oracle for ell_core.
Partition ell_core_greedy(const Partition& shape, int ell,
                          RemovalOrder order = RemovalOrder::first);

/// Whether outer/inner is a nonempty, edge-connected skew shape without a
/// 2x2 block. Throws std::invalid_argument unless inner fits in outer.
bool is_ribbon(const Partition& outer, const Partition& inner);

/// D_i = #{cells with opposite hook length i}, for i = 1 .. max.
std::vector<int> diagonal_fibers(const Partition& shape);

/// N(λ) = n - max opposite hook length.
int diagonal_excess(const Partition& shape);
/// N(λ) when 2N(λ) + 1 <= n, else floor((n - 1) / 2).
int capped_excess(const Partition& shape);

enum class DiagOrder { less_or_equal, greater_or_equal, equivalent, incomparable };

/// Diagonal preorder: compares #{c : h^op(c) >= i} for every i.
DiagOrder diag_compare(const Partition& lhs, const Partition& rhs);
bool diag_leq(const Partition& lhs, const Partition& rhs);

/// Peak index m of the fibers 1 < 2 < ... < m >= ... .
int staircase_peak(const Partition& shape);

const char* to_string(DiagOrder order);

}  // namespace modmaj
