#pragma once

#include <compare>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace kyoung {

/// A cell of a Young diagram, 0-based (English notation: row grows downward).
struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of positive parts. The empty sequence is the
/// empty partition. Doubles as a k-bounded partition and as a (k+1)-core.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless rows are positive and weakly decreasing.
  explicit Partition(std::vector<int> rows);
  Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

  std::span<const int> rows() const { return rows_; }
  const std::vector<int>& parts() const { return rows_; }
  int length() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }
  /// Row length, 0 past the last row.
  int part(int i) const { return i < length() ? rows_[i] : 0; }
  int cells() const;
  bool contains(Cell c) const { return c.row >= 0 && c.col >= 0 && c.col < part(c.row); }
  /// Componentwise containment of diagrams: *this ⊆ other.
  bool is_contained_in(const Partition& other) const;
  bool is_bounded(int k) const { return rows_.empty() || rows_.front() <= k; }

  Partition transpose() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }

 private:
  std::vector<int> rows_;
};

/// Parses a comma-separated part list; the empty string is the empty partition.
Partition parse_partition(const std::string& text);

/// Content j - i reduced to 0..k.
int residue(Cell c, int k);

/// Hook length λ_i + λ'_j - i - j + 1 (1-based formula; Cell is 0-based).
/// Throws std::domain_error for a cell outside the diagram.
int hook(const Partition& p, Cell c);

/// True iff no cell has hook length exactly k+1.
bool is_core(const Partition& p, int k);

/// True iff a rim hook of the given length can be removed. Computed on the
/// beta-set (abacus) so it is independent of the hook-length criterion.
bool has_removable_rim_hook(const Partition& p, int length);

/// Number of cells with hook < k+1.
int core_size(const Partition& core, int k);

/// Core -> k-bounded partition: row i counts the cells of row i with hook < k+1.
Partition p_map(const Partition& core, int k);

/// Inverse of p_map. Throws std::domain_error if some part exceeds k.
Partition c_map(const Partition& bounded, int k);

/// Multiset union of parts, sorted decreasing.
Partition merge_parts(const Partition& a, const Partition& b);

/// R_i = (i^{k+1-i}) for i = 1..k.
std::vector<Partition> rectangles(int k);
Partition rectangle(int i, int k);

/// All distinct unions of m-1 rectangles, sorted. m = 1 gives {∅}.
std::vector<Partition> rectangle_unions(int k, int m);

/// p(transpose(c(λ))).
Partition k_conjugate(const Partition& bounded, int k);

/// All partitions of n with parts <= max_part, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n, int max_part);

std::int64_t binomial(int n, int r);

}  // namespace kyoung
