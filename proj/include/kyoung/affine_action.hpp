#pragma once

#include <optional>
#include <vector>

#include "kyoung/partition.hpp"

namespace kyoung {

/// Generator indices in 0..k. The leftmost letter acts last: the word
/// [i_1, ..., i_l] applied to a core applies s_{i_l} first.
using Word = std::vector<int>;

/// A (k+1)-core together with its modulus.
class Core {
 public:
  /// Empty core.
  explicit Core(int k);
  /// Throws std::domain_error if shape is not a (k+1)-core.
  Core(Partition shape, int k);

  const Partition& shape() const { return shape_; }
  int k() const { return k_; }
  int size() const { return core_size(shape_, k_); }

  friend bool operator==(const Core&, const Core&) = default;
  friend auto operator<=>(const Core& a, const Core& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.shape_ <=> b.shape_;
  }

 private:
  struct Trusted {};
  Core(Partition shape, int k, Trusted) : shape_(std::move(shape)), k_(k) {}
  friend Core apply_s(const Core&, int);
  friend std::optional<Core> apply_u(const Core&, int);
  friend Core core_of(const Partition&, int);

  Partition shape_;
  int k_ = 1;
};

/// c_map as a Core.
Core core_of(const Partition& bounded, int k);

std::vector<Cell> addable_cells(const Partition& p);
std::vector<Cell> removable_cells(const Partition& p);

/// Sorted distinct residues of addable (resp. removable) cells.
std::vector<int> addable_residues(const Core& c);
std::vector<int> removable_residues(const Core& c);

/// Adds all addable cells of residue i, else removes all removable cells of
/// residue i, else returns c. Throws std::logic_error if c has both.
Core apply_s(const Core& c, int i);

/// Adds all addable cells of residue i; nullopt is the zero of the module.
std::optional<Core> apply_u(const Core& c, int i);

/// Reduced word of the affine Grassmannian element producing c from ∅.
/// Peels the smallest removable residue first.
Word core_to_word(const Core& c);

/// Folds apply_u right to left over ∅; nullopt if some step adds nothing.
std::optional<Core> word_to_core(const Word& w, int k);

}  // namespace kyoung
