#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "kyoung/affine_action.hpp"

namespace kyoung {

/// Finite Z-linear combination of (k+1)-cores. Zero coefficients are never
/// stored, so the empty map is the zero element.
class CoreSum {
 public:
  explicit CoreSum(int k) : k_(k) {}
  explicit CoreSum(const Core& c, std::int64_t coeff = 1);

  int k() const { return k_; }
  const std::map<Partition, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coefficient(const Partition& core) const;

  void add(const Partition& core, std::int64_t coeff);
  CoreSum& operator+=(const CoreSum& other);

  friend bool operator==(const CoreSum&, const CoreSum&) = default;

 private:
  int k_;
  std::map<Partition, std::int64_t> terms_;
};

/// u(w) acting term by term; the rightmost letter acts first.
CoreSum apply_word(const Word& w, const CoreSum& s);

/// Ordering of D ⊊ {0..k} in which j+1 (mod k+1) precedes j. Runs of
/// cyclically consecutive residues are emitted in order of first appearance
/// after the smallest missing residue. Throws std::domain_error if D is full.
Word cyclically_decreasing_word(const std::vector<int>& subset, int k);

/// h_i = Σ_{|D|=i} u_D.
CoreSum h_op(int i, const CoreSum& s);

/// Σ_{γ ∈ W_0 Λ_i} u(z_γ).
CoreSum rect_schur_op(int i, const CoreSum& s);

/// Distinct cores in h_i applied to c, sorted.
std::vector<Partition> k_pieri_terms(int i, const Core& c);

}  // namespace kyoung
