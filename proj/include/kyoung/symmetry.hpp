#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kyoung/lattice.hpp"

namespace kyoung {

/// Cyclic action on Y^k_m: core -> word -> alcove, rotate the m-dilated
/// fundamental alcove, walk back to a word, then p_map. Throws
/// std::domain_error if lam is not in Y^k_m.
Partition sigma(const Partition& lam, int k, int m);

/// σ^power, power taken mod k+1 (negative powers allowed).
Partition sigma_power(const Partition& lam, int k, int m, int power);

/// k-conjugation, the reflection of the dihedral action.
Partition tau(const Partition& lam, int k);

/// σ as a map on node indices of g. Image alcoves are checked against the
/// rotated vertex set and against the dilation.
std::vector<std::size_t> sigma_map(const LatticeGraph& g, bool parallel = true);

/// σ-orbits, each listed from its smallest node in σ order; orbits sorted by
/// their first node.
std::vector<std::vector<Partition>> orbits(const LatticeGraph& g);

struct SymmetryReport {
  int k = 0;
  int m = 0;
  std::size_t node_count = 0;
  bool is_bijection = false;
  /// Order of σ as a permutation of the nodes.
  int order = 0;
  bool power_is_identity = false;        // σ^{k+1} = id
  bool corners_cycle = false;            // corner alcoves rotate 0 -> mΛ_1 -> ... -> 0
  bool undirected_edge_preserving = false;
  bool residue_shift_consistent = false;  // every edge residue i maps to i+1 mod k+1
  std::optional<int> residue_shift;       // the common shift, when uniform
  bool tau_automorphism = false;
  bool tau_conjugates_sigma = false;      // τστ = σ^{-1}
  std::vector<std::size_t> orbit_sizes;   // sorted decreasing
  std::vector<std::string> failures;      // sorted counterexamples

  /// The cyclic action itself: bijection with σ^{k+1} = id.
  bool cyclic_action_holds() const { return is_bijection && power_is_identity; }
  /// Everything except the +1 residue shift, which is reported separately.
  bool geometric_checks_pass() const {
    return cyclic_action_holds() && corners_cycle && undirected_edge_preserving && tau_automorphism &&
           tau_conjugates_sigma;
  }
};

/// Exhaustive check of the action on a built graph. Failures are recorded,
/// never thrown.
SymmetryReport verify_symmetry(const LatticeGraph& g, bool parallel = true);

std::string report_to_json(const SymmetryReport& r);

}  // namespace kyoung
