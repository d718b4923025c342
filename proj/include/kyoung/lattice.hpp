#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "kyoung/alcove.hpp"

namespace kyoung {

struct LatticeNode {
  Partition kbounded;
  Partition core;
  Word word;
  Alcove alcove;
  int grade = 0;

  friend bool operator==(const LatticeNode&, const LatticeNode&) = default;
};

/// Cover lower ⋖ upper realised by s_residue on cores; indices into nodes.
struct LatticeEdge {
  std::size_t lower = 0;
  std::size_t upper = 0;
  int residue = 0;

  friend auto operator<=>(const LatticeEdge&, const LatticeEdge&) = default;
};

/// Hasse graph of Y^k_m. Nodes are sorted by grade, then by part sequence;
/// edges are sorted by (lower, upper).
class LatticeGraph {
 public:
  LatticeGraph(int k, int m, std::vector<LatticeNode> nodes, std::vector<LatticeEdge> edges);

  int k() const { return k_; }
  int m() const { return m_; }
  const std::vector<LatticeNode>& nodes() const { return nodes_; }
  const std::vector<LatticeEdge>& edges() const { return edges_; }
  /// Index of the node with this k-bounded partition, or npos.
  std::size_t find(const Partition& kbounded) const;
  bool contains(const Partition& kbounded) const { return find(kbounded) != npos; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const LatticeGraph& a, const LatticeGraph& b) {
    return a.k_ == b.k_ && a.m_ == b.m_ && a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  int k_;
  int m_;
  std::vector<LatticeNode> nodes_;
  std::vector<LatticeEdge> edges_;
  std::map<Partition, std::size_t> index_;
};

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BuildOptions {
  std::size_t node_cap = 1'000'000;
  bool parallel = true;
};

/// λ ⊆ R for some union R of m-1 rectangles.
bool member_by_rectangles(const Partition& lam, int k, int m);
/// Alcove of c(λ) lies in the m-dilated fundamental alcove.
bool member_by_alcove(const Partition& lam, int k, int m);

/// Breadth-first closure from ∅ under covers, filtered by rectangle
/// containment. Layers are expanded with OpenMP when options.parallel is set;
/// the result is identical either way. Throws CapacityError past node_cap.
LatticeGraph build(int k, int m, const BuildOptions& options = {});

/// Single-threaded reference for build().
LatticeGraph build_serial(int k, int m, std::size_t node_cap = 1'000'000);

/// Nodes without an upward cover.
std::vector<Partition> maximal_nodes(const LatticeGraph& g);

/// Fixed palette indexed by residue mod k+1; starts red, blue, gold, green
std::string residue_color(int residue, int k);

std::string export_dot(const LatticeGraph& g, bool core_labels = false);
std::string export_json(const LatticeGraph& g);
/// Inverse of export_json. Throws std::invalid_argument on malformed input.
LatticeGraph parse_json(const std::string& text);

}  // namespace kyoung
