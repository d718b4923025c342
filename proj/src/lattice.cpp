#include "kyoung/lattice.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>

#include "kyoung/serialize.hpp"
#include "parallel.hpp"

namespace kyoung {

namespace {

bool below_some(const Partition& lam, const std::vector<Partition>& unions) {
  return std::ranges::any_of(unions, [&](const Partition& r) { return lam.is_contained_in(r); });
}

bool node_order(const Partition& a, const Partition& b) {
  if (a.cells() != b.cells()) return a.cells() < b.cells();
  return a < b;
}

void check_parameters(int k, int m) {
  if (k < 1 || m < 1) throw std::domain_error("k and m must be at least 1");
}

LatticeNode make_node(const Partition& lam, int k) {
  LatticeNode n;
  n.kbounded = lam;
  n.grade = lam.cells();
  const Core c = core_of(lam, k);
  n.core = c.shape();
  n.word = core_to_word(c);
  n.alcove = alcove_of_word(n.word, k);
  return n;
}

struct Cover {
  Partition upper;
  int residue;
};

// Covers of one node that stay inside the rectangle filter.
std::vector<Cover> covers_of(const Partition& lam, int k, const std::vector<Partition>& unions) {
  std::vector<Cover> out;
  const Core c = core_of(lam, k);
  const int size = lam.cells();
  for (int r : addable_residues(c)) {
    const Core up = apply_s(c, r);
    Partition mu = p_map(up.shape(), k);
    if (mu.cells() != size + 1) throw std::logic_error("cover does not raise the grade by one");
    if (below_some(mu, unions)) out.push_back({std::move(mu), r});
  }
  return out;
}

struct RawEdge {
  Partition lower, upper;
  int residue;
};

LatticeGraph assemble(int k, int m, std::vector<Partition> members, std::vector<RawEdge> raw, bool parallel) {
  std::ranges::sort(members, node_order);
  std::vector<LatticeNode> nodes(members.size());
  detail::parallel_for(static_cast<std::ptrdiff_t>(members.size()), parallel,
                       [&](std::ptrdiff_t i) { nodes[i] = make_node(members[i], k); });

  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i], i);
  std::vector<LatticeEdge> edges;
  edges.reserve(raw.size());
  for (const RawEdge& e : raw) edges.push_back({index.at(e.lower), index.at(e.upper), e.residue});
  std::ranges::sort(edges);
  return LatticeGraph(k, m, std::move(nodes), std::move(edges));
}

LatticeGraph build_impl(int k, int m, std::size_t node_cap, bool parallel) {
  check_parameters(k, m);
  const std::vector<Partition> unions = rectangle_unions(k, m);
  std::set<Partition> seen{Partition{}};
  std::vector<Partition> layer{Partition{}};
  std::vector<RawEdge> raw;

  while (!layer.empty()) {
    std::vector<std::vector<Cover>> found(layer.size());
    detail::parallel_for(static_cast<std::ptrdiff_t>(layer.size()), parallel,
                         [&](std::ptrdiff_t i) { found[i] = covers_of(layer[i], k, unions); });

    std::set<Partition> next;
    for (std::size_t i = 0; i < layer.size(); ++i)
      for (Cover& c : found[i]) {
        raw.push_back({layer[i], c.upper, c.residue});
        if (!seen.contains(c.upper)) next.insert(std::move(c.upper));
      }
    seen.insert(next.begin(), next.end());
    if (seen.size() > node_cap)
      throw CapacityError("Y^" + std::to_string(k) + "_" + std::to_string(m) + " exceeds the node cap of " + std::to_string(node_cap));
    layer.assign(next.begin(), next.end());
  }
  return assemble(k, m, {seen.begin(), seen.end()}, std::move(raw), parallel);
}

}  // namespace

LatticeGraph::LatticeGraph(int k, int m, std::vector<LatticeNode> nodes, std::vector<LatticeEdge> edges)
    : k_(k), m_(m), nodes_(std::move(nodes)), edges_(std::move(edges)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i].kbounded, i);
}

std::size_t LatticeGraph::find(const Partition& kbounded) const {
  auto it = index_.find(kbounded);
  return it == index_.end() ? npos : it->second;
}

bool member_by_rectangles(const Partition& lam, int k, int m) {
  check_parameters(k, m);
  return below_some(lam, rectangle_unions(k, m));
}

bool member_by_alcove(const Partition& lam, int k, int m) {
  check_parameters(k, m);
  return in_dilation(alcove_of_word(core_to_word(core_of(lam, k)), k), m);
}

LatticeGraph build(int k, int m, const BuildOptions& options) {
  return build_impl(k, m, options.node_cap, options.parallel);
}

LatticeGraph build_serial(int k, int m, std::size_t node_cap) { return build_impl(k, m, node_cap, false); }

std::vector<Partition> maximal_nodes(const LatticeGraph& g) {
  std::vector<bool> has_up(g.nodes().size(), false);
  for (const LatticeEdge& e : g.edges()) has_up[e.lower] = true;
  std::vector<Partition> out;
  for (std::size_t i = 0; i < has_up.size(); ++i)
    if (!has_up[i]) out.push_back(g.nodes()[i].kbounded);
  std::ranges::sort(out);
  return out;
}

std::string residue_color(int residue, int k) {
  static constexpr std::array<const char*, 21> palette = {
      "red",    "blue",      "gold",     "green",     "purple", "orange", "cyan",
      "magenta", "brown",    "navy",     "olive",     "teal",   "maroon", "pink",
      "gray40", "darkgreen", "coral",    "slateblue", "khaki4", "orchid", "black"};
  const int n = k + 1;
  return palette[static_cast<std::size_t>(((residue % n) + n) % n)];
}

std::string export_dot(const LatticeGraph& g, bool core_labels) {
  auto label = [](const Partition& p) { return p.empty() ? std::string("∅") : p.to_string(); };
  std::ostringstream out;
  out << "digraph Y_" << g.k() << "_" << g.m() << " {\n";
  out << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < g.nodes().size(); ++i) {
    const LatticeNode& n = g.nodes()[i];
    out << "  n" << i << " [label=\"" << label(n.kbounded);
    if (core_labels) out << "\\n" << label(n.core);
    out << "\"];\n";
  }
  for (const LatticeEdge& e : g.edges())
    out << "  n" << e.lower << " -> n" << e.upper << " [color=\"" << residue_color(e.residue, g.k())
        << "\", label=\"" << e.residue << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const LatticeGraph& g) {
  nlohmann::json j;
  j["k"] = g.k();
  j["m"] = g.m();
  auto nodes = nlohmann::json::array();
  for (const LatticeNode& n : g.nodes())
    nodes.push_back({{"partition", n.kbounded}, {"core", n.core}, {"word", n.word}, {"alcove", alcove_to_json(n.alcove)}});
  auto edges = nlohmann::json::array();
  for (const LatticeEdge& e : g.edges())
    edges.push_back({{"from", g.nodes()[e.lower].kbounded}, {"to", g.nodes()[e.upper].kbounded}, {"residue", e.residue}});
  j["nodes"] = std::move(nodes);
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

LatticeGraph parse_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    const int k = j.at("k").get<int>();
    const int m = j.at("m").get<int>();
    std::vector<LatticeNode> nodes;
    std::map<Partition, std::size_t> index;
    for (const auto& jn : j.at("nodes")) {
      LatticeNode n;
      n.kbounded = jn.at("partition").get<Partition>();
      n.core = jn.at("core").get<Partition>();
      n.word = jn.at("word").get<Word>();
      n.alcove.vertices = jn.at("alcove").get<std::vector<Weight>>();
      n.alcove.word = n.word;
      n.grade = n.kbounded.cells();
      index.emplace(n.kbounded, nodes.size());
      nodes.push_back(std::move(n));
    }
    std::vector<LatticeEdge> edges;
    for (const auto& je : j.at("edges"))
      edges.push_back({index.at(je.at("from").get<Partition>()), index.at(je.at("to").get<Partition>()),
                       je.at("residue").get<int>()});
    return LatticeGraph(k, m, std::move(nodes), std::move(edges));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed lattice JSON: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(std::string("malformed lattice JSON: ") + e.what());
  }
}

}  // namespace kyoung
