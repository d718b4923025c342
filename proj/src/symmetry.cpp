#include "kyoung/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "kyoung/serialize.hpp"
#include "parallel.hpp"

namespace kyoung {

namespace {

constexpr std::size_t kMaxExamples = 10;

// Records up to kMaxExamples counterexamples per check plus a total.
class FailureLog {
 public:
  void add(const std::string& check, std::string example) {
    auto& [count, examples] = by_check_[check];
    ++count;
    if (examples.size() < kMaxExamples) examples.push_back(std::move(example));
  }
  std::vector<std::string> lines() const {
    std::vector<std::string> out;
    for (const auto& [check, entry] : by_check_) {
      std::vector<std::string> ex = entry.second;
      std::ranges::sort(ex);
      for (auto& e : ex) out.push_back(check + ": " + e);
      if (entry.first > ex.size())
        out.push_back(check + ": " + std::to_string(entry.first - ex.size()) + " further counterexamples");
    }
    return out;
  }

 private:
  std::map<std::string, std::pair<std::size_t, std::vector<std::string>>> by_check_;
};

std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

Alcove rotated(const Alcove& a, int m) {
  Alcove out;
  for (const Weight& v : a.vertices) out.vertices.push_back(rotate_sigma(v, m));
  std::ranges::sort(out.vertices);
  return out;
}

// σ on an alcove of the dilation; returns the k-bounded partition of the image.
Partition sigma_of_alcove(const Alcove& a, int k, int m) {
  const Word w = alcove_containing(rotate_sigma(centroid(a), m));
  const Alcove image = alcove_of_word(w, k);
  if (!(image == rotated(a, m))) throw std::logic_error("walk did not land on the rotated alcove");
  if (!in_dilation(image, m)) throw std::logic_error("rotated alcove left the dilation");
  const auto core = word_to_core(w, k);
  if (!core) throw std::logic_error("rotated alcove is not dominant");
  return p_map(core->shape(), k);
}

void require_member(const Partition& lam, int k, int m) {
  if (!lam.is_bounded(k) || !member_by_rectangles(lam, k, m))
    throw std::domain_error(show(lam) + " is not in Y^" + std::to_string(k) + "_" + std::to_string(m));
}

}  // namespace

Partition sigma(const Partition& lam, int k, int m) {
  require_member(lam, k, m);
  return sigma_of_alcove(alcove_of_word(core_to_word(core_of(lam, k)), k), k, m);
}

Partition sigma_power(const Partition& lam, int k, int m, int power) {
  const int n = k + 1;
  const int steps = ((power % n) + n) % n;
  require_member(lam, k, m);
  Partition cur = lam;
  for (int i = 0; i < steps; ++i) cur = sigma(cur, k, m);
  return cur;
}

Partition tau(const Partition& lam, int k) { return k_conjugate(lam, k); }

std::vector<std::size_t> sigma_map(const LatticeGraph& g, bool parallel) {
  std::vector<std::size_t> out(g.nodes().size());
  detail::parallel_for(static_cast<std::ptrdiff_t>(out.size()), parallel, [&](std::ptrdiff_t i) {
    const Partition image = sigma_of_alcove(g.nodes()[i].alcove, g.k(), g.m());
    out[i] = g.find(image);
    if (out[i] == LatticeGraph::npos) throw std::logic_error("σ image " + show(image) + " missing from the graph");
  });
  return out;
}

std::vector<std::vector<Partition>> orbits(const LatticeGraph& g) {
  const auto s = sigma_map(g);
  std::vector<bool> done(s.size(), false);
  std::vector<std::vector<Partition>> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (done[i]) continue;
    std::vector<Partition> orbit;
    for (std::size_t j = i; !done[j]; j = s[j]) {
      done[j] = true;
      orbit.push_back(g.nodes()[j].kbounded);
    }
    out.push_back(std::move(orbit));
  }
  return out;
}

SymmetryReport verify_symmetry(const LatticeGraph& g, bool parallel) {
  const int k = g.k(), m = g.m(), n = k + 1;
  const auto& nodes = g.nodes();
  const std::size_t count = nodes.size();
  SymmetryReport r;
  r.k = k;
  r.m = m;
  r.node_count = count;
  FailureLog log;

  std::vector<std::size_t> s;
  try {
    s = sigma_map(g, parallel);
  } catch (const std::exception& e) {
    log.add("sigma", e.what());
    r.failures = log.lines();
    return r;
  }

  // (a) bijection, orbit structure and order.
  std::vector<std::size_t> hits(count, 0);
  for (std::size_t t : s) ++hits[t];
  r.is_bijection = std::ranges::all_of(hits, [](std::size_t h) { return h == 1; });
  if (!r.is_bijection) {
    for (std::size_t i = 0; i < count; ++i)
      if (hits[i] != 1) log.add("bijection", show(nodes[i].kbounded) + " has " + std::to_string(hits[i]) + " preimages");
  } else {
    std::vector<bool> done(count, false);
    std::size_t order = 1;
    for (std::size_t i = 0; i < count; ++i) {
      if (done[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !done[j]; j = s[j]) done[j] = true, ++len;
      r.orbit_sizes.push_back(len);
      order = std::lcm(order, len);
    }
    std::ranges::sort(r.orbit_sizes, std::greater<>());
    r.order = static_cast<int>(order);
  }

  // (b) σ^{k+1} = id.
  r.power_is_identity = true;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i;
    for (int t = 0; t < n; ++t) j = s[j];
    if (j != i) {
      r.power_is_identity = false;
      log.add("power", "σ^" + std::to_string(n) + show(nodes[i].kbounded) + " = " + show(nodes[j].kbounded));
    }
  }

  // Corner alcoves: the node whose alcove contains the dilation vertex mΛ_j.
  r.corners_cycle = true;
  std::vector<std::size_t> corner(n, LatticeGraph::npos);
  for (int j = 0; j < n; ++j) {
    Weight v = fundamental_weight(j, k);
    for (auto& x : v) x *= m;
    for (std::size_t i = 0; i < count; ++i)
      if (std::ranges::binary_search(nodes[i].alcove.vertices, v)) corner[j] = i;
    if (corner[j] == LatticeGraph::npos) {
      r.corners_cycle = false;
      log.add("corners", "no alcove at vertex " + std::to_string(m) + "Λ_" + std::to_string(j));
    }
  }
  for (int j = 0; r.corners_cycle && j < n; ++j)
    if (s[corner[j]] != corner[(j + 1) % n]) {
      r.corners_cycle = false;
      log.add("corners", "corner " + std::to_string(j) + " does not rotate to corner " + std::to_string((j + 1) % n));
    }

  // (c) undirected Hasse edges and their residues.
  std::map<std::pair<std::size_t, std::size_t>, int> edge_residue;
  for (const LatticeEdge& e : g.edges()) {
    edge_residue[{e.lower, e.upper}] = e.residue;
    edge_residue[{e.upper, e.lower}] = e.residue;
  }
  r.undirected_edge_preserving = true;
  r.residue_shift_consistent = true;
  std::set<int> shifts;
  for (const LatticeEdge& e : g.edges()) {
    const std::string src = show(nodes[e.lower].kbounded) + "-" + show(nodes[e.upper].kbounded);
    auto it = edge_residue.find({s[e.lower], s[e.upper]});
    if (it == edge_residue.end()) {
      r.undirected_edge_preserving = false;
      log.add("edges", src + " maps to a non-edge");
      continue;
    }
    const int shift = ((it->second - e.residue) % n + n) % n;
    shifts.insert(shift);
    if (shift != 1 % n) {
      r.residue_shift_consistent = false;
      log.add("residue_shift", src + " residue " + std::to_string(e.residue) + " maps to residue " +
                                   std::to_string(it->second) + ", expected " + std::to_string((e.residue + 1) % n));
    }
  }
  if (shifts.size() == 1) r.residue_shift = *shifts.begin();

  // (d), (e) the conjugation involution.
  std::vector<std::size_t> t(count);
  bool tau_closed = true;
  for (std::size_t i = 0; i < count; ++i) {
    t[i] = g.find(tau(nodes[i].kbounded, k));
    if (t[i] == LatticeGraph::npos) {
      tau_closed = false;
      log.add("tau", show(nodes[i].kbounded) + " conjugates outside the graph");
    }
  }
  r.tau_automorphism = tau_closed;
  r.tau_conjugates_sigma = tau_closed && r.is_bijection;
  if (tau_closed) {
    for (std::size_t i = 0; i < count; ++i)
      if (t[t[i]] != i) {
        r.tau_automorphism = false;
        log.add("tau", "τ is not an involution at " + show(nodes[i].kbounded));
      }
    for (const LatticeEdge& e : g.edges())
      if (!edge_residue.contains({t[e.lower], t[e.upper]})) {
        r.tau_automorphism = false;
        log.add("tau", show(nodes[e.lower].kbounded) + "-" + show(nodes[e.upper].kbounded) + " maps to a non-edge");
      }
    // τστ = σ^{-1}  <=>  σ(τ(σ(τ(x)))) = x
    for (std::size_t i = 0; i < count && r.is_bijection; ++i)
      if (s[t[s[t[i]]]] != i) {
        r.tau_conjugates_sigma = false;
        log.add("dihedral", "στστ" + show(nodes[i].kbounded) + " ≠ " + show(nodes[i].kbounded));
      }
  }

  r.failures = log.lines();
  return r;
}

std::string report_to_json(const SymmetryReport& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["m"] = r.m;
  j["node_count"] = r.node_count;
  j["is_bijection"] = r.is_bijection;
  j["order"] = r.order;
  j["power_is_identity"] = r.power_is_identity;
  j["corners_cycle"] = r.corners_cycle;
  j["undirected_edge_preserving"] = r.undirected_edge_preserving;
  j["residue_shift_consistent"] = r.residue_shift_consistent;
  j["residue_shift"] = r.residue_shift ? nlohmann::json(*r.residue_shift) : nlohmann::json(nullptr);
  j["tau_automorphism"] = r.tau_automorphism;
  j["tau_conjugates_sigma"] = r.tau_conjugates_sigma;
  j["orbit_sizes"] = r.orbit_sizes;
  j["failures"] = r.failures;
  return j.dump(2);
}

}  // namespace kyoung
