// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance                  exit 0 iff every criterion passes
//   acceptance --expect-fail 4  exit 0 iff exactly the listed criteria fail

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kyoung/nilcoxeter.hpp"
#include "kyoung/symmetry.hpp"

using namespace kyoung;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void fail(std::string why) {
    passed = false;
    if (details.size() < 40) details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

std::int64_t power(int base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::string key(int k, int m) { return "(k=" + std::to_string(k) + ",m=" + std::to_string(m) + ")"; }

std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

// Generic (k+1)-cores with at most max_cells cells, found from the hook
// definition alone. A core of size n has at most n(n+1)/2 cells.
std::vector<Partition> brute_force_cores(int k, int max_size) {
  std::vector<Partition> out;
  const int max_cells = max_size * (max_size + 1) / 2;
  for (int n = 0; n <= max_cells; ++n)
    for (const auto& p : partitions_of(n, n))
      if (is_core(p, k) && core_size(p, k) <= max_size) out.push_back(p);
  return out;
}

Outcome enumeration() {
  Outcome o;
  const auto start = Clock::now();
  auto sweep = [&](int k, int m) {
    const auto n = static_cast<std::int64_t>(build(k, m).nodes().size());
    if (n != power(m, k)) o.fail(key(k, m) + ": " + std::to_string(n) + " nodes, expected " + std::to_string(power(m, k)));
  };
  for (int k = 1; k <= 5; ++k)
    for (int m = 1; m <= 4; ++m) sweep(k, m);
  for (int k = 1; k <= 3; ++k)
    for (int m = 5; m <= 6; ++m) sweep(k, m);
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream t;
  t << "sweep took " << secs << " s (limit 10 s)";
  o.note(t.str());
  if (secs >= 10.0) o.fail("sweep exceeded 10 s");
  return o;
}

Outcome single_rectangle_case() {
  Outcome o;
  for (int k = 1; k <= 6; ++k) {
    std::set<Partition> expect;
    for (const auto& r : rectangles(k))
      for (int n = 0; n <= r.cells(); ++n)
        for (const auto& lam : partitions_of(n, k))
          if (lam.is_contained_in(r)) expect.insert(lam);
    const LatticeGraph g = build(k, 2);
    std::set<Partition> got;
    for (const auto& node : g.nodes()) got.insert(node.kbounded);
    if (got != expect) o.fail(key(k, 2) + ": node set differs from the rectangle subpartitions");
    if (static_cast<std::int64_t>(got.size()) != power(2, k))
      o.fail(key(k, 2) + ": " + std::to_string(got.size()) + " nodes, expected 2^k");
  }
  return o;
}

Outcome cyclic_action() {
  Outcome o;
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m) {
      const LatticeGraph g = build(k, m);
      const auto s = sigma_map(g);
      std::vector<bool> hit(s.size(), false);
      for (auto t : s) hit[t] = true;
      if (!std::ranges::all_of(hit, [](bool h) { return h; })) o.fail(key(k, m) + ": sigma is not onto");
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::size_t j = i;
        for (int t = 0; t <= k; ++t) j = s[j];
        if (j != i) o.fail(key(k, m) + ": sigma^(k+1) moves " + show(g.nodes()[i].kbounded));
      }
    }
  return o;
}

Outcome graph_symmetry() {
  Outcome o;
  struct Part {
    const char* name;
    int failing = 0;
    std::vector<std::string> examples;
  };
  Part edges{"sigma preserves undirected Hasse edges"}, shift{"edge residues shift by +1 mod k+1"},
      tau_auto{"tau is an undirected automorphism"}, dihedral{"tau sigma tau = sigma^-1"};
  std::map<std::string, std::vector<std::string>> observed;  // shift -> (k,m) list
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m) {
      const SymmetryReport r = verify_symmetry(build(k, m));
      auto record = [&](Part& p, bool ok, const std::string& prefix) {
        if (ok) return;
        ++p.failing;
        for (const auto& f : r.failures)
          if (f.starts_with(prefix + ":") && p.examples.size() < 6) p.examples.push_back(key(k, m) + " " + f);
      };
      record(edges, r.undirected_edge_preserving, "edges");
      record(shift, r.residue_shift_consistent, "residue_shift");
      record(tau_auto, r.tau_automorphism, "tau");
      record(dihedral, r.tau_conjugates_sigma, "dihedral");
      const std::string s = r.residue_shift ? "+" + std::to_string(*r.residue_shift) : "none (no edges)";
      observed[s].push_back(key(k, m));
    }
  for (Part* p : {&edges, &shift, &tau_auto, &dihedral}) {
    o.note(std::string(p->failing ? "FAIL " : "PASS ") + p->name + " [" + std::to_string(16 - p->failing) + "/16 cases]");
    if (p->failing) o.passed = false;
    for (const auto& e : p->examples) o.note("  counterexample " + e);
  }
  for (const auto& [s, cases] : observed) {
    std::string line = "observed residue shift " + s + " on";
    for (const auto& c : cases) line += " " + c;
    o.note(line);
  }
  return o;
}

Outcome membership() {
  Outcome o;
  std::size_t tested = 0;
  for (int k = 1; k <= 3; ++k)
    for (int m = 1; m <= 4; ++m)
      for (int n = 0; n <= 10; ++n)
        for (const auto& lam : partitions_of(n, k)) {
          ++tested;
          if (member_by_rectangles(lam, k, m) != member_by_alcove(lam, k, m))
            o.fail(key(k, m) + ": tests disagree on " + show(lam));
        }
  o.note(std::to_string(tested) + " (k, m, lambda) triples");
  return o;
}

Outcome rectangle_counts() {
  Outcome o;
  for (int k = 1; k <= 5; ++k)
    for (int m = 1; m <= 5; ++m) {
      const auto expect = binomial(m + k - 2, k - 1);
      const auto unions = rectangle_unions(k, m);
      auto maximal = maximal_nodes(build(k, m));
      std::ranges::sort(maximal);
      const auto dominant = dominant_weights_at_level(k, m - 1);
      if (static_cast<std::int64_t>(unions.size()) != expect) o.fail(key(k, m) + ": union count differs from binomial");
      if (maximal != unions) o.fail(key(k, m) + ": maximal nodes differ from the unions");
      if (static_cast<std::int64_t>(dominant.size()) != expect)
        o.fail(key(k, m) + ": " + std::to_string(dominant.size()) + " dominant weights at level m-1");
    }
  return o;
}

Outcome facet_property() {
  Outcome o;
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m)
      for (const auto& r : rectangle_unions(k, m)) {
        const Alcove a = alcove_of_word(core_to_word(core_of(r, k)), k);
        const auto top = std::ranges::count_if(a.vertices, [&](const Weight& v) { return level(v) == m; });
        if (top != k) o.fail(key(k, m) + " " + show(r) + ": " + std::to_string(top) + " vertices at level m");
      }
  return o;
}

Outcome unique_addable_residue() {
  Outcome o;
  for (int k = 1; k <= 4; ++k)
    for (int m = 1; m <= 4; ++m)
      for (const auto& r : rectangle_unions(k, m)) {
        // R_i contributes k+1-i rows of length i.
        int sum = 0;
        for (int i = 1; i <= k; ++i)
          sum += i * static_cast<int>(std::ranges::count(r.parts(), i)) / (k + 1 - i);
        const auto add = addable_residues(core_of(r, k));
        if (add != std::vector<int>{sum % (k + 1)}) {
          std::string got;
          for (int a : add) got += std::to_string(a) + " ";
          o.fail(key(k, m) + " " + show(r) + ": addable residues { " + got + "}, expected " + std::to_string(sum % (k + 1)));
        }
      }
  return o;
}

Outcome rectangle_pieri() {
  Outcome o;
  for (int k = 1; k <= 3; ++k) {
    const LatticeGraph g = build(k, 3);
    for (const auto& node : g.nodes())
      for (int i = 1; i <= k; ++i) {
        const CoreSum got = rect_schur_op(i, CoreSum(Core(node.core, k)));
        const Partition expect = c_map(merge_parts(node.kbounded, rectangle(i, k)), k);
        if (got.terms().size() != 1 || got.coefficient(expect) != 1)
          o.fail(key(k, 3) + " " + show(node.kbounded) + " i=" + std::to_string(i) + ": not exactly c(lambda u R_i)");
      }
  }
  return o;
}

Outcome bijections() {
  Outcome o;
  std::size_t cores = 0, words = 0;
  for (int k = 1; k <= 4; ++k) {
    // c∘p on independently enumerated cores, p∘c on k-bounded partitions.
    const auto all_cores = brute_force_cores(k, 8);
    for (const auto& c : all_cores) {
      ++cores;
      if (c_map(p_map(c, k), k) != c) o.fail("k=" + std::to_string(k) + ": c(p" + show(c) + ") differs");
      const Core core(c, k);
      if (word_to_core(core_to_word(core), k) != core) o.fail("k=" + std::to_string(k) + ": word roundtrip of " + show(c));
    }
    std::size_t bounded = 0;
    for (int n = 0; n <= 8; ++n)
      for (const auto& lam : partitions_of(n, k)) {
        ++bounded;
        if (p_map(c_map(lam, k), k) != lam) o.fail("k=" + std::to_string(k) + ": p(c" + show(lam) + ") differs");
      }
    // Every Grassmannian word of length <= 8, grown by prepending letters.
    std::vector<std::pair<Word, Core>> layer{{Word{}, Core(k)}};
    for (int len = 0; len < 8; ++len) {
      std::vector<std::pair<Word, Core>> next;
      for (const auto& [w, c] : layer)
        for (int i : addable_residues(c)) {
          Word v{i};
          v.insert(v.end(), w.begin(), w.end());
          next.emplace_back(std::move(v), apply_s(c, i));
        }
      for (const auto& [w, c] : next) {
        ++words;
        const auto back = word_to_core(w, k);
        if (!back || *back != c) o.fail("k=" + std::to_string(k) + ": word does not reproduce its core");
        if (alcove_of_word(w, k) != alcove_of_word(core_to_word(c), k))
          o.fail("k=" + std::to_string(k) + ": equivalent words give different alcoves");
      }
      layer = std::move(next);
    }
    if (all_cores.size() != bounded) o.fail("k=" + std::to_string(k) + ": core count differs from k-bounded count");
  }
  o.note(std::to_string(cores) + " cores, " + std::to_string(words) + " Grassmannian words");
  return o;
}

Outcome algebra_relations() {
  Outcome o;
  o.note("braid relation checked for k >= 2; affine A_1 has none");
  for (int k = 1; k <= 3; ++k) {
    const int n = k + 1;
    for (const auto& p : brute_force_cores(k, 6)) {
      const CoreSum s(Core(p, k));
      const std::string at = "k=" + std::to_string(k) + " core " + show(p);
      for (int i = 0; i <= k; ++i) {
        if (!apply_word({i, i}, s).is_zero()) o.fail(at + ": u_" + std::to_string(i) + "^2 != 0");
        for (int j = 0; j <= k; ++j) {
          const int d = ((i - j) % n + n) % n;
          if (i != j && d != 1 && d != n - 1 && apply_word({i, j}, s) != apply_word({j, i}, s))
            o.fail(at + ": u_i u_j != u_j u_i");
          if (k >= 2 && d == 1 && apply_word({i, j, i}, s) != apply_word({j, i, j}, s)) o.fail(at + ": braid fails");
          if (i < j && h_op(i, h_op(j, s)) != h_op(j, h_op(i, s))) o.fail(at + ": h_i h_j != h_j h_i");
        }
      }
    }
  }
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria for Y^k_m"};
  std::vector<int> expected_failures;
  app.add_option("--expect-fail", expected_failures, "criteria known to fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    int id;
    const char* title;
    Outcome (*run)();
  };
  const std::vector<Criterion> criteria{
      {1, "enumeration |Y^k_m| = m^k", enumeration},
      {2, "m = 2 base case: rectangle subpartitions", single_rectangle_case},
      {3, "cyclic action: sigma bijective, sigma^(k+1) = id", cyclic_action},
      {4, "graph symmetry: edges, residue shift +1, tau, dihedral relation", graph_symmetry},
      {5, "rectangle and alcove membership agree", membership},
      {6, "rectangle-union, maximal-node and dominant-weight counts", rectangle_counts},
      {7, "rectangle-union alcoves have k vertices at level m", facet_property},
      {8, "rectangle-union cores have one addable residue", unique_addable_residue},
      {9, "rectangle Pieri yields c(lambda u R_i) with coefficient 1", rectangle_pieri},
      {10, "p/c and word/core bijections", bijections},
      {11, "nilCoxeter relations and h commutativity", algebra_relations},
  };

  const auto start = Clock::now();
  std::set<int> failed;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    const Outcome out = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    std::cout << (out.passed ? "PASS" : "FAIL") << "  " << c.id << ". " << c.title << " (" << secs << " s)\n";
    for (const auto& d : out.details) std::cout << "        " << d << "\n";
    if (!out.passed) failed.insert(c.id);
  }
  const double total = std::chrono::duration<double>(Clock::now() - start).count();
  std::cout << "total " << total << " s; " << criteria.size() - failed.size() << "/" << criteria.size() << " passed\n";

  const std::set<int> expected(expected_failures.begin(), expected_failures.end());
  if (failed != expected) {
    if (!expected.empty()) std::cout << "failing criteria differ from the expected set\n";
    return 1;
  }
  return 0;
}
