#include "kyoung/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>

#include <CLI11.hpp>

#include "kyoung/nilcoxeter.hpp"
#include "kyoung/serialize.hpp"
#include "kyoung/symmetry.hpp"

namespace kyoung::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string show(const Partition& p) { return "(" + p.to_string() + ")"; }

void check_bounds(int k, int m) {
  if (k < 1 || k > kMaxParameter) throw UsageError("k must lie in 1.." + std::to_string(kMaxParameter));
  if (m < 1 || m > kMaxParameter) throw UsageError("m must lie in 1.." + std::to_string(kMaxParameter));
}

// m^k, saturating at cap+1.
std::size_t node_count_bound(int k, int m, std::size_t cap) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > cap / static_cast<std::size_t>(m)) return cap + 1;
    n *= static_cast<std::size_t>(m);
  }
  return n;
}

LatticeGraph build_checked(const RunConfig& c) {
  check_bounds(c.k, c.m);
  if (node_count_bound(c.k, c.m, c.node_cap) > c.node_cap)
    throw CapacityError("Y^" + std::to_string(c.k) + "_" + std::to_string(c.m) + " has " + std::to_string(c.m) + "^" +
                        std::to_string(c.k) + " nodes, above the node cap of " + std::to_string(c.node_cap));
  return build(c.k, c.m, {.node_cap = c.node_cap, .parallel = true});
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("KYOUNG_OUTPUT_DIR"); dir && *dir) return std::filesystem::path(dir) / p;
  return p;
}

// --- verification suites ---------------------------------------------------

class Suite {
 public:
  explicit Suite(std::string name) : name_(std::move(name)) {}

  void check(const std::string& what, bool ok, const std::string& detail = {}) {
    checks_.push_back({{"name", what}, {"passed", ok}, {"detail", detail}});
    passed_ = passed_ && ok;
  }
  bool passed() const { return passed_; }
  json to_json() const { return {{"passed", passed_}, {"checks", checks_}}; }
  const std::string& name() const { return name_; }

 private:
  std::string name_;
  json checks_ = json::array();
  bool passed_ = true;
};

// Rectangle multiplicities a_i of a union of rectangles, i.e. its vertex Σ a_i Λ_i.
Weight union_vertex(const Partition& r, int k) {
  Weight a(k, 0);
  for (int part : r.parts()) ++a[part - 1];
  for (int i = 1; i <= k; ++i) a[i - 1] /= (k + 1 - i);
  return a;
}

Suite counts_suite(const LatticeGraph& g) {
  const int k = g.k(), m = g.m();
  Suite s("counts");
  const std::size_t expected = node_count_bound(k, m, static_cast<std::size_t>(-2));
  s.check("node count is m^k", g.nodes().size() == expected,
          std::to_string(g.nodes().size()) + " nodes, expected " + std::to_string(expected));

  const auto unions = rectangle_unions(k, m);
  const auto binom = binomial(m + k - 2, k - 1);
  s.check("rectangle unions counted by binomial", static_cast<std::int64_t>(unions.size()) == binom,
          std::to_string(unions.size()) + " unions, C(m+k-2,k-1) = " + std::to_string(binom));
  s.check("maximal nodes are the rectangle unions", maximal_nodes(g) == unions);

  std::set<Weight> vertices;
  for (const auto& r : unions) vertices.insert(union_vertex(r, k));
  const auto dominant = dominant_weights_at_level(k, m - 1);
  s.check("dominant level m-1 weights biject with unions",
          std::vector<Weight>(vertices.begin(), vertices.end()) == dominant,
          std::to_string(dominant.size()) + " dominant weights");

  bool facet = true, residue_ok = true;
  std::string facet_detail, residue_detail;
  for (const auto& r : unions) {
    const Weight v = union_vertex(r, k);
    const Alcove a = alcove_of_word(core_to_word(core_of(r, k)), k);
    const auto top = std::ranges::count_if(a.vertices, [&](const Weight& x) { return level(x) == m; });
    if (!(a == translate(fundamental_alcove(k), v)) || top != k) {
      facet = false;
      facet_detail = show(r);
    }
    std::int64_t sum = 0;
    for (int i = 1; i <= k; ++i) sum += i * v[i - 1];
    const auto addable = addable_residues(core_of(r, k));
    if (addable != std::vector<int>{static_cast<int>(sum % (k + 1))}) {
      residue_ok = false;
      residue_detail = show(r);
    }
  }
  s.check("rectangle-union alcoves translate A and share a facet with H_{phi,m}", facet, facet_detail);
  s.check("rectangle-union cores have one addable residue", residue_ok, residue_detail);

  int max_grade = 0;
  for (const auto& n : g.nodes()) max_grade = std::max(max_grade, n.grade);
  bool agree = true;
  std::string agree_detail;
  std::size_t tested = 0;
  for (int size = 0; size <= max_grade + 1; ++size)
    for (const auto& lam : partitions_of(size, k)) {
      ++tested;
      const bool by_rect = member_by_rectangles(lam, k, m);
      if (by_rect != member_by_alcove(lam, k, m) || by_rect != g.contains(lam)) {
        agree = false;
        agree_detail = show(lam);
      }
    }
  s.check("rectangle and alcove membership agree", agree,
          agree ? std::to_string(tested) + " partitions tested" : agree_detail);
  return s;
}

Suite bijection_suite(const LatticeGraph& g) {
  const int k = g.k();
  Suite s("bijection");
  bool pc = true, words = true, walk = true;
  std::string pc_detail, word_detail, walk_detail;
  for (const auto& n : g.nodes()) {
    if (p_map(n.core, k) != n.kbounded || c_map(n.kbounded, k) != n.core || core_size(n.core, k) != n.grade) {
      pc = false;
      pc_detail = show(n.kbounded);
    }
    const auto back = word_to_core(n.word, k);
    if (!back || back->shape() != n.core || static_cast<int>(n.word.size()) != n.grade) {
      words = false;
      word_detail = show(n.kbounded);
    }
    if (!(alcove_of_word(alcove_containing(centroid(n.alcove)), k) == n.alcove)) {
      walk = false;
      walk_detail = show(n.kbounded);
    }
  }
  s.check("p and c are mutually inverse", pc, pc_detail);
  s.check("words reproduce cores with length = size", words, word_detail);
  s.check("alcove walk returns to the node alcove", walk, walk_detail);

  bool unique = true;
  std::string edge_detail;
  for (const auto& e : g.edges()) {
    const Core lower(g.nodes()[e.lower].core, k);
    int hits = 0, which = -1;
    for (int i = 0; i <= k; ++i)
      if (apply_s(lower, i).shape() == g.nodes()[e.upper].core) ++hits, which = i;
    if (hits != 1 || which != e.residue) {
      unique = false;
      edge_detail = show(g.nodes()[e.lower].kbounded) + "-" + show(g.nodes()[e.upper].kbounded);
    }
  }
  s.check("each edge has a unique residue", unique, edge_detail);
  return s;
}

Suite nilcoxeter_suite(const LatticeGraph& g) {
  const int k = g.k(), n = k + 1;
  Suite s("nilcoxeter");
  bool square = true, commute = true, braid = true, h_commute = true, unit = true;
  std::string detail;
  for (const auto& node : g.nodes()) {
    const CoreSum c(Core(node.core, k));
    for (int i = 0; i <= k; ++i) {
      square = square && apply_word({i, i}, c).is_zero();
      for (int j = 0; j <= k; ++j) {
        const int d = ((i - j) % n + n) % n;
        if (i != j && d != 1 && d != n - 1) commute = commute && apply_word({i, j}, c) == apply_word({j, i}, c);
      }
      // Affine A_1 has no braid relation.
      if (k >= 2) {
        const int j = (i + 1) % n;
        braid = braid && apply_word({i, j, i}, c) == apply_word({j, i, j}, c);
      }
    }
    for (int i = 1; i <= k; ++i) {
      const CoreSum hi = h_op(i, c);
      for (const auto& [core, coeff] : hi.terms()) unit = unit && coeff == 1;
      for (int j = i + 1; j <= k; ++j) h_commute = h_commute && h_op(j, hi) == h_op(i, h_op(j, c));
    }
    if (!(square && commute && braid && h_commute && unit) && detail.empty()) detail = show(node.kbounded);
  }
  s.check("u_i^2 = 0", square, detail);
  s.check("u_i u_j = u_j u_i for non-adjacent i, j", commute, detail);
  s.check("braid relation", braid, k >= 2 ? detail : "not applicable for k = 1");
  s.check("h_i h_j = h_j h_i", h_commute, detail);
  s.check("h_i coefficients on a single core are 1", unit, detail);
  return s;
}

// Partitions μ ⊇ λ with μ/λ a horizontal strip of `size` cells.
std::vector<Partition> horizontal_strips(const Partition& lam, int size) {
  std::vector<Partition> out;
  std::vector<int> rows(lam.parts());
  rows.push_back(0);
  auto rec = [&](auto&& self, std::size_t row, int left) -> void {
    if (row == rows.size()) {
      if (left == 0) {
        std::vector<int> mu(rows);
        std::erase(mu, 0);
        out.emplace_back(std::move(mu));
      }
      return;
    }
    const int base = rows[row];
    const int cap = row == 0 ? left : std::min(left, lam.part(static_cast<int>(row) - 1) - base);
    for (int add = 0; add <= cap; ++add) {
      rows[row] = base + add;
      self(self, row + 1, left - add);
    }
    rows[row] = base;
  };
  rec(rec, 0, size);
  std::ranges::sort(out);
  return out;
}

Suite pieri_suite(const LatticeGraph& g) {
  const int k = g.k();
  Suite s("pieri");
  bool rect = true, classical = true;
  std::string rect_detail, classical_detail;
  for (const auto& node : g.nodes()) {
    const CoreSum c(Core(node.core, k));
    for (int i = 1; i <= k; ++i) {
      CoreSum expected(k);
      expected.add(c_map(merge_parts(node.kbounded, rectangle(i, k)), k), 1);
      if (!(rect_schur_op(i, c) == expected)) {
        rect = false;
        rect_detail = show(node.kbounded) + " with R_" + std::to_string(i);
      }
      if (k >= node.grade + i) {
        std::vector<Partition> images;
        for (const auto& core : k_pieri_terms(i, Core(node.core, k))) images.push_back(p_map(core, k));
        std::ranges::sort(images);
        if (images != horizontal_strips(node.kbounded, i)) {
          classical = false;
          classical_detail = show(node.kbounded) + " with h_" + std::to_string(i);
        }
      }
    }
  }
  s.check("rectangle operator adds R_i", rect, rect_detail);
  s.check("k-Pieri agrees with classical Pieri for large k", classical, classical_detail);
  return s;
}

Suite symmetry_suite(const LatticeGraph& g, json& report) {
  const SymmetryReport r = verify_symmetry(g);
  report = json::parse(report_to_json(r));
  Suite s("symmetry");
  s.check("sigma is a bijection", r.is_bijection);
  s.check("sigma^(k+1) = id", r.power_is_identity, "order " + std::to_string(r.order));
  s.check("corner alcoves rotate", r.corners_cycle);
  s.check("undirected edges preserved", r.undirected_edge_preserving);
  s.check("tau is an automorphism", r.tau_automorphism);
  s.check("tau sigma tau = sigma^-1", r.tau_conjugates_sigma);
  return s;
}

void print_table(const json& report, std::ostream& out) {
  out << "Y^" << report["k"] << "_" << report["m"] << ": " << report["node_count"] << " nodes\n";
  for (const auto& [name, suite] : report["suites"].items())
    for (const auto& c : suite["checks"]) {
      out << (c["passed"].get<bool>() ? "PASS  " : "FAIL  ") << name << ": " << c["name"].get<std::string>();
      if (!c["detail"].get<std::string>().empty()) out << " [" << c["detail"].get<std::string>() << "]";
      out << "\n";
    }
  if (report.contains("symmetry")) {
    const auto& sym = report["symmetry"];
    const bool plus_one = sym["residue_shift_consistent"].get<bool>();
    out << "INFO  symmetry: residue shift ";
    if (sym["residue_shift"].is_null())
      out << (plus_one ? "vacuous (no edges)" : "not uniform");
    else
      out << sym["residue_shift"].dump() << (plus_one ? " (+1)" : " (differs from +1)");
    out << "\n";
  }
  out << (report["passed"].get<bool>() ? "PASSED" : "FAILED") << "\n";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"counts", "bijection", "nilcoxeter", "pieri", "symmetry"};
  return names;
}

VerificationResult run_verification(const RunConfig& config) {
  const LatticeGraph g = build_checked(config);
  std::vector<std::string> selected = config.suites.empty() ? suite_names() : config.suites;
  VerificationResult result;
  result.passed = true;
  json suites = json::object();
  json symmetry;
  for (const auto& name : suite_names()) {
    if (std::ranges::find(selected, name) == selected.end()) continue;
    Suite s = name == "counts"       ? counts_suite(g)
              : name == "bijection"  ? bijection_suite(g)
              : name == "nilcoxeter" ? nilcoxeter_suite(g)
              : name == "pieri"      ? pieri_suite(g)
                                     : symmetry_suite(g, symmetry);
    result.passed = result.passed && s.passed();
    suites[s.name()] = s.to_json();
  }
  result.report = {{"k", config.k}, {"m", config.m}, {"node_count", g.nodes().size()}, {"suites", suites},
                   {"passed", result.passed}};
  if (!symmetry.is_null()) result.report["symmetry"] = symmetry;
  return result;
}

int cmd_build(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string format = config.format.empty() ? "dot" : config.format;
    if (format != "dot" && format != "json") throw UsageError("build writes dot or json, not " + format);
    const LatticeGraph g = build_checked(config);
    const std::string text = format == "dot" ? export_dot(g, config.core_labels) : export_json(g);
    const std::string summary =
        std::to_string(g.nodes().size()) + " nodes, " + std::to_string(g.edges().size()) + " edges\n";
    if (config.output == "-") {
      out << text;
      err << summary;
      return kSuccess;
    }
    const std::string name = config.output.empty()
                                 ? "Y" + std::to_string(config.k) + "_" + std::to_string(config.m) + "." + format
                                 : config.output;
    const auto path = resolve_output(name);
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot write " + path.string());
    file << text;
    out << "wrote " << path.string() << ": " << summary;
    return kSuccess;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    for (const auto& s : config.suites)
      if (std::ranges::find(suite_names(), s) == suite_names().end()) throw UsageError("unknown suite " + s);
    const std::string format = config.format.empty() ? "json" : config.format;
    if (format != "json" && format != "table") throw UsageError("verify reports json or table, not " + format);
    const VerificationResult result = run_verification(config);
    if (format == "table") {
      print_table(result.report, out);
    } else {
      out << result.report.dump(2) << "\n";
    }
    if (!config.output.empty() && config.output != "-") {
      std::ofstream file(resolve_output(config.output), std::ios::binary);
      if (!file) throw UsageError("cannot write " + config.output);
      file << result.report.dump(2) << "\n";
    }
    return result.passed ? kSuccess : kVerificationFailed;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int cmd_convert(int k, const std::string& partition, const std::string& direction, bool verbose, std::ostream& out,
                std::ostream& err) {
  try {
    check_bounds(k, 1);
    const Partition p = parse_partition(partition);
    Partition core, bounded;
    if (direction == "bounded") {
      if (!is_core(p, k))
        throw UsageError(show(p) + " is not a " + std::to_string(k + 1) + "-core (some cell has hook " +
                         std::to_string(k + 1) + ")");
      core = p;
      bounded = p_map(p, k);
      out << bounded.to_string() << "\n";
    } else {
      if (!p.is_bounded(k)) throw UsageError(show(p) + " is not " + std::to_string(k) + "-bounded");
      bounded = p;
      core = c_map(p, k);
      out << core.to_string() << "\n";
    }
    if (verbose) {
      const Word w = core_to_word(Core(core, k));
      out << "word: " << json(w).dump() << "\n";
      out << "alcove: " << alcove_to_json(alcove_of_word(w, k)).dump() << "\n";
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int cmd_rotate(int k, int m, int power, const std::string& partition, std::ostream& out, std::ostream& err) {
  try {
    check_bounds(k, m);
    const Partition p = parse_partition(partition);
    if (!p.is_bounded(k) || !member_by_rectangles(p, k, m))
      throw UsageError(show(p) + " is not in Y^" + std::to_string(k) + "_" + std::to_string(m) +
                       ": no union of m-1 k-rectangles contains it");
    out << sigma_power(p, k, m, power).to_string() << "\n";
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-bounded partition lattices Y^k_m and their cyclic symmetry"};
  app.require_subcommand(1);

  RunConfig build_cfg;
  auto* build_cmd = app.add_subcommand("build", "write the Hasse graph of Y^k_m as DOT or JSON");
  build_cmd->add_option("--k", build_cfg.k, "bound k")->required();
  build_cmd->add_option("--m", build_cfg.m, "number of rectangles plus one")->required();
  build_cmd->add_option("--format", build_cfg.format, "dot or json")->default_str("dot");
  build_cmd->add_option("--output,-o", build_cfg.output, "output file, '-' for stdout");
  build_cmd->add_option("--node-cap", build_cfg.node_cap, "refuse to build more nodes than this");
  build_cmd->add_flag("--core-labels", build_cfg.core_labels, "label DOT nodes with cores too");

  RunConfig verify_cfg;
  auto* verify_cmd = app.add_subcommand("verify", "check counts, bijections, operator identities and symmetry");
  verify_cmd->add_option("--k", verify_cfg.k, "bound k")->required();
  verify_cmd->add_option("--m", verify_cfg.m, "number of rectangles plus one")->required();
  verify_cmd->add_option("--format", verify_cfg.format, "json or table")->default_str("json");
  verify_cmd->add_option("--output,-o", verify_cfg.output, "also write the JSON report here");
  verify_cmd->add_option("--node-cap", verify_cfg.node_cap, "refuse to build more nodes than this");
  verify_cmd->add_option("--suite", verify_cfg.suites, "counts, bijection, nilcoxeter, pieri, symmetry");

  int conv_k = 1;
  std::string to_bounded, to_core;
  bool verbose = false;
  auto* convert_cmd = app.add_subcommand("convert", "map between (k+1)-cores and k-bounded partitions");
  convert_cmd->add_option("--k", conv_k, "bound k")->required();
  auto* tb = convert_cmd->add_option("--to-bounded", to_bounded, "core to convert, e.g. 3,1");
  auto* tc = convert_cmd->add_option("--to-core", to_core, "k-bounded partition to convert");
  tb->excludes(tc);
  convert_cmd->add_flag("--verbose,-v", verbose, "also print the word and alcove");

  int rot_k = 1, rot_m = 1, power = 1;
  std::string rot_partition;
  auto* rotate_cmd = app.add_subcommand("rotate", "apply the cyclic action to a member of Y^k_m");
  rotate_cmd->add_option("--k", rot_k, "bound k")->required();
  rotate_cmd->add_option("--m", rot_m, "number of rectangles plus one")->required();
  rotate_cmd->add_option("--power", power, "exponent of sigma (default 1)");
  rotate_cmd->add_option("partition", rot_partition, "comma-separated parts")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  if (build_cmd->parsed()) return cmd_build(build_cfg, out, err);
  if (verify_cmd->parsed()) return cmd_verify(verify_cfg, out, err);
  if (convert_cmd->parsed()) {
    if (tb->count() == 0 && tc->count() == 0) {
      err << "error: convert needs --to-bounded or --to-core\n";
      return kUsageError;
    }
    return tb->count() ? cmd_convert(conv_k, to_bounded, "bounded", verbose, out, err)
                       : cmd_convert(conv_k, to_core, "core", verbose, out, err);
  }
  return cmd_rotate(rot_k, rot_m, power, rot_partition, out, err);
}

}  // namespace kyoung::cli
