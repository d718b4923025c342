#include <doctest.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kyoung/cli.hpp"

namespace fs = std::filesystem;
using kyoung::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "kyoung");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("kyoung_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("build writes JSON and DOT files") {
  TempDir dir;
  const fs::path json_file = dir.path / "y22.json";
  Result r = invoke({"build", "--k", "2", "--m", "2", "--format", "json", "--output", json_file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("4 nodes") != std::string::npos);
  CHECK(nlohmann::json::parse(slurp(json_file))["nodes"].size() == 4);

  const fs::path dot_file = dir.path / "y33.dot";
  r = invoke({"build", "--k", "3", "--m", "3", "--format", "dot", "--output", dot_file.string()});
  CHECK(r.code == 0);
  const std::string dot = slurp(dot_file);
  std::istringstream lines(dot);
  std::size_t nodes = 0;
  for (std::string line; std::getline(lines, line);)
    nodes += line.size() > 3 && line.starts_with("  n") && std::isdigit(static_cast<unsigned char>(line[3])) &&
             line.find("->") == std::string::npos;
  CHECK(nodes == 27);

  r = invoke({"build", "--k", "1", "--m", "1", "--output", "-"});
  CHECK(r.code == 0);
  CHECK(r.out.find("n0 [label=\"∅\"]") != std::string::npos);
  CHECK(r.err.find("1 nodes") != std::string::npos);
}

TEST_CASE("default output path honours the output directory override") {
  TempDir dir;
  ::setenv("KYOUNG_OUTPUT_DIR", dir.path.c_str(), 1);
  const Result r = invoke({"build", "--k", "2", "--m", "3", "--format", "json"});
  ::unsetenv("KYOUNG_OUTPUT_DIR");
  CHECK(r.code == 0);
  CHECK(fs::exists(dir.path / "Y2_3.json"));
}

TEST_CASE("builds are byte-identical") {
  const Result a = invoke({"build", "--k", "3", "--m", "4", "--format", "json", "--output", "-"});
  const Result b = invoke({"build", "--k", "3", "--m", "4", "--format", "json", "--output", "-"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Result c = invoke({"verify", "--k", "3", "--m", "3"});
  const Result d = invoke({"verify", "--k", "3", "--m", "3"});
  CHECK(c.out == d.out);
}

TEST_CASE("verify") {
  Result r = invoke({"verify", "--k", "2", "--m", "4"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["node_count"] == 16);

  r = invoke({"verify", "--k", "3", "--m", "2"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["node_count"] == 8);
  CHECK(j["symmetry"]["order"] == 4);

  r = invoke({"verify", "--k", "2", "--m", "1", "--format", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("PASSED\n"));

  r = invoke({"verify", "--k", "2", "--m", "3", "--suite", "counts", "--suite", "pieri"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["suites"].size() == 2);
  CHECK(j["suites"].contains("pieri"));

  CHECK(invoke({"verify", "--k", "2", "--m", "2", "--suite", "bogus"}).code == 2);
}

TEST_CASE("convert") {
  CHECK(invoke({"convert", "--k", "2", "--to-bounded", "3,1"}).out == "2,1\n");
  CHECK(invoke({"convert", "--k", "2", "--to-core", "2,1"}).out == "3,1\n");
  const Result empty = invoke({"convert", "--k", "2", "--to-core", ""});
  CHECK(empty.code == 0);
  CHECK(empty.out == "\n");
  const Result verbose = invoke({"convert", "--k", "2", "--verbose", "--to-core", "2,1"});
  CHECK(verbose.out.find("word: [2,1,0]") != std::string::npos);
  CHECK(verbose.out.find("alcove:") != std::string::npos);

  Result bad = invoke({"convert", "--k", "2", "--to-core", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("2-bounded") != std::string::npos);
  bad = invoke({"convert", "--k", "2", "--to-bounded", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("3-core") != std::string::npos);
  CHECK(invoke({"convert", "--k", "2", "--to-core", "1,2"}).code == 2);
  CHECK(invoke({"convert", "--k", "2", "--to-core", "1", "--to-bounded", "1"}).code == 2);
}

TEST_CASE("rotate") {
  CHECK(invoke({"rotate", "--k", "2", "--m", "2", "--power", "3", "1"}).out == "1\n");
  CHECK(invoke({"rotate", "--k", "2", "--m", "2", "1"}).out == "1\n");
  const std::string image = invoke({"rotate", "--k", "2", "--m", "2", ""}).out;
  CHECK((image == "2\n" || image == "1,1\n"));
  CHECK(invoke({"rotate", "--k", "2", "--m", "2", "--power", "3", ""}).out == "\n");
  const Result bad = invoke({"rotate", "--k", "2", "--m", "2", "2,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not in Y^2_2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"build", "--k", "0", "--m", "2"}).code == 2);
  CHECK(invoke({"build", "--k", "21", "--m", "1"}).code == 2);
  CHECK(invoke({"build", "--k", "2", "--m", "2", "--format", "png"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  const Result cap = invoke({"build", "--k", "6", "--m", "10", "--node-cap", "100"});
  CHECK(cap.code == 2);
  CHECK(cap.err.find("node cap") != std::string::npos);
  CHECK(invoke({"--help"}).code == 0);
}
