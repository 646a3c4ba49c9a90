#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pathcong/cli.hpp"

using namespace pathcong;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::string data(std::string const& name) {
    return std::string(PATHCONG_TEST_DATA) + "/" + name;
  }

  std::size_t count_lines(std::string const& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

}  // namespace

TEST_CASE("paths lists every path") {
  auto const r = run({"paths", data("single_arrow.quiver")});
  CHECK(r.code == exit_ok);
  CHECK(count_lines(r.out) == 3);
  CHECK(r.out.find("alpha: 1 -> 2, length 1") != std::string::npos);
}

TEST_CASE("validate") {
  auto const ok = run({"validate", data("triple_arrow.quiver")});
  CHECK(ok.code == exit_ok);
  CHECK(ok.out == "ok: 2 vertices, 3 arrows, acyclic yes\n");
  auto const cyclic = run({"validate", data("cyclic.quiver")});
  CHECK(cyclic.code == exit_ok);
  CHECK(cyclic.out.find("acyclic no") != std::string::npos);
  auto const missing = run({"validate", data("no-such.quiver")});
  CHECK(missing.code == exit_domain);
  auto const bad = run({"validate", data("bad.quiver")});
  CHECK(bad.code == exit_domain);
  CHECK(bad.err.find("line 3") != std::string::npos);
}

TEST_CASE("congruences and ideals") {
  auto const c = run({"congruences", data("kronecker.quiver")});
  CHECK(c.code == exit_ok);
  CHECK(c.out.rfind("8 congruences\n", 0) == 0);
  auto const cj = run({"congruences", data("single_arrow.quiver"), "--json"});
  CHECK(cj.code == exit_ok);
  CHECK(cj.out.find("\"count\": 5") != std::string::npos);
  CHECK(cj.out == run({"congruences", data("single_arrow.quiver"), "--json"}).out);

  auto const i = run({"ideals", data("triple_arrow.quiver")});
  CHECK(i.code == exit_ok);
  CHECK(i.out.rfind("18 special ideals\n", 0) == 0);
  auto const ij = run({"ideals", data("triple_arrow.quiver"), "--json"});
  CHECK(ij.out.find("\"count\": 18") != std::string::npos);
}

TEST_CASE("lattice with DOT output") {
  auto const path = std::filesystem::temp_directory_path() / "pathcong-cli-test.dot";
  std::filesystem::remove(path);
  auto const r = run({"lattice", data("triple_arrow.quiver"), "--dot", path.string()});
  CHECK(r.code == exit_ok);
  CHECK(r.out.rfind("18 elements, 35 covers\n", 0) == 0);
  std::ifstream      in(path);
  std::ostringstream dot;
  dot << in.rdbuf();
  auto const text  = dot.str();
  std::size_t nodes = 0;
  for (auto pos = text.find("[label="); pos != std::string::npos;
       pos      = text.find("[label=", pos + 1)) {
    ++nodes;
  }
  CHECK(nodes == 18);
  std::filesystem::remove(path);

  auto const j = run({"lattice", data("single_arrow.quiver"), "--json"});
  CHECK(j.code == exit_ok);
  CHECK(j.out.find("\"covers\"") != std::string::npos);
}

TEST_CASE("check reports and exit codes") {
  auto const r = run({"check", data("kronecker.quiver")});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("modular                    yes        yes") != std::string::npos);
  CHECK(r.out.find("distributive               no         no") != std::string::npos);
  CHECK(r.out.find("VIOLATION") == std::string::npos);

  CHECK(run({"check", data("cyclic.quiver")}).code == exit_domain);
  CHECK(run({"check", data("triple_arrow.quiver"), "--max-elements", "5"}).code == exit_domain);
  CHECK(run({"check", data("triple_arrow.quiver"), "--json"}).code == exit_ok);
}

TEST_CASE("random-check") {
  auto const r = run({"random-check", "--vertices", "4", "--arrows", "5", "--seed", "42",
                      "--trials", "5"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("5 trials, 0 violations") != std::string::npos);
  CHECK(r.out == run({"random-check", "--vertices", "4", "--arrows", "5", "--seed",
                      "42", "--trials", "5"})
                     .out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_usage);
  CHECK(run({"frobnicate"}).code == exit_usage);
  CHECK(run({"paths"}).code == exit_usage);
  CHECK(run({"check", data("single_arrow.quiver"), "--max-elements", "zero"}).code == exit_usage);
  CHECK(run({"--help"}).code == exit_ok);
}
