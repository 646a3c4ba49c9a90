#include <doctest.h>

#include <set>

#include "pathcong/error.hpp"
#include "pathcong/quiver.hpp"
#include "pathcong/theorems.hpp"
#include "support.hpp"

using namespace pathcong;
using namespace pathcong::testing;

namespace {

  std::vector<std::string> names_of(Quiver const& q) {
    std::vector<std::string> out;
    for (auto const& p : enumerate_paths(q)) {
      out.push_back(path_name(q, p));
    }
    return out;
  }

  std::set<std::vector<std::string>> words_of(Quiver const& q) {
    std::set<std::vector<std::string>> out;
    for (auto const& p : enumerate_paths(q)) {
      if (p.is_trivial()) {
        out.insert({"@" + q.vertex(p.source)});
        continue;
      }
      std::vector<std::string> w;
      for (auto a : p.arrows) {
        w.push_back(q.arrow(a).name);
      }
      out.insert(w);
    }
    return out;
  }

}  // namespace

TEST_CASE("parse the single-arrow quiver") {
  auto const q = parse_quiver("vertices: 1 2\narrow alpha: 1 -> 2");
  CHECK(q.number_of_vertices() == 2);
  CHECK(q.number_of_arrows() == 1);
  CHECK(q.arrow(0).name == "alpha");
  CHECK(q.vertex(q.arrow(0).source) == "1");
  CHECK(q.vertex(q.arrow(0).target) == "2");
  CHECK(q == single_arrow());
}

TEST_CASE("parse a single vertex") {
  auto const q = parse_quiver("vertices: a");
  CHECK(q.number_of_vertices() == 1);
  CHECK(q.number_of_arrows() == 0);
}

TEST_CASE("parse skips comments and blank lines") {
  auto const q = parse_quiver("# header\n\nvertices: 1 2\n  # more\narrow alpha: 1 -> 2\n\n");
  CHECK(q == single_arrow());
}

TEST_CASE("parse errors name the line") {
  SUBCASE("undeclared endpoint") {
    try {
      (void) parse_quiver("vertices: 1 2\narrow alpha: 1 -> 3");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("undeclared vertex 3") != std::string::npos);
    }
  }
  SUBCASE("duplicate vertex") {
    try {
      (void) parse_quiver("# c\nvertices: 1 1");
      FAIL("expected a parse error");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("duplicate arrow") {
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1 2\narrow a: 1 -> 2\narrow a: 1 -> 2"),
                    ParseError);
  }
  SUBCASE("arrow name clashes with a vertex") {
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1 2\narrow 1: 1 -> 2"), ParseError);
  }
  SUBCASE("malformed lines") {
    CHECK_THROWS_AS((void) parse_quiver("arrow a: 1 -> 2"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1\nvertices: 2"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1 2\narrow a 1 -> 2"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1 2\narrow a: 1 2"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver("vertices: 1 2\nedge a: 1 -> 2"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver("vertices:"), ParseError);
    CHECK_THROWS_AS((void) parse_quiver(""), ParseError);
  }
  SUBCASE("parse errors are domain errors") {
    CHECK_THROWS_AS((void) parse_quiver("nonsense"), DomainError);
  }
}

TEST_CASE("format_quiver round-trips") {
  for (auto const& q : {single_arrow(), kronecker(), triple_arrow(), chain3()}) {
    CHECK(parse_quiver(format_quiver(q)) == q);
  }
}

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Quiver({"1", "1"}, {}), InvalidQuiverError);
  CHECK_THROWS_AS(Quiver({"1"}, {{"a", "1", "2"}}), InvalidQuiverError);
  CHECK_THROWS_AS(Quiver({""}, {}), InvalidQuiverError);
  CHECK_THROWS_AS(Quiver({"a b"}, {}), InvalidQuiverError);
  CHECK_THROWS_AS(Quiver({"a:b"}, {}), InvalidQuiverError);
}

TEST_CASE("acyclicity") {
  CHECK(is_acyclic(single_arrow()));
  CHECK_FALSE(is_acyclic(Quiver({"v"}, {{"a", "v", "v"}})));
  CHECK_FALSE(is_acyclic(
      Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}})));
  CHECK(is_acyclic(Quiver({"1"}, {})));
}

TEST_CASE("enumerate_paths on the worked examples") {
  CHECK(names_of(single_arrow()) == std::vector<std::string>{"1", "2", "alpha"});
  CHECK(names_of(triple_arrow())
        == std::vector<std::string>{"1", "2", "alpha", "beta", "gamma"});
  CHECK(names_of(chain3())
        == std::vector<std::string>{"1", "2", "3", "a", "b", "a.b"});
  CHECK(words_of(chain3()) == brute_force_path_words(chain3()));
}

TEST_CASE("enumerate_paths rejects cycles") {
  CHECK_THROWS_AS((void) enumerate_paths(Quiver({"v"}, {{"a", "v", "v"}})),
                  CyclicQuiverError);
  CHECK_THROWS_AS((void) max_parallel_paths(Quiver({"v"}, {{"a", "v", "v"}})),
                  CyclicQuiverError);
}

TEST_CASE("enumerate_paths ordering is by length then arrow names") {
  Quiver const q({"x", "y", "z"},
                 {{"c", "y", "z"}, {"b", "x", "y"}, {"a", "x", "y"}});
  CHECK(names_of(q)
        == std::vector<std::string>{"x", "y", "z", "a", "b", "c", "a.c", "b.c"});
}

TEST_CASE("max_parallel_paths") {
  CHECK(max_parallel_paths(single_arrow()) == 1);
  CHECK(max_parallel_paths(kronecker()) == 2);
  CHECK(max_parallel_paths(triple_arrow()) == 3);
  CHECK(max_parallel_paths(Quiver({"1"}, {})) == 1);
  // Diamond of two length-two routes.
  Quiver const d({"1", "2", "3", "4"},
                 {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"}});
  CHECK(max_parallel_paths(d) == 2);
}

TEST_CASE("underlying_graph_is_tree") {
  CHECK(underlying_graph_is_tree(chain3()));
  CHECK_FALSE(underlying_graph_is_tree(kronecker()));
  CHECK_FALSE(underlying_graph_is_tree(Quiver({"1", "2"}, {})));
  CHECK(underlying_graph_is_tree(Quiver({"1"}, {})));
}

TEST_CASE("connected_components") {
  auto const one = connected_components(single_arrow());
  REQUIRE(one.size() == 1);
  CHECK(one.front() == single_arrow());

  Quiver const two({"1", "2", "3"}, {{"alpha", "1", "2"}});
  auto const   parts = connected_components(two);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0] == single_arrow());
  CHECK(parts[1].number_of_vertices() == 1);

  Quiver const mixed({"1", "2", "3", "4"},
                     {{"alpha", "1", "2"}, {"beta", "1", "2"}, {"gamma", "3", "4"}});
  auto const   mp = connected_components(mixed);
  REQUIRE(mp.size() == 2);
  CHECK(max_parallel_paths(mp[0]) == 2);
  CHECK(max_parallel_paths(mp[1]) == 1);
}

TEST_CASE("path invariants on random quivers") {
  for (auto const& q : random_quiver_suite(7, 60)) {
    auto const paths = enumerate_paths(q);
    CAPTURE(format_quiver(q));

    // Brute-force oracle agrees exactly.
    CHECK(words_of(q) == brute_force_path_words(q));

    // Closed under contiguous subpaths.
    std::set<std::vector<ArrowIndex>> arrow_words;
    for (auto const& p : paths) {
      arrow_words.insert(p.arrows);
    }
    for (auto const& p : paths) {
      for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        for (std::size_t j = i + 1; j <= p.arrows.size(); ++j) {
          std::vector<ArrowIndex> sub(p.arrows.begin() + i, p.arrows.begin() + j);
          CHECK(arrow_words.count(sub) == 1);
        }
      }
    }

    // Path count equals the sum of the path-count matrix.
    std::size_t total = 0;
    for (auto const& row : path_count_matrix(q)) {
      for (auto c : row) {
        total += c;
      }
    }
    CHECK(total == paths.size());

    if (underlying_graph_is_tree(q)) {
      CHECK(max_parallel_paths(q) == 1);
    }

    // Components partition vertices and arrows exactly once.
    std::multiset<std::string> vs, as;
    for (auto const& c : connected_components(q)) {
      CHECK(connected_components(c).size() == 1);
      for (auto const& v : c.vertices()) {
        vs.insert(v);
      }
      for (auto const& a : c.arrows()) {
        as.insert(a.name + ":" + c.vertex(a.source) + ">" + c.vertex(a.target));
      }
    }
    std::multiset<std::string> vs0(q.vertices().begin(), q.vertices().end()), as0;
    for (auto const& a : q.arrows()) {
      as0.insert(a.name + ":" + q.vertex(a.source) + ">" + q.vertex(a.target));
    }
    CHECK(vs == vs0);
    CHECK(as == as0);
  }
}
