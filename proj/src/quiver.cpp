#include "pathcong/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    bool has_space(std::string_view s) {
      return std::any_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
      });
    }

    void validate_identifier(std::string const& id, char const* kind) {
      if (id.empty()) {
        throw InvalidQuiverError(std::string("empty ") + kind + " name");
      }
      if (has_space(id) || id.find(':') != std::string::npos
          || id.find('.') != std::string::npos) {
        throw InvalidQuiverError(std::string(kind) + " name '" + id
                                 + "' contains whitespace, ':' or '.'");
      }
      if (id == "0") {
        throw InvalidQuiverError(std::string(kind)
                                 + " name '0' is reserved for the zero");
      }
    }

    std::string_view trim(std::string_view s) {
      auto const is_ws = [](unsigned char c) { return std::isspace(c) != 0; };
      while (!s.empty() && is_ws(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_ws(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    bool starts_with_word(std::string_view line, std::string_view word) {
      return line.size() > word.size() && line.substr(0, word.size()) == word
             && std::isspace(static_cast<unsigned char>(line[word.size()]));
    }

    struct DisjointSets {
      explicit DisjointSets(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        parent[std::max(x, y)] = std::min(x, y);
        return true;
      }
      std::vector<std::size_t> parent;
    };

    std::size_t saturating_add(std::size_t x, std::size_t y) {
      return x > std::numeric_limits<std::size_t>::max() - y
                 ? std::numeric_limits<std::size_t>::max()
                 : x + y;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Quiver
  ////////////////////////////////////////////////////////////////////////

  Quiver::Quiver(std::vector<std::string> vertices,
                 std::vector<ArrowSpec>   arrows)
      : _vertices(std::move(vertices)) {
    for (std::size_t i = 0; i < _vertices.size(); ++i) {
      validate_identifier(_vertices[i], "vertex");
      if (!_vertex_index.emplace(_vertices[i], i).second) {
        throw InvalidQuiverError("duplicate vertex '" + _vertices[i] + "'");
      }
    }
    _arrows.reserve(arrows.size());
    for (auto& spec : arrows) {
      validate_identifier(spec.name, "arrow");
      if (_vertex_index.count(spec.name) != 0) {
        throw InvalidQuiverError("arrow name '" + spec.name
                                 + "' clashes with a vertex");
      }
      auto const src = _vertex_index.find(spec.source);
      if (src == _vertex_index.end()) {
        throw InvalidQuiverError("arrow '" + spec.name
                                 + "': undeclared vertex " + spec.source);
      }
      auto const tgt = _vertex_index.find(spec.target);
      if (tgt == _vertex_index.end()) {
        throw InvalidQuiverError("arrow '" + spec.name
                                 + "': undeclared vertex " + spec.target);
      }
      if (!_arrow_index.emplace(spec.name, _arrows.size()).second) {
        throw InvalidQuiverError("duplicate arrow '" + spec.name + "'");
      }
      _arrows.push_back(Arrow{std::move(spec.name), src->second, tgt->second});
    }
  }

  std::optional<VertexIndex> Quiver::find_vertex(std::string_view name) const {
    auto it = _vertex_index.find(std::string(name));
    if (it == _vertex_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<ArrowIndex> Quiver::find_arrow(std::string_view name) const {
    auto it = _arrow_index.find(std::string(name));
    if (it == _arrow_index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool operator==(Quiver const& x, Quiver const& y) {
    if (x._vertices != y._vertices || x._arrows.size() != y._arrows.size()) {
      return false;
    }
    for (std::size_t i = 0; i < x._arrows.size(); ++i) {
      auto const& a = x._arrows[i];
      auto const& b = y._arrows[i];
      if (a.name != b.name || a.source != b.source || a.target != b.target) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Paths
  ////////////////////////////////////////////////////////////////////////

  std::string path_name(Quiver const& q, Path const& p) {
    if (p.is_trivial()) {
      return q.vertex(p.source);
    }
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
      if (i != 0) {
        out += '.';
      }
      out += q.arrow(p.arrows[i]).name;
    }
    return out;
  }

  Path make_path(Quiver const& q, std::vector<std::string> const& names) {
    if (names.empty()) {
      throw InvalidQuiverError("a path needs at least one arrow");
    }
    Path p;
    for (auto const& name : names) {
      auto a = q.find_arrow(name);
      if (!a) {
        throw InvalidQuiverError("unknown arrow '" + name + "'");
      }
      if (!p.arrows.empty() && q.arrow(p.arrows.back()).target
                                   != q.arrow(*a).source) {
        throw InvalidQuiverError("arrows do not compose at '" + name + "'");
      }
      p.arrows.push_back(*a);
    }
    p.source = q.arrow(p.arrows.front()).source;
    p.target = q.arrow(p.arrows.back()).target;
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  Quiver parse_quiver(std::string_view text) {
    std::optional<std::vector<std::string>> vertices;
    std::vector<ArrowSpec>                  arrows;
    std::vector<std::size_t>                arrow_lines;
    std::size_t                             vertices_line = 0;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      auto nl = text.find('\n', pos);
      if (nl == std::string_view::npos) {
        nl = text.size();
      }
      auto const raw = text.substr(pos, nl - pos);
      pos            = nl + 1;
      ++line_no;

      auto const line = trim(raw);
      if (line.empty() || line.front() == '#') {
        if (nl == text.size()) {
          break;
        }
        continue;
      }
      if (line.substr(0, 9) == "vertices:") {
        if (vertices) {
          throw ParseError(line_no, "second 'vertices:' line");
        }
        auto ids = split_ws(line.substr(9));
        if (ids.empty()) {
          throw ParseError(line_no, "no vertices declared");
        }
        for (auto const& id : ids) {
          if (id.find(':') != std::string::npos) {
            throw ParseError(line_no, "vertex id '" + id + "' contains ':'");
          }
        }
        vertices      = std::move(ids);
        vertices_line = line_no;
      } else if (starts_with_word(line, "arrow")) {
        // arrow <name>: <src> -> <tgt>
        auto const rest  = trim(line.substr(5));
        auto const colon = rest.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(line_no, "expected 'arrow <name>: <src> -> <tgt>'");
        }
        auto const name = trim(rest.substr(0, colon));
        auto const ends = split_ws(rest.substr(colon + 1));
        if (name.empty() || has_space(name) || ends.size() != 3
            || ends[1] != "->") {
          throw ParseError(line_no, "expected 'arrow <name>: <src> -> <tgt>'");
        }
        arrows.push_back(ArrowSpec{std::string(name), ends[0], ends[2]});
        arrow_lines.push_back(line_no);
      } else {
        throw ParseError(line_no,
                         "unrecognised declaration '" + std::string(line)
                             + "'");
      }
      if (nl == text.size()) {
        break;
      }
    }
    if (!vertices) {
      throw ParseError(line_no, "missing 'vertices:' line");
    }

    // Report semantic errors against the line that introduced them.
    std::unordered_set<std::string> seen;
    for (auto const& v : *vertices) {
      if (!seen.insert(v).second) {
        throw ParseError(vertices_line, "duplicate vertex '" + v + "'");
      }
    }
    std::unordered_set<std::string> arrow_names;
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      auto const& a = arrows[i];
      if (seen.count(a.name) != 0 || !arrow_names.insert(a.name).second) {
        throw ParseError(arrow_lines[i], "duplicate name '" + a.name + "'");
      }
      for (auto const* end : {&a.source, &a.target}) {
        if (seen.count(*end) == 0) {
          throw ParseError(arrow_lines[i], "undeclared vertex " + *end);
        }
      }
    }
    try {
      return Quiver(std::move(*vertices), std::move(arrows));
    } catch (InvalidQuiverError const& e) {
      throw ParseError(vertices_line, e.what());
    }
  }

  std::string format_quiver(Quiver const& q) {
    std::string out = "vertices:";
    for (auto const& v : q.vertices()) {
      out += ' ';
      out += v;
    }
    out += '\n';
    for (auto const& a : q.arrows()) {
      out += "arrow " + a.name + ": " + q.vertex(a.source) + " -> "
             + q.vertex(a.target) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<VertexIndex>> topological_order(Quiver const& q) {
    auto const               n = q.number_of_vertices();
    std::vector<std::size_t> indegree(n, 0);
    std::vector<std::vector<ArrowIndex>> out(n);
    for (ArrowIndex a = 0; a < q.number_of_arrows(); ++a) {
      ++indegree[q.arrow(a).target];
      out[q.arrow(a).source].push_back(a);
    }
    // Kahn's algorithm with a min-heap for a deterministic order.
    std::priority_queue<VertexIndex,
                        std::vector<VertexIndex>,
                        std::greater<VertexIndex>>
        ready;
    for (VertexIndex v = 0; v < n; ++v) {
      if (indegree[v] == 0) {
        ready.push(v);
      }
    }
    std::vector<VertexIndex> order;
    order.reserve(n);
    while (!ready.empty()) {
      auto v = ready.top();
      ready.pop();
      order.push_back(v);
      for (auto a : out[v]) {
        if (--indegree[q.arrow(a).target] == 0) {
          ready.push(q.arrow(a).target);
        }
      }
    }
    if (order.size() != n) {
      return std::nullopt;
    }
    return order;
  }

  bool is_acyclic(Quiver const& q) {
    return topological_order(q).has_value();
  }

  std::vector<Path> enumerate_paths(Quiver const& q) {
    if (!is_acyclic(q)) {
      throw CyclicQuiverError();
    }
    std::vector<std::vector<ArrowIndex>> out(q.number_of_vertices());
    for (ArrowIndex a = 0; a < q.number_of_arrows(); ++a) {
      out[q.arrow(a).source].push_back(a);
    }

    std::vector<Path> result;
    for (VertexIndex v = 0; v < q.number_of_vertices(); ++v) {
      result.push_back(Path::trivial(v));
    }
    // Depth-first extension of every nontrivial path; acyclicity bounds it.
    std::vector<Path> stack;
    for (ArrowIndex a = 0; a < q.number_of_arrows(); ++a) {
      stack.push_back(Path{{a}, q.arrow(a).source, q.arrow(a).target});
    }
    auto const first_nontrivial = result.size();
    while (!stack.empty()) {
      Path p = std::move(stack.back());
      stack.pop_back();
      for (auto a : out[p.target]) {
        Path longer = p;
        longer.arrows.push_back(a);
        longer.target = q.arrow(a).target;
        stack.push_back(std::move(longer));
      }
      result.push_back(std::move(p));
    }

    auto const by_length_then_names = [&q](Path const& x, Path const& y) {
      if (x.length() != y.length()) {
        return x.length() < y.length();
      }
      return std::lexicographical_compare(
          x.arrows.begin(),
          x.arrows.end(),
          y.arrows.begin(),
          y.arrows.end(),
          [&q](ArrowIndex a, ArrowIndex b) {
            return q.arrow(a).name < q.arrow(b).name;
          });
    };
    std::sort(result.begin() + first_nontrivial,
              result.end(),
              by_length_then_names);
    return result;
  }

  std::vector<std::vector<std::size_t>> path_count_matrix(Quiver const& q) {
    auto order = topological_order(q);
    if (!order) {
      throw CyclicQuiverError();
    }
    auto const                            n = q.number_of_vertices();
    std::vector<std::vector<std::size_t>> count(
        n, std::vector<std::size_t>(n, 0));
    std::vector<std::vector<ArrowIndex>> in(n);
    for (ArrowIndex a = 0; a < q.number_of_arrows(); ++a) {
      in[q.arrow(a).target].push_back(a);
    }
    for (VertexIndex u = 0; u < n; ++u) {
      count[u][u] = 1;
      // Visiting targets in topological order means every predecessor of v
      // is final before v is summed.
      for (auto v : *order) {
        for (auto a : in[v]) {
          count[u][v] = saturating_add(count[u][v], count[u][q.arrow(a).source]);
        }
      }
    }
    return count;
  }

  std::size_t max_parallel_paths(Quiver const& q) {
    std::size_t best = 0;
    for (auto const& row : path_count_matrix(q)) {
      for (auto c : row) {
        best = std::max(best, c);
      }
    }
    return best;
  }

  bool underlying_graph_is_tree(Quiver const& q) {
    auto const n = q.number_of_vertices();
    if (n == 0 || q.number_of_arrows() != n - 1) {
      return false;
    }
    DisjointSets sets(n);
    for (auto const& a : q.arrows()) {
      if (!sets.unite(a.source, a.target)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Quiver> connected_components(Quiver const& q) {
    auto const   n = q.number_of_vertices();
    DisjointSets sets(n);
    for (auto const& a : q.arrows()) {
      sets.unite(a.source, a.target);
    }
    // Roots are the least vertex of each component, so iterating roots in
    // index order orders components by their first vertex.
    std::vector<Quiver> result;
    for (VertexIndex root = 0; root < n; ++root) {
      if (sets.find(root) != root) {
        continue;
      }
      std::vector<std::string> vertices;
      for (VertexIndex v = 0; v < n; ++v) {
        if (sets.find(v) == root) {
          vertices.push_back(q.vertex(v));
        }
      }
      std::vector<ArrowSpec> arrows;
      for (auto const& a : q.arrows()) {
        if (sets.find(a.source) == root) {
          arrows.push_back(
              ArrowSpec{a.name, q.vertex(a.source), q.vertex(a.target)});
        }
      }
      result.emplace_back(std::move(vertices), std::move(arrows));
    }
    return result;
  }

}  // namespace pathcong
