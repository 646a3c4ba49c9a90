#ifndef PATHCONG_QUIVER_HPP_
#define PATHCONG_QUIVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pathcong {

  using VertexIndex = std::size_t;
  using ArrowIndex  = std::size_t;

  struct Arrow {
    std::string name;
    VertexIndex source;
    VertexIndex target;
  };

  // Arrow declaration by vertex name, as written in a quiver file.
  struct ArrowSpec {
    std::string name;
    std::string source;
    std::string target;
  };

  //! A finite quiver: vertices and arrows in declaration order.
  //!
  //! Vertex identifiers and arrow names share one namespace, so the path
  //! names built from them (see path_name) are unambiguous.  The name "0"
  //! is reserved for the zero of the path semigroup and '.' is reserved as
  //! the separator inside path names.
  class Quiver {
   public:
    Quiver() = default;
    Quiver(std::vector<std::string> vertices, std::vector<ArrowSpec> arrows);

    [[nodiscard]] std::size_t number_of_vertices() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] std::size_t number_of_arrows() const noexcept {
      return _arrows.size();
    }
    [[nodiscard]] std::vector<std::string> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::vector<Arrow> const& arrows() const noexcept {
      return _arrows;
    }
    [[nodiscard]] std::string const& vertex(VertexIndex v) const {
      return _vertices.at(v);
    }
    [[nodiscard]] Arrow const& arrow(ArrowIndex a) const {
      return _arrows.at(a);
    }

    [[nodiscard]] std::optional<VertexIndex>
    find_vertex(std::string_view name) const;
    [[nodiscard]] std::optional<ArrowIndex>
    find_arrow(std::string_view name) const;

    // Same vertex and arrow sequences (names, endpoints, order).
    friend bool operator==(Quiver const& x, Quiver const& y);

   private:
    std::vector<std::string>                     _vertices;
    std::vector<Arrow>                           _arrows;
    std::unordered_map<std::string, VertexIndex> _vertex_index;
    std::unordered_map<std::string, ArrowIndex>  _arrow_index;
  };

  //! A path in a quiver.  A path of length zero is the trivial path at
  //! \c source (== \c target).
  struct Path {
    std::vector<ArrowIndex> arrows;
    VertexIndex             source = 0;
    VertexIndex             target = 0;

    [[nodiscard]] std::size_t length() const noexcept {
      return arrows.size();
    }
    [[nodiscard]] bool is_trivial() const noexcept {
      return arrows.empty();
    }

    static Path trivial(VertexIndex v) {
      return Path{{}, v, v};
    }

    friend bool operator==(Path const&, Path const&) = default;
  };

  // Vertex id for a trivial path, dot-joined arrow names otherwise.
  [[nodiscard]] std::string path_name(Quiver const& q, Path const& p);

  // Builds a path from arrow names; throws InvalidQuiverError if the arrows
  // do not compose.
  [[nodiscard]] Path make_path(Quiver const&                   q,
                               std::vector<std::string> const& arrow_names);

  //! Parses the line-oriented quiver format:
  //!
  //!     # comment
  //!     vertices: 1 2
  //!     arrow alpha: 1 -> 2
  //!
  //! Throws ParseError (with the offending line number) on malformed input.
  [[nodiscard]] Quiver parse_quiver(std::string_view text);

  // Inverse of parse_quiver up to comments and whitespace.
  [[nodiscard]] std::string format_quiver(Quiver const& q);

  [[nodiscard]] bool is_acyclic(Quiver const& q);

  // Vertices in a topological order of the arrow digraph; nullopt when the
  // quiver has a cycle.  Ties are broken by declaration order.
  [[nodiscard]] std::optional<std::vector<VertexIndex>>
  topological_order(Quiver const& q);

  //! Every path of an acyclic quiver, trivial paths included, ordered by
  //! length, then lexicographically by the sequence of arrow names.  The
  //! trivial paths come first in vertex declaration order.
  //!
  //! Throws CyclicQuiverError if \p q has a cycle.
  [[nodiscard]] std::vector<Path> enumerate_paths(Quiver const& q);

  // Number of paths (trivial included) from u to v, saturating at SIZE_MAX.
  // Entry [u][v].  Throws CyclicQuiverError.
  [[nodiscard]] std::vector<std::vector<std::size_t>>
  path_count_matrix(Quiver const& q);

  // Maximum over vertex pairs of the number of paths between them.
  // Throws CyclicQuiverError.
  [[nodiscard]] std::size_t max_parallel_paths(Quiver const& q);

  // Connected and |arrows| == |vertices| - 1 in the underlying multigraph.
  [[nodiscard]] bool underlying_graph_is_tree(Quiver const& q);

  // Maximal weakly connected subquivers; declaration order is preserved
  // inside each component and components are ordered by their first vertex.
  [[nodiscard]] std::vector<Quiver> connected_components(Quiver const& q);

}  // namespace pathcong

#endif  // PATHCONG_QUIVER_HPP_
