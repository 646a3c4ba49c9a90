#ifndef PATHCONG_SEMIGROUP_HPP_
#define PATHCONG_SEMIGROUP_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathcong/quiver.hpp"

namespace pathcong {

  // Index of an element of a path semigroup.  Index 0 is the zero and
  // index i > 0 is the (i - 1)-th path in enumerate_paths order.
  using ElementIndex = std::uint32_t;

  inline constexpr ElementIndex zero_element = 0;

  //! The path semigroup with zero of a finite acyclic quiver, with its full
  //! multiplication table.
  class PathSemigroup {
   public:
    // Throws CyclicQuiverError.
    explicit PathSemigroup(Quiver q);

    [[nodiscard]] Quiver const& quiver() const noexcept {
      return _quiver;
    }
    // Number of elements, zero included.
    [[nodiscard]] std::size_t size() const noexcept {
      return _paths.size() + 1;
    }
    [[nodiscard]] std::size_t number_of_paths() const noexcept {
      return _paths.size();
    }
    [[nodiscard]] std::vector<Path> const& paths() const noexcept {
      return _paths;
    }
    // Requires x != zero_element.
    [[nodiscard]] Path const& path(ElementIndex x) const {
      return _paths.at(x - 1);
    }

    [[nodiscard]] ElementIndex product(ElementIndex x,
                                       ElementIndex y) const noexcept {
      return _table[static_cast<std::size_t>(x) * size() + y];
    }

    // "0", a vertex id, or dot-separated arrow names.
    [[nodiscard]] std::string const& name(ElementIndex x) const {
      return _names.at(x);
    }
    [[nodiscard]] std::optional<ElementIndex>
    find(std::string_view name) const;

    [[nodiscard]] ElementIndex element_of_vertex(VertexIndex v) const {
      return static_cast<ElementIndex>(v + 1);
    }

    // Nonzero elements whose path ends (resp. starts) at v.
    [[nodiscard]] std::vector<ElementIndex> const&
    ending_at(VertexIndex v) const {
      return _ending_at.at(v);
    }
    [[nodiscard]] std::vector<ElementIndex> const&
    starting_at(VertexIndex v) const {
      return _starting_at.at(v);
    }

    [[nodiscard]] bool is_idempotent(ElementIndex x) const noexcept {
      return product(x, x) == x;
    }

   private:
    Quiver                                 _quiver;
    std::vector<Path>                      _paths;
    std::vector<std::string>               _names;
    std::vector<ElementIndex>              _table;
    std::vector<std::vector<ElementIndex>> _ending_at;
    std::vector<std::vector<ElementIndex>> _starting_at;
  };

  [[nodiscard]] PathSemigroup build_semigroup(Quiver q);

  //! A congruence stored as the canonical partition of element indices:
  //! every element maps to the least element of its block.  Two congruences
  //! are equal iff their representative vectors are equal.
  class Congruence {
   public:
    Congruence() = default;

    // Canonicalises an arbitrary labelling (labels[i] == labels[j] iff i
    // and j share a block).
    static Congruence from_labels(std::vector<std::size_t> const& labels);
    static Congruence from_blocks(std::size_t                          n,
                                  std::vector<std::vector<ElementIndex>> const&
                                      blocks);
    static Congruence identity(std::size_t n);
    static Congruence universal(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept {
      return _rep.size();
    }
    [[nodiscard]] ElementIndex representative(ElementIndex x) const {
      return _rep.at(x);
    }
    [[nodiscard]] std::vector<ElementIndex> const& representatives() const {
      return _rep;
    }
    [[nodiscard]] bool related(ElementIndex x, ElementIndex y) const {
      return _rep.at(x) == _rep.at(y);
    }

    // Blocks ordered by least element, each block sorted.
    [[nodiscard]] std::vector<std::vector<ElementIndex>> blocks() const;
    // The block of the zero element.
    [[nodiscard]] std::vector<ElementIndex> zero_block() const;
    [[nodiscard]] std::size_t number_of_blocks() const;
    // Number of ordered pairs (x, y), x != y, in the relation.
    [[nodiscard]] std::size_t number_of_nontrivial_pairs() const;

    // Inclusion as relations: every block of *this lies inside a block of
    // other.
    [[nodiscard]] bool is_contained_in(Congruence const& other) const;

    friend bool operator==(Congruence const&, Congruence const&) = default;
    friend auto operator<=>(Congruence const&, Congruence const&) = default;

   private:
    std::vector<ElementIndex> _rep;
  };

  struct CongruenceHash {
    std::size_t operator()(Congruence const& c) const noexcept;
  };

  // True when c is an equivalence on the elements of s that is left and
  // right compatible.
  [[nodiscard]] bool is_congruence(PathSemigroup const& s, Congruence const& c);

  // Least congruence containing the pair (x, y).
  [[nodiscard]] Congruence principal_congruence(PathSemigroup const& s,
                                                ElementIndex         x,
                                                ElementIndex         y);

  // Throws InvariantError if the congruences belong to semigroups of
  // different sizes.
  [[nodiscard]] Congruence join_congruences(PathSemigroup const& s,
                                            Congruence const&    a,
                                            Congruence const&    b);
  [[nodiscard]] Congruence meet_congruences(Congruence const& a,
                                            Congruence const& b);

  inline constexpr std::size_t default_element_cap = 20;
  inline constexpr std::size_t default_bruteforce_cap = 10;

  //! Every congruence of s, by breadth-first join-closure of the principal
  //! congruences starting from the identity.
  //!
  //! The result is sorted bottom-up: by number of blocks descending, then
  //! by representative vector.  Throws CapExceededError if s has more than
  //! \p element_cap elements.
  [[nodiscard]] std::vector<Congruence>
  enumerate_congruences(PathSemigroup const& s,
                        std::size_t          element_cap = default_element_cap);

  //! Every congruence of s, by testing every set partition of its elements.
  //! Same ordering as enumerate_congruences.
  [[nodiscard]] std::vector<Congruence> enumerate_congruences_bruteforce(
      PathSemigroup const& s,
      std::size_t          element_cap = default_bruteforce_cap);

  // Sort order shared by both enumerations.
  void sort_congruences(std::vector<Congruence>& cs);

  // Every block except the zero block is a singleton.
  [[nodiscard]] bool is_rees(Congruence const& c);

}  // namespace pathcong

#endif  // PATHCONG_SEMIGROUP_HPP_
