#ifndef PATHCONG_IDEALS_HPP_
#define PATHCONG_IDEALS_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pathcong/linalg.hpp"
#include "pathcong/semigroup.hpp"

namespace pathcong {

  //! A monomial relation (a path p) or a commutative relation p - q for
  //! distinct parallel paths.  A commutative relation always stores the
  //! path that comes first in enumerate_paths order as \c first.
  class Relation {
   public:
    enum class Kind { monomial, commutative };

    static Relation monomial(PathIndex p);
    // Throws InvariantError if p == q or the paths are not parallel.
    static Relation commutative(PathSemigroup const& s, PathIndex p, PathIndex q);

    [[nodiscard]] Kind kind() const noexcept {
      return _kind;
    }
    [[nodiscard]] bool is_monomial() const noexcept {
      return _kind == Kind::monomial;
    }
    [[nodiscard]] PathIndex first() const noexcept {
      return _first;
    }
    // Only meaningful for commutative relations.
    [[nodiscard]] PathIndex second() const noexcept {
      return _second;
    }

    // p, or e_first - e_second.
    [[nodiscard]] PathVector to_vector() const;

    friend bool operator==(Relation const&, Relation const&)  = default;
    friend auto operator<=>(Relation const&, Relation const&) = default;

   private:
    Relation(Kind k, PathIndex a, PathIndex b)
        : _kind(k), _first(a), _second(b) {}

    Kind      _kind;
    PathIndex _first;
    PathIndex _second;
  };

  // "alpha" or "alpha - beta", using path names.
  [[nodiscard]] std::string relation_name(PathSemigroup const& s,
                                          Relation const&      r);
  // Inverse of relation_name.  Throws InvariantError.
  [[nodiscard]] Relation parse_relation(PathSemigroup const& s,
                                        std::string const&   text);

  //! Every monomial relation (one per path) followed by every commutative
  //! relation (one per unordered pair of distinct parallel paths).
  [[nodiscard]] std::vector<Relation> all_relations(PathSemigroup const& s);

  //! A two-sided ideal of the path algebra generated by relations.  Ideals
  //! are identified by their space: generator sets are bookkeeping.
  class SpecialIdeal {
   public:
    SpecialIdeal() = default;
    SpecialIdeal(std::vector<Relation> generators, Subspace space);

    [[nodiscard]] std::vector<Relation> const& generators() const noexcept {
      return _generators;
    }
    [[nodiscard]] Subspace const& space() const noexcept {
      return _space;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _space.dimension();
    }
    [[nodiscard]] bool contains(PathVector const& v) const {
      return membership(_space, v);
    }
    [[nodiscard]] bool is_contained_in(SpecialIdeal const& other) const {
      return is_subspace_of(_space, other._space);
    }

    friend bool operator==(SpecialIdeal const& x, SpecialIdeal const& y) {
      return x._space == y._space;
    }

   private:
    std::vector<Relation> _generators;  // sorted, unique
    Subspace              _space;
  };

  struct SpecialIdealHash {
    std::size_t operator()(SpecialIdeal const& i) const noexcept {
      return SubspaceHash{}(i.space());
    }
  };

  // span{ u g v : g a generator, u, v paths }.
  [[nodiscard]] SpecialIdeal generate_ideal(PathSemigroup const&     s,
                                            std::span<Relation const> gens);

  [[nodiscard]] SpecialIdeal zero_ideal(PathSemigroup const& s);
  // The whole path algebra, generated by the trivial paths.
  [[nodiscard]] SpecialIdeal whole_algebra(PathSemigroup const& s);

  // Sum of the ideals.  Throws InvariantError on ambient mismatch.
  [[nodiscard]] SpecialIdeal ideal_join(SpecialIdeal const& a,
                                        SpecialIdeal const& b);
  //! The ideal generated by the relations lying in a ∩ b.  This is the meet
  //! among special ideals and can be strictly smaller than a ∩ b.
  [[nodiscard]] SpecialIdeal ideal_meet(PathSemigroup const& s,
                                        SpecialIdeal const&  a,
                                        SpecialIdeal const&  b);

  // Relations of s whose vector lies in the given space.
  [[nodiscard]] std::vector<Relation>
  relations_in(PathSemigroup const& s, Subspace const& space);

  // True when u·w·v stays in the space for every basis vector w and all
  // paths u, v.
  [[nodiscard]] bool is_two_sided_ideal(PathSemigroup const& s,
                                        Subspace const&      space);

  //! Every special ideal of the path algebra, by join-closure from the zero
  //! ideal and the ideals generated by single relations.  Sorted by
  //! dimension, then by basis.  Throws CapExceededError when the semigroup
  //! has more than \p element_cap elements.
  [[nodiscard]] std::vector<SpecialIdeal>
  enumerate_special_ideals(PathSemigroup const& s,
                           std::size_t element_cap = default_element_cap);

  //! The ideal of a congruence: monomials for the paths in the zero block, commutative
  //! relations for every pair inside any other block.
  [[nodiscard]] SpecialIdeal congruence_to_ideal(PathSemigroup const& s,
                                                 Congruence const&    c);

  //! The congruence {(x, y) : x - y ∈ I}, where the zero element maps
  //! to the zero vector.
  [[nodiscard]] Congruence ideal_to_congruence(PathSemigroup const& s,
                                               SpecialIdeal const&  i);

  // Vector of an element: zero for the zero element, the path otherwise.
  [[nodiscard]] PathVector element_vector(ElementIndex x);

}  // namespace pathcong

#endif  // PATHCONG_IDEALS_HPP_
