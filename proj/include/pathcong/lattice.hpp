#ifndef PATHCONG_LATTICE_HPP_
#define PATHCONG_LATTICE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pathcong/error.hpp"

namespace pathcong {

  using LatticeIndex = std::uint32_t;

  // Raised by build_lattice when the supplied tables are not a lattice.
  class LatticeAxiomError : public InvariantError {
   public:
    LatticeAxiomError(std::string const& what, LatticeIndex a, LatticeIndex b)
        : InvariantError(what + " (witness " + std::to_string(a) + ", "
                         + std::to_string(b) + ")"),
          _witness{a, b} {}

    [[nodiscard]] std::pair<LatticeIndex, LatticeIndex> witness() const {
      return _witness;
    }

   private:
    std::pair<LatticeIndex, LatticeIndex> _witness;
  };

  //! A finite lattice with materialised order, join and meet tables and its
  //! Hasse diagram.  Immutable once built.
  class FiniteLattice {
   public:
    [[nodiscard]] std::size_t size() const noexcept {
      return _n;
    }
    [[nodiscard]] bool leq(LatticeIndex a, LatticeIndex b) const noexcept {
      return (_up[a * _words + b / 64] >> (b % 64)) & 1u;
    }
    [[nodiscard]] bool less(LatticeIndex a, LatticeIndex b) const noexcept {
      return a != b && leq(a, b);
    }
    [[nodiscard]] bool comparable(LatticeIndex a, LatticeIndex b) const noexcept {
      return leq(a, b) || leq(b, a);
    }
    [[nodiscard]] LatticeIndex join(LatticeIndex a, LatticeIndex b) const noexcept {
      return _join[a * _n + b];
    }
    [[nodiscard]] LatticeIndex meet(LatticeIndex a, LatticeIndex b) const noexcept {
      return _meet[a * _n + b];
    }
    // b covers a: a < b with nothing strictly between.
    [[nodiscard]] bool covers(LatticeIndex a, LatticeIndex b) const noexcept {
      return (_cover[a * _words + b / 64] >> (b % 64)) & 1u;
    }
    // (lower, upper) pairs, sorted.
    [[nodiscard]] std::vector<std::pair<LatticeIndex, LatticeIndex>> const&
    cover_pairs() const noexcept {
      return _covers;
    }
    [[nodiscard]] LatticeIndex bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] LatticeIndex top() const noexcept {
      return _top;
    }
    [[nodiscard]] std::string const& label(LatticeIndex a) const {
      return _labels.at(a);
    }
    [[nodiscard]] std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }

   private:
    friend FiniteLattice
    build_lattice(std::size_t,
                  std::function<bool(LatticeIndex, LatticeIndex)> const&,
                  std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const&,
                  std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const&,
                  std::vector<std::string>);

    std::size_t                                        _n     = 0;
    std::size_t                                        _words = 0;
    std::vector<std::uint64_t>                         _up;
    std::vector<std::uint64_t>                         _cover;
    std::vector<LatticeIndex>                          _join;
    std::vector<LatticeIndex>                          _meet;
    std::vector<std::pair<LatticeIndex, LatticeIndex>> _covers;
    std::vector<std::string>                           _labels;
    LatticeIndex                                       _bottom = 0;
    LatticeIndex                                       _top    = 0;
  };

  //! Materialises a lattice on elements 0..n-1 and checks that leq is a
  //! partial order, that join and meet are its least upper and greatest
  //! lower bounds, and that a bottom and a top exist.  Missing labels
  //! default to the element index.
  //!
  //! Throws LatticeAxiomError naming a witness pair on the first failure.
  [[nodiscard]] FiniteLattice build_lattice(
      std::size_t                                                    n,
      std::function<bool(LatticeIndex, LatticeIndex)> const&         leq,
      std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const& join,
      std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const& meet,
      std::vector<std::string>                                       labels = {});

  // Computes join and meet from the order.  Throws LatticeAxiomError when
  // some pair has no least upper or greatest lower bound.
  [[nodiscard]] FiniteLattice
  lattice_from_order(std::size_t                                            n,
                     std::function<bool(LatticeIndex, LatticeIndex)> const& leq,
                     std::vector<std::string> labels = {});

  // The order generated by the given (lower, upper) cover pairs.
  [[nodiscard]] FiniteLattice lattice_from_covers(
      std::size_t                                               n,
      std::vector<std::pair<LatticeIndex, LatticeIndex>> const& covers,
      std::vector<std::string>                                  labels = {});

  using Triple  = std::array<LatticeIndex, 3>;
  using Pair    = std::pair<LatticeIndex, LatticeIndex>;
  // Pentagon: {bottom, a, c, b, top} with bottom < a < c < top, b the
  // element off the chain.  Diamond: {bottom, x, y, z, top}.
  using Quintet = std::array<LatticeIndex, 5>;

  // (a ∨ b) ∧ c != (a ∧ c) ∨ (b ∧ c)
  [[nodiscard]] std::optional<Triple>
  find_distributivity_violation(FiniteLattice const& l);
  // a <= c and (a ∨ b) ∧ c != a ∨ (b ∧ c)
  [[nodiscard]] std::optional<Triple>
  find_modularity_violation(FiniteLattice const& l);

  [[nodiscard]] inline bool is_distributive(FiniteLattice const& l) {
    return !find_distributivity_violation(l);
  }
  [[nodiscard]] inline bool is_modular(FiniteLattice const& l) {
    return !find_modularity_violation(l);
  }

  // Each returns a pair (a, b) for which the defining implication fails.
  //   upper semimodular:        a, b ≻ a∧b  ⟹  a∨b ≻ a, b
  //   lower semimodular:        a∨b ≻ a, b  ⟹  a, b ≻ a∧b
  //   strong upper semimodular: a ≻ a∧b     ⟹  a∨b ≻ b
  //   strong lower semimodular: a∨b ≻ a     ⟹  b ≻ a∧b
  [[nodiscard]] std::optional<Pair>
  find_upper_semimodularity_violation(FiniteLattice const& l);
  [[nodiscard]] std::optional<Pair>
  find_lower_semimodularity_violation(FiniteLattice const& l);
  [[nodiscard]] std::optional<Pair>
  find_strong_upper_semimodularity_violation(FiniteLattice const& l);
  [[nodiscard]] std::optional<Pair>
  find_strong_lower_semimodularity_violation(FiniteLattice const& l);

  [[nodiscard]] inline bool is_upper_semimodular(FiniteLattice const& l) {
    return !find_upper_semimodularity_violation(l);
  }
  [[nodiscard]] inline bool is_lower_semimodular(FiniteLattice const& l) {
    return !find_lower_semimodularity_violation(l);
  }
  [[nodiscard]] inline bool is_strong_upper_semimodular(FiniteLattice const& l) {
    return !find_strong_upper_semimodularity_violation(l);
  }
  [[nodiscard]] inline bool is_strong_lower_semimodular(FiniteLattice const& l) {
    return !find_strong_lower_semimodularity_violation(l);
  }

  //! A sublattice isomorphic to N5, extracted from a modular-law violation
  //! when there is one and otherwise found by exhaustive search.
  [[nodiscard]] std::optional<Quintet> find_pentagon(FiniteLattice const& l);
  //! A sublattice isomorphic to M3, extracted from a distributive-law
  //! violation of a modular lattice when possible and otherwise found by
  //! exhaustive search.
  [[nodiscard]] std::optional<Quintet> find_diamond(FiniteLattice const& l);

  // Exhaustive O(n^3) searches that never consult the law scans.
  [[nodiscard]] std::optional<Quintet>
  search_pentagon_exhaustive(FiniteLattice const& l);
  [[nodiscard]] std::optional<Quintet>
  search_diamond_exhaustive(FiniteLattice const& l);

  // Checks the five elements are distinct and closed under join and meet
  // with exactly the N5 (resp. M3) tables.
  [[nodiscard]] bool is_pentagon(FiniteLattice const& l, Quintet const& q);
  [[nodiscard]] bool is_diamond(FiniteLattice const& l, Quintet const& q);

  // Re-checks a violation witness against the lattice tables.
  [[nodiscard]] bool violates_distributivity(FiniteLattice const& l,
                                             Triple const&        t);
  [[nodiscard]] bool violates_modularity(FiniteLattice const& l,
                                         Triple const&        t);

  // True when phi (indices of l1 -> indices of l2) is a bijection with
  // a <= b  ⟺  phi(a) <= phi(b).
  [[nodiscard]] bool is_order_isomorphism(FiniteLattice const&             l1,
                                          FiniteLattice const&             l2,
                                          std::vector<LatticeIndex> const& phi);

}  // namespace pathcong

#endif  // PATHCONG_LATTICE_HPP_
