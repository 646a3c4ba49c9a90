#ifndef PATHCONG_THEOREMS_HPP_
#define PATHCONG_THEOREMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pathcong/ideals.hpp"
#include "pathcong/lattice.hpp"
#include "pathcong/quiver.hpp"
#include "pathcong/semigroup.hpp"

namespace pathcong {

  struct LatticeProperties {
    bool distributive             = false;
    bool modular                  = false;
    bool upper_semimodular        = false;
    bool lower_semimodular        = false;
    bool strong_upper_semimodular = false;
    bool strong_lower_semimodular = false;
    bool all_congruences_rees     = false;

    friend bool operator==(LatticeProperties const&,
                           LatticeProperties const&) = default;
  };

  // (name, value) in a fixed order, for reports.
  [[nodiscard]] std::vector<std::pair<std::string, bool>>
  property_list(LatticeProperties const& p);

  //! What the structure theorems predict for the congruence lattice of an
  //! acyclic quiver, from its path counts alone:
  //!   - always strong upper (hence upper) semimodular;
  //!   - modular ⟺ strong lower ⟺ lower semimodular ⟺ at most two paths
  //!     between any two vertices;
  //!   - distributive ⟺ every congruence Rees ⟺ at most one path.
  //! A tree-shaped underlying graph forces the distributive case.
  //! Throws CyclicQuiverError.
  [[nodiscard]] LatticeProperties predict_properties(Quiver const& q);

  // The six order-theoretic predicates evaluated on l; all_congruences_rees
  // is left false (it is a property of congruences, not of the lattice).
  [[nodiscard]] LatticeProperties compute_lattice_properties(
      FiniteLattice const& l);

  struct CongruenceLattice {
    std::vector<Congruence> congruences;
    FiniteLattice           lattice;
  };

  struct IdealLattice {
    std::vector<SpecialIdeal> ideals;
    FiniteLattice             lattice;
  };

  // Enumerates and builds the lattice ordered by inclusion, with join and
  // meet from the congruence operations.  Labels list nontrivial blocks.
  [[nodiscard]] CongruenceLattice
  congruence_lattice(PathSemigroup const& s,
                     std::size_t          element_cap = default_element_cap);

  // Same for special ideals, with ideal_join and ideal_meet.  Labels are
  // span{...} of the reduced basis.
  [[nodiscard]] IdealLattice
  ideal_lattice(PathSemigroup const& s,
                std::size_t          element_cap = default_element_cap);

  [[nodiscard]] std::string congruence_label(PathSemigroup const& s,
                                             Congruence const&    c);
  // "0" for the zero vector, otherwise e.g. "alpha - beta + 2*gamma".
  [[nodiscard]] std::string format_path_vector(PathSemigroup const& s,
                                               PathVector const&    v);
  [[nodiscard]] std::string ideal_label(PathSemigroup const& s,
                                        SpecialIdeal const&  i);

  struct QuiverSummary {
    std::size_t vertices           = 0;
    std::size_t arrows             = 0;
    std::size_t paths              = 0;
    std::size_t semigroup_size     = 0;
    std::size_t max_parallel_paths = 0;
    std::size_t components         = 0;
    bool        is_tree            = false;
  };

  struct Verdict {
    std::string name;
    bool        consistent = true;
    std::string detail;
  };

  //! Outcome of running every structure check on one quiver.
  struct TheoremReport {
    QuiverSummary     summary;
    LatticeProperties predicted;
    LatticeProperties computed;
    std::size_t       congruence_count = 0;
    std::size_t       ideal_count      = 0;
    std::size_t       cover_count      = 0;
    // Witnesses, as lattice labels, when the property fails.
    std::optional<std::pair<std::string, std::string>> lower_semimodular_witness;
    std::optional<std::vector<std::string>>            pentagon;
    std::optional<std::vector<std::string>>            diamond;
    std::vector<Verdict>                               verdicts;

    [[nodiscard]] bool all_consistent() const;
  };

  //! Enumerates congruences and special ideals independently, builds both
  //! lattices and verifies:
  //!   bijection   - both round trips, order isomorphism, equal counts;
  //!   properties  - predicted == computed for all six lattice predicates
  //!                 and the all-Rees property;
  //!   rees        - all congruences Rees ⟺ max_parallel_paths <= 1;
  //!   components  - modular (distributive) ⟺ every connected component is;
  //!   covering    - every cover I1 ≺ I2 of special ideals has
  //!                 I2 = I1 + span{x} for each relation x in I2 \ I1;
  //!   sublattices - modular ⟺ no pentagon, distributive ⟺ no pentagon and
  //!                 no diamond.
  //! Throws CyclicQuiverError and CapExceededError.
  [[nodiscard]] TheoremReport
  check_theorems(Quiver const& q,
                 std::size_t   element_cap = default_element_cap);

  struct RandomQuiverOptions {
    std::size_t min_vertices     = 1;
    std::size_t max_vertices     = 4;
    std::size_t max_arrows       = 5;
    // Largest number of arrows between one ordered pair of vertices.
    std::size_t max_multiplicity = 3;
    // Quivers whose path semigroup is larger are redrawn.
    std::size_t element_cap = default_element_cap;
  };

  //! A uniformly drawn acyclic quiver: vertices "1".."n" in topological
  //! order, arrows a1, a2, ... each joining a uniformly chosen pair i < j.
  //! Deterministic for a given seed on every platform.
  class RandomQuiverGenerator {
   public:
    explicit RandomQuiverGenerator(std::uint64_t       seed,
                                   RandomQuiverOptions options = {});

    [[nodiscard]] Quiver next();

   private:
    std::uint64_t       uniform(std::uint64_t bound);  // in [0, bound)
    std::mt19937_64     _rng;
    RandomQuiverOptions _options;
  };

  [[nodiscard]] std::vector<Quiver>
  random_quiver_suite(std::uint64_t seed,
                      std::size_t   count,
                      RandomQuiverOptions const& options = {});

}  // namespace pathcong

#endif  // PATHCONG_THEOREMS_HPP_
