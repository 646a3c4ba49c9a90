#ifndef PATHCONG_SERIALIZE_HPP_
#define PATHCONG_SERIALIZE_HPP_

#include <string>

#include <json.hpp>

#include "pathcong/ideals.hpp"
#include "pathcong/lattice.hpp"
#include "pathcong/semigroup.hpp"
#include "pathcong/theorems.hpp"

namespace pathcong {

  // Keys keep insertion order so output is byte-stable.
  using Json = nlohmann::ordered_json;

  // {"blocks": [["0", "alpha"], ["1"], ...]}
  [[nodiscard]] Json to_json(PathSemigroup const& s, Congruence const& c);
  // {"alpha": "1/1", "beta": "-1/1"}
  [[nodiscard]] Json to_json(PathSemigroup const& s, PathVector const& v);
  // {"generators": ["alpha - beta"], "basis": [{...}, ...]}
  [[nodiscard]] Json to_json(PathSemigroup const& s, SpecialIdeal const& i);
  [[nodiscard]] Json to_json(LatticeProperties const& p);
  // {"elements": [...], "covers": [[i, j], ...], "properties": {...}}
  [[nodiscard]] Json to_json(FiniteLattice const& l, LatticeProperties const& p);
  [[nodiscard]] Json to_json(TheoremReport const& r);

  // Inverses, for round-trip tests.  Throw DomainError on malformed input.
  [[nodiscard]] Congruence congruence_from_json(PathSemigroup const& s,
                                                Json const&          j);
  [[nodiscard]] PathVector path_vector_from_json(PathSemigroup const& s,
                                                 Json const&          j);

  // digraph with one node per element and one edge per cover, lower to upper.
  [[nodiscard]] std::string to_dot(FiniteLattice const& l);

  [[nodiscard]] std::string format_report(TheoremReport const& r);

}  // namespace pathcong

#endif  // PATHCONG_SERIALIZE_HPP_
