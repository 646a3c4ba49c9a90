#include "pathcong/ideals.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <unordered_set>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    std::vector<Relation> merge_generators(std::vector<Relation> const& a,
                                           std::vector<Relation> const& b) {
      std::vector<Relation> out;
      out.reserve(a.size() + b.size());
      std::set_union(
          a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
      return out;
    }

    ElementIndex element_of(PathIndex p) {
      return static_cast<ElementIndex>(p + 1);
    }

    PathIndex path_of(ElementIndex x) {
      return static_cast<PathIndex>(x - 1);
    }

    // Vector of u·x·v for elements u, x, v.
    ElementIndex triple(PathSemigroup const& s,
                        ElementIndex         u,
                        ElementIndex         x,
                        ElementIndex         v) {
      return s.product(s.product(u, x), v);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Relation
  ////////////////////////////////////////////////////////////////////////

  Relation Relation::monomial(PathIndex p) {
    return Relation(Kind::monomial, p, p);
  }

  Relation Relation::commutative(PathSemigroup const& s,
                                 PathIndex            p,
                                 PathIndex            q) {
    if (p == q) {
      throw InvariantError("commutative relation needs two distinct paths");
    }
    if (p >= s.number_of_paths() || q >= s.number_of_paths()) {
      throw InvariantError("commutative relation refers to an unknown path");
    }
    auto const& x = s.paths()[p];
    auto const& y = s.paths()[q];
    if (x.source != y.source || x.target != y.target) {
      throw InvariantError("commutative relation needs parallel paths: "
                           + s.name(element_of(p)) + ", "
                           + s.name(element_of(q)));
    }
    return Relation(Kind::commutative, std::min(p, q), std::max(p, q));
  }

  PathVector Relation::to_vector() const {
    if (_kind == Kind::monomial) {
      return PathVector::unit(_first);
    }
    return PathVector::difference(_first, _second);
  }

  std::string relation_name(PathSemigroup const& s, Relation const& r) {
    if (r.is_monomial()) {
      return s.name(element_of(r.first()));
    }
    return s.name(element_of(r.first())) + " - " + s.name(element_of(r.second()));
  }

  Relation parse_relation(PathSemigroup const& s, std::string const& text) {
    auto const lookup = [&s](std::string name) {
      name.erase(0, name.find_first_not_of(' '));
      name.erase(name.find_last_not_of(' ') + 1);
      auto x = s.find(name);
      if (!x || *x == zero_element) {
        throw InvariantError("unknown path '" + name + "'");
      }
      return path_of(*x);
    };
    auto const minus = text.find(" - ");
    if (minus == std::string::npos) {
      return Relation::monomial(lookup(text));
    }
    return Relation::commutative(
        s, lookup(text.substr(0, minus)), lookup(text.substr(minus + 3)));
  }

  std::vector<Relation> all_relations(PathSemigroup const& s) {
    std::vector<Relation> out;
    auto const            n = s.number_of_paths();
    for (PathIndex p = 0; p < n; ++p) {
      out.push_back(Relation::monomial(p));
    }
    for (PathIndex p = 0; p < n; ++p) {
      for (PathIndex q = p + 1; q < n; ++q) {
        auto const& x = s.paths()[p];
        auto const& y = s.paths()[q];
        if (x.source == y.source && x.target == y.target) {
          out.push_back(Relation::commutative(s, p, q));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // SpecialIdeal
  ////////////////////////////////////////////////////////////////////////

  SpecialIdeal::SpecialIdeal(std::vector<Relation> generators, Subspace space)
      : _generators(std::move(generators)), _space(std::move(space)) {
    std::sort(_generators.begin(), _generators.end());
    _generators.erase(std::unique(_generators.begin(), _generators.end()),
                      _generators.end());
  }

  SpecialIdeal generate_ideal(PathSemigroup const&      s,
                              std::span<Relation const> gens) {
    Subspace space(s.number_of_paths());
    for (auto const& g : gens) {
      if (g.first() >= s.number_of_paths() || g.second() >= s.number_of_paths()) {
        throw InvariantError("relation refers to an unknown path");
      }
      auto const  a = element_of(g.first());
      auto const  b = element_of(g.second());
      auto const& p = s.path(a);
      // u·g·v is nonzero only for u ending at s(g) and v starting at t(g).
      for (auto u : s.ending_at(p.source)) {
        for (auto v : s.starting_at(p.target)) {
          auto const ua = triple(s, u, a, v);
          if (g.is_monomial()) {
            space.insert(PathVector::unit(path_of(ua)));
          } else {
            // Parallel constituents vanish together, which cannot happen
            // for u, v chosen at the shared endpoints.
            auto const ub = triple(s, u, b, v);
            space.insert(PathVector::difference(path_of(ua), path_of(ub)));
          }
        }
      }
    }
    return SpecialIdeal(std::vector<Relation>(gens.begin(), gens.end()),
                        std::move(space));
  }

  SpecialIdeal zero_ideal(PathSemigroup const& s) {
    return SpecialIdeal({}, Subspace(s.number_of_paths()));
  }

  SpecialIdeal whole_algebra(PathSemigroup const& s) {
    std::vector<Relation> gens;
    for (VertexIndex v = 0; v < s.quiver().number_of_vertices(); ++v) {
      gens.push_back(Relation::monomial(path_of(s.element_of_vertex(v))));
    }
    return generate_ideal(s, gens);
  }

  SpecialIdeal ideal_join(SpecialIdeal const& a, SpecialIdeal const& b) {
    return SpecialIdeal(merge_generators(a.generators(), b.generators()),
                        subspace_sum(a.space(), b.space()));
  }

  std::vector<Relation> relations_in(PathSemigroup const& s,
                                     Subspace const&      space) {
    std::vector<Relation> out;
    for (auto const& r : all_relations(s)) {
      if (membership(space, r.to_vector())) {
        out.push_back(r);
      }
    }
    return out;
  }

  SpecialIdeal ideal_meet(PathSemigroup const& s,
                          SpecialIdeal const&  a,
                          SpecialIdeal const&  b) {
    auto const common = subspace_intersection(a.space(), b.space());
    auto const rels   = relations_in(s, common);
    return generate_ideal(s, rels);
  }

  bool is_two_sided_ideal(PathSemigroup const& s, Subspace const& space) {
    auto const n = static_cast<ElementIndex>(s.size());
    for (auto const& w : space.basis()) {
      for (ElementIndex u = 1; u < n; ++u) {
        for (ElementIndex v = 1; v < n; ++v) {
          std::vector<PathVector::Entry> entries;
          for (auto const& [i, c] : w.entries()) {
            auto const x = triple(s, u, element_of(i), v);
            if (x != zero_element) {
              entries.emplace_back(path_of(x), c);
            }
          }
          if (!membership(space, PathVector(std::move(entries)))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<SpecialIdeal> enumerate_special_ideals(PathSemigroup const& s,
                                                     std::size_t element_cap) {
    if (s.size() > element_cap) {
      throw CapExceededError("semigroup size", s.size(), element_cap);
    }
    std::vector<SpecialIdeal> atoms;
    {
      std::unordered_set<SpecialIdeal, SpecialIdealHash> seen;
      for (auto const& r : all_relations(s)) {
        auto i = generate_ideal(s, std::span<Relation const>(&r, 1));
        if (seen.insert(i).second) {
          atoms.push_back(std::move(i));
        }
      }
    }

    std::unordered_set<SpecialIdeal, SpecialIdealHash> known;
    std::deque<SpecialIdeal>                           frontier;
    known.insert(zero_ideal(s));
    frontier.push_back(zero_ideal(s));
    while (!frontier.empty()) {
      auto i = std::move(frontier.front());
      frontier.pop_front();
      for (auto const& a : atoms) {
        if (a.is_contained_in(i)) {
          continue;
        }
        auto j = ideal_join(i, a);
        if (known.find(j) == known.end()) {
          known.insert(j);
          frontier.push_back(std::move(j));
        }
      }
    }
    std::vector<SpecialIdeal> result(known.begin(), known.end());
    std::sort(result.begin(), result.end(), [](auto const& x, auto const& y) {
      return x.space() < y.space();
    });
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // The correspondence with congruences
  ////////////////////////////////////////////////////////////////////////

  PathVector element_vector(ElementIndex x) {
    if (x == zero_element) {
      return PathVector();
    }
    return PathVector::unit(path_of(x));
  }

  SpecialIdeal congruence_to_ideal(PathSemigroup const& s, Congruence const& c) {
    if (c.size() != s.size()) {
      throw InvariantError("congruence does not belong to this semigroup");
    }
    std::vector<Relation> gens;
    auto const            zero_rep = c.representative(zero_element);
    for (auto const& block : c.blocks()) {
      if (block.front() == zero_rep) {
        for (auto x : block) {
          if (x != zero_element) {
            gens.push_back(Relation::monomial(path_of(x)));
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < block.size(); ++i) {
        for (std::size_t j = i + 1; j < block.size(); ++j) {
          gens.push_back(
              Relation::commutative(s, path_of(block[i]), path_of(block[j])));
        }
      }
    }
    return generate_ideal(s, gens);
  }

  Congruence ideal_to_congruence(PathSemigroup const& s, SpecialIdeal const& i) {
    if (i.space().ambient_dimension() != s.number_of_paths()) {
      throw InvariantError("ideal does not belong to this path algebra");
    }
    auto const               n = static_cast<ElementIndex>(s.size());
    std::vector<std::size_t> labels(n);
    for (ElementIndex x = 0; x < n; ++x) {
      labels[x] = x;
      for (ElementIndex y = 0; y < x; ++y) {
        auto diff = element_vector(x);
        diff.add_scaled(element_vector(y), -1);
        if (i.contains(diff)) {
          labels[x] = labels[y];
          break;
        }
      }
    }
    auto c = Congruence::from_labels(labels);
    if (!is_congruence(s, c)) {
      throw InvariantError("ideal does not induce a congruence");
    }
    return c;
  }

}  // namespace pathcong
