#include "pathcong/theorems.hpp"

#include <algorithm>
#include <unordered_map>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    using Bits = std::vector<std::uint64_t>;

    bool is_subset(Bits const& a, Bits const& b) {
      for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & ~b[w]) != 0) {
          return false;
        }
      }
      return true;
    }

    void set_bit(Bits& bits, std::size_t i) {
      bits[i / 64] |= std::uint64_t{1} << (i % 64);
    }

    Bits pivot_bits(Subspace const& s) {
      Bits bits((s.ambient_dimension() + 63) / 64 + 1, 0);
      for (auto p : s.pivots()) {
        set_bit(bits, p);
      }
      return bits;
    }

    std::vector<std::string> labels_of(auto const& items, auto const& label) {
      std::vector<std::string> out;
      out.reserve(items.size());
      for (auto const& x : items) {
        out.push_back(label(x));
      }
      return out;
    }

    std::string join_names(std::vector<std::string> const& names,
                           std::string const&              sep) {
      std::string out;
      for (std::size_t i = 0; i < names.size(); ++i) {
        out += (i == 0 ? "" : sep) + names[i];
      }
      return out;
    }

    std::vector<std::string> quintet_labels(FiniteLattice const& l,
                                            Quintet const&       q) {
      std::vector<std::string> out;
      for (auto x : q) {
        out.push_back(l.label(x));
      }
      return out;
    }

    Verdict verdict(std::string name, std::vector<std::string> const& problems) {
      Verdict v{std::move(name), problems.empty(), {}};
      v.detail = problems.empty() ? "ok" : join_names(problems, "; ");
      return v;
    }

    std::string yes_no(bool b) {
      return b ? "yes" : "no";
    }

    Verdict check_bijection(PathSemigroup const&     s,
                            CongruenceLattice const& cl,
                            IdealLattice const&      il) {
      std::vector<std::string> problems;
      if (cl.congruences.size() != il.ideals.size()) {
        problems.push_back(std::to_string(cl.congruences.size())
                           + " congruences but "
                           + std::to_string(il.ideals.size()) + " ideals");
        return verdict("bijection", problems);
      }
      std::unordered_map<SpecialIdeal, LatticeIndex, SpecialIdealHash> ideal_index;
      for (LatticeIndex i = 0; i < il.ideals.size(); ++i) {
        ideal_index.emplace(il.ideals[i], i);
      }
      std::vector<LatticeIndex> phi;
      for (auto const& c : cl.congruences) {
        auto const ideal = congruence_to_ideal(s, c);
        if (ideal_to_congruence(s, ideal) != c) {
          problems.push_back("congruence " + congruence_label(s, c)
                             + " does not round-trip");
        }
        auto it = ideal_index.find(ideal);
        if (it == ideal_index.end()) {
          problems.push_back("image of " + congruence_label(s, c)
                             + " is not an enumerated ideal");
          return verdict("bijection", problems);
        }
        phi.push_back(it->second);
      }
      for (auto const& i : il.ideals) {
        auto const c = ideal_to_congruence(s, i);
        if (!(congruence_to_ideal(s, c) == i)) {
          problems.push_back("ideal " + ideal_label(s, i)
                             + " does not round-trip");
        }
      }
      if (!is_order_isomorphism(cl.lattice, il.lattice, phi)) {
        problems.push_back("correspondence is not an order isomorphism");
      }
      return verdict("bijection", problems);
    }

    Verdict check_properties(LatticeProperties const& predicted,
                             LatticeProperties const& computed) {
      std::vector<std::string> problems;
      auto const               p = property_list(predicted);
      auto const               c = property_list(computed);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].second != c[k].second) {
          problems.push_back(p[k].first + " predicted " + yes_no(p[k].second)
                             + ", computed " + yes_no(c[k].second));
        }
      }
      return verdict("properties", problems);
    }

    Verdict check_rees(QuiverSummary const& summary, bool all_rees) {
      std::vector<std::string> problems;
      if (all_rees != (summary.max_parallel_paths <= 1)) {
        problems.push_back("all congruences Rees: " + yes_no(all_rees)
                           + ", max parallel paths "
                           + std::to_string(summary.max_parallel_paths));
      }
      return verdict("rees", problems);
    }

    Verdict check_components(Quiver const&            q,
                             LatticeProperties const& whole,
                             std::size_t              element_cap) {
      std::vector<std::string> problems;
      auto const               parts = connected_components(q);
      bool                     all_modular = true;
      bool                     all_distributive = true;
      if (parts.size() > 1) {
        for (auto const& part : parts) {
          auto const s  = build_semigroup(part);
          auto const cl = congruence_lattice(s, element_cap);
          all_modular      = all_modular && is_modular(cl.lattice);
          all_distributive = all_distributive && is_distributive(cl.lattice);
        }
      } else {
        all_modular      = whole.modular;
        all_distributive = whole.distributive;
      }
      if (all_modular != whole.modular) {
        problems.push_back("modular: whole " + yes_no(whole.modular)
                           + ", every component " + yes_no(all_modular));
      }
      if (all_distributive != whole.distributive) {
        problems.push_back("distributive: whole " + yes_no(whole.distributive)
                           + ", every component " + yes_no(all_distributive));
      }
      return verdict("components", problems);
    }

    Verdict check_covering(PathSemigroup const& s, IdealLattice const& il) {
      std::vector<std::string> problems;
      auto const               relations = all_relations(s);
      for (auto [lo, hi] : il.lattice.cover_pairs()) {
        auto const& lower = il.ideals[lo];
        auto const& upper = il.ideals[hi];
        if (upper.dimension() != lower.dimension() + 1) {
          problems.push_back("cover " + ideal_label(s, lower) + " < "
                             + ideal_label(s, upper)
                             + " does not raise the dimension by one");
          continue;
        }
        for (auto const& x : relations) {
          auto const v = x.to_vector();
          if (!upper.contains(v) || lower.contains(v)) {
            continue;
          }
          auto extended = lower.space();
          extended.insert(v);
          auto gens = lower.generators();
          gens.push_back(x);
          if (!(extended == upper.space())
              || !(generate_ideal(s, gens) == upper)) {
            problems.push_back("relation " + relation_name(s, x)
                               + " does not regenerate "
                               + ideal_label(s, upper) + " from "
                               + ideal_label(s, lower));
          }
        }
      }
      return verdict("covering", problems);
    }

    Verdict check_sublattices(FiniteLattice const&     l,
                              LatticeProperties const& computed) {
      std::vector<std::string> problems;
      auto const               pentagon = search_pentagon_exhaustive(l);
      auto const               diamond  = search_diamond_exhaustive(l);
      if (computed.modular != !pentagon) {
        problems.push_back("modular " + yes_no(computed.modular)
                           + " but pentagon " + (pentagon ? "found" : "absent"));
      }
      if (computed.distributive != (!pentagon && !diamond)) {
        problems.push_back("distributive " + yes_no(computed.distributive)
                           + " disagrees with the forbidden sublattice search");
      }
      if (pentagon && !is_pentagon(l, *pentagon)) {
        problems.push_back("pentagon witness fails its tables");
      }
      if (diamond && !is_diamond(l, *diamond)) {
        problems.push_back("diamond witness fails its tables");
      }
      return verdict("sublattices", problems);
    }

  }  // namespace

  std::vector<std::pair<std::string, bool>>
  property_list(LatticeProperties const& p) {
    return {{"distributive", p.distributive},
            {"modular", p.modular},
            {"upper_semimodular", p.upper_semimodular},
            {"lower_semimodular", p.lower_semimodular},
            {"strong_upper_semimodular", p.strong_upper_semimodular},
            {"strong_lower_semimodular", p.strong_lower_semimodular},
            {"all_congruences_rees", p.all_congruences_rees}};
  }

  LatticeProperties predict_properties(Quiver const& q) {
    if (!is_acyclic(q)) {
      throw CyclicQuiverError();
    }
    auto const        parallel = max_parallel_paths(q);
    LatticeProperties p;
    p.strong_upper_semimodular = true;
    p.upper_semimodular        = true;
    p.modular                  = parallel <= 2;
    p.lower_semimodular        = p.modular;
    p.strong_lower_semimodular = p.modular;
    p.distributive             = parallel <= 1;
    p.all_congruences_rees     = p.distributive;
    if (underlying_graph_is_tree(q)) {
      p.distributive = true;
    }
    return p;
  }

  LatticeProperties compute_lattice_properties(FiniteLattice const& l) {
    LatticeProperties p;
    p.distributive             = is_distributive(l);
    p.modular                  = is_modular(l);
    p.upper_semimodular        = is_upper_semimodular(l);
    p.lower_semimodular        = is_lower_semimodular(l);
    p.strong_upper_semimodular = is_strong_upper_semimodular(l);
    p.strong_lower_semimodular = is_strong_lower_semimodular(l);
    return p;
  }

  std::string congruence_label(PathSemigroup const& s, Congruence const& c) {
    std::vector<std::string> parts;
    for (auto const& block : c.blocks()) {
      if (block.size() < 2) {
        continue;
      }
      std::vector<std::string> names;
      for (auto x : block) {
        names.push_back(s.name(x));
      }
      parts.push_back("{" + join_names(names, ",") + "}");
    }
    return parts.empty() ? "identity" : join_names(parts, " ");
  }

  std::string format_path_vector(PathSemigroup const& s, PathVector const& v) {
    if (v.is_zero()) {
      return "0";
    }
    std::string out;
    bool        first = true;
    for (auto const& [i, c] : v.entries()) {
      auto const name = s.name(static_cast<ElementIndex>(i + 1));
      Rational   magnitude = abs(c);
      if (first) {
        out += sgn(c) < 0 ? "-" : "";
      } else {
        out += sgn(c) < 0 ? " - " : " + ";
      }
      if (magnitude != 1) {
        out += magnitude.get_str() + "*";
      }
      out += name;
      first = false;
    }
    return out;
  }

  std::string ideal_label(PathSemigroup const& s, SpecialIdeal const& i) {
    std::vector<std::string> parts;
    for (auto const& v : i.space().basis()) {
      parts.push_back(format_path_vector(s, v));
    }
    return "span{" + join_names(parts, ", ") + "}";
  }

  CongruenceLattice congruence_lattice(PathSemigroup const& s,
                                       std::size_t          element_cap) {
    auto congruences = enumerate_congruences(s, element_cap);
    std::unordered_map<Congruence, LatticeIndex, CongruenceHash> index;
    for (LatticeIndex i = 0; i < congruences.size(); ++i) {
      index.emplace(congruences[i], i);
    }
    auto const lookup = [&index](Congruence const& c) {
      auto it = index.find(c);
      if (it == index.end()) {
        throw InvariantError("congruences are not closed under join and meet");
      }
      return it->second;
    };
    auto lattice = build_lattice(
        congruences.size(),
        [&](LatticeIndex a, LatticeIndex b) {
          return congruences[a].is_contained_in(congruences[b]);
        },
        [&](LatticeIndex a, LatticeIndex b) {
          return lookup(join_congruences(s, congruences[a], congruences[b]));
        },
        [&](LatticeIndex a, LatticeIndex b) {
          return lookup(meet_congruences(congruences[a], congruences[b]));
        },
        labels_of(congruences,
                  [&s](Congruence const& c) { return congruence_label(s, c); }));
    return {std::move(congruences), std::move(lattice)};
  }

  IdealLattice ideal_lattice(PathSemigroup const& s, std::size_t element_cap) {
    auto ideals = enumerate_special_ideals(s, element_cap);
    std::unordered_map<SpecialIdeal, LatticeIndex, SpecialIdealHash> index;
    std::vector<Bits>                                                pivots;
    for (LatticeIndex i = 0; i < ideals.size(); ++i) {
      index.emplace(ideals[i], i);
      pivots.push_back(pivot_bits(ideals[i].space()));
    }
    auto const lookup = [&index](SpecialIdeal const& i) {
      auto it = index.find(i);
      if (it == index.end()) {
        throw InvariantError("special ideals are not closed under join and meet");
      }
      return it->second;
    };
    auto lattice = build_lattice(
        ideals.size(),
        [&](LatticeIndex a, LatticeIndex b) {
          // A subspace's pivot set grows with the subspace.
          return ideals[a].dimension() <= ideals[b].dimension()
                 && is_subset(pivots[a], pivots[b])
                 && ideals[a].is_contained_in(ideals[b]);
        },
        [&](LatticeIndex a, LatticeIndex b) {
          return lookup(ideal_join(ideals[a], ideals[b]));
        },
        [&](LatticeIndex a, LatticeIndex b) {
          return lookup(ideal_meet(s, ideals[a], ideals[b]));
        },
        labels_of(ideals,
                  [&s](SpecialIdeal const& i) { return ideal_label(s, i); }));
    return {std::move(ideals), std::move(lattice)};
  }

  bool TheoremReport::all_consistent() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](Verdict const& v) {
      return v.consistent;
    });
  }

  TheoremReport check_theorems(Quiver const& q, std::size_t element_cap) {
    if (!is_acyclic(q)) {
      throw CyclicQuiverError();
    }
    auto const s = build_semigroup(q);
    if (s.size() > element_cap) {
      throw CapExceededError("semigroup size", s.size(), element_cap);
    }

    TheoremReport report;
    report.summary = {q.number_of_vertices(),
                      q.number_of_arrows(),
                      s.number_of_paths(),
                      s.size(),
                      max_parallel_paths(q),
                      connected_components(q).size(),
                      underlying_graph_is_tree(q)};
    report.predicted = predict_properties(q);

    auto const cl = congruence_lattice(s, element_cap);
    auto const il = ideal_lattice(s, element_cap);
    report.congruence_count = cl.congruences.size();
    report.ideal_count      = il.ideals.size();
    report.cover_count      = cl.lattice.cover_pairs().size();

    report.computed = compute_lattice_properties(cl.lattice);
    report.computed.all_congruences_rees
        = std::all_of(cl.congruences.begin(), cl.congruences.end(), is_rees);

    if (auto w = find_lower_semimodularity_violation(cl.lattice)) {
      report.lower_semimodular_witness
          = {cl.lattice.label(w->first), cl.lattice.label(w->second)};
    }
    if (auto p = find_pentagon(cl.lattice)) {
      report.pentagon = quintet_labels(cl.lattice, *p);
    }
    if (auto d = find_diamond(cl.lattice)) {
      report.diamond = quintet_labels(cl.lattice, *d);
    }

    report.verdicts.push_back(check_bijection(s, cl, il));
    report.verdicts.push_back(check_properties(report.predicted, report.computed));
    report.verdicts.push_back(
        check_rees(report.summary, report.computed.all_congruences_rees));
    report.verdicts.push_back(check_components(q, report.computed, element_cap));
    report.verdicts.push_back(check_covering(s, il));
    report.verdicts.push_back(check_sublattices(cl.lattice, report.computed));
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random quivers
  ////////////////////////////////////////////////////////////////////////

  RandomQuiverGenerator::RandomQuiverGenerator(std::uint64_t       seed,
                                               RandomQuiverOptions options)
      : _rng(seed), _options(options) {
    if (_options.min_vertices == 0
        || _options.min_vertices > _options.max_vertices) {
      throw DomainError("random quivers need 1 <= min vertices <= max vertices");
    }
    if (_options.max_multiplicity == 0) {
      throw DomainError("random quivers need a positive multiplicity bound");
    }
  }

  std::uint64_t RandomQuiverGenerator::uniform(std::uint64_t bound) {
    // Modulo keeps the stream identical across standard libraries.
    return _rng() % bound;
  }

  Quiver RandomQuiverGenerator::next() {
    while (true) {
      auto const n = _options.min_vertices
                     + uniform(_options.max_vertices - _options.min_vertices + 1);
      auto const m = uniform(_options.max_arrows + 1);
      std::vector<std::string> vertices;
      for (std::size_t v = 1; v <= n; ++v) {
        vertices.push_back(std::to_string(v));
      }
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          slots.emplace_back(i, j);
        }
      }
      std::vector<std::size_t> used(slots.size(), 0);
      std::vector<ArrowSpec>   arrows;
      for (std::size_t k = 0; k < m && !slots.empty(); ++k) {
        auto const slot = uniform(slots.size());
        if (used[slot] == _options.max_multiplicity) {
          continue;
        }
        ++used[slot];
        arrows.push_back({"a" + std::to_string(arrows.size() + 1),
                          vertices[slots[slot].first],
                          vertices[slots[slot].second]});
      }
      Quiver q(std::move(vertices), std::move(arrows));
      if (enumerate_paths(q).size() + 1 <= _options.element_cap) {
        return q;
      }
    }
  }

  std::vector<Quiver> random_quiver_suite(std::uint64_t              seed,
                                          std::size_t                count,
                                          RandomQuiverOptions const& options) {
    RandomQuiverGenerator gen(seed, options);
    std::vector<Quiver>   out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      out.push_back(gen.next());
    }
    return out;
  }

}  // namespace pathcong
