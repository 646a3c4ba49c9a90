#include "pathcong/serialize.hpp"

#include <sstream>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    ElementIndex lookup_element(PathSemigroup const& s, std::string const& name) {
      auto x = s.find(name);
      if (!x) {
        throw DomainError("unknown element '" + name + "'");
      }
      return *x;
    }

    std::string dot_escape(std::string const& text) {
      std::string out;
      for (char c : text) {
        if (c == '"' || c == '\\') {
          out += '\\';
        }
        out += c;
      }
      return out;
    }

    std::string mark(bool b) {
      return b ? "yes" : "no";
    }

  }  // namespace

  Json to_json(PathSemigroup const& s, Congruence const& c) {
    Json blocks = Json::array();
    for (auto const& block : c.blocks()) {
      Json names = Json::array();
      for (auto x : block) {
        names.push_back(s.name(x));
      }
      blocks.push_back(std::move(names));
    }
    return Json{{"blocks", std::move(blocks)}};
  }

  Json to_json(PathSemigroup const& s, PathVector const& v) {
    Json out = Json::object();
    for (auto const& [i, c] : v.entries()) {
      out[s.name(static_cast<ElementIndex>(i + 1))] = format_rational(c);
    }
    return out;
  }

  Json to_json(PathSemigroup const& s, SpecialIdeal const& i) {
    Json gens = Json::array();
    for (auto const& r : i.generators()) {
      gens.push_back(relation_name(s, r));
    }
    Json basis = Json::array();
    for (auto const& v : i.space().basis()) {
      basis.push_back(to_json(s, v));
    }
    return Json{{"generators", std::move(gens)}, {"basis", std::move(basis)}};
  }

  Json to_json(LatticeProperties const& p) {
    Json out = Json::object();
    for (auto const& [name, value] : property_list(p)) {
      out[name] = value;
    }
    return out;
  }

  Json to_json(FiniteLattice const& l, LatticeProperties const& p) {
    Json covers = Json::array();
    for (auto [lo, hi] : l.cover_pairs()) {
      covers.push_back(Json::array({lo, hi}));
    }
    return Json{{"elements", l.labels()},
                {"covers", std::move(covers)},
                {"properties", to_json(p)}};
  }

  Json to_json(TheoremReport const& r) {
    Json verdicts = Json::array();
    for (auto const& v : r.verdicts) {
      verdicts.push_back(Json{{"check", v.name},
                              {"consistent", v.consistent},
                              {"detail", v.detail}});
    }
    Json out{{"summary",
              {{"vertices", r.summary.vertices},
               {"arrows", r.summary.arrows},
               {"paths", r.summary.paths},
               {"semigroup_size", r.summary.semigroup_size},
               {"max_parallel_paths", r.summary.max_parallel_paths},
               {"components", r.summary.components},
               {"is_tree", r.summary.is_tree}}},
             {"congruences", r.congruence_count},
             {"special_ideals", r.ideal_count},
             {"covers", r.cover_count},
             {"predicted", to_json(r.predicted)},
             {"computed", to_json(r.computed)},
             {"verdicts", std::move(verdicts)},
             {"consistent", r.all_consistent()}};
    if (r.lower_semimodular_witness) {
      out["lower_semimodular_witness"] = Json::array(
          {r.lower_semimodular_witness->first, r.lower_semimodular_witness->second});
    }
    if (r.pentagon) {
      out["pentagon"] = *r.pentagon;
    }
    if (r.diamond) {
      out["diamond"] = *r.diamond;
    }
    return out;
  }

  Congruence congruence_from_json(PathSemigroup const& s, Json const& j) {
    if (!j.is_object() || !j.contains("blocks") || !j["blocks"].is_array()) {
      throw DomainError("congruence JSON needs a \"blocks\" array");
    }
    std::vector<std::vector<ElementIndex>> blocks;
    for (auto const& block : j["blocks"]) {
      auto& out = blocks.emplace_back();
      for (auto const& name : block) {
        out.push_back(lookup_element(s, name.get<std::string>()));
      }
    }
    return Congruence::from_blocks(s.size(), blocks);
  }

  PathVector path_vector_from_json(PathSemigroup const& s, Json const& j) {
    if (!j.is_object()) {
      throw DomainError("path vector JSON must be an object");
    }
    std::vector<PathVector::Entry> entries;
    for (auto const& [name, value] : j.items()) {
      auto const x = lookup_element(s, name);
      if (x == zero_element) {
        throw DomainError("the zero element has no coordinate");
      }
      entries.emplace_back(x - 1, parse_rational(value.get<std::string>()));
    }
    return PathVector(std::move(entries));
  }

  std::string to_dot(FiniteLattice const& l) {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
    for (LatticeIndex a = 0; a < l.size(); ++a) {
      out << "  n" << a << " [label=\"" << dot_escape(l.label(a)) << "\"];\n";
    }
    for (auto [lo, hi] : l.cover_pairs()) {
      out << "  n" << lo << " -> n" << hi << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  std::string format_report(TheoremReport const& r) {
    std::ostringstream out;
    auto const&        q = r.summary;
    out << "quiver: " << q.vertices << " vertices, " << q.arrows << " arrows, "
        << q.paths << " paths, |S| = " << q.semigroup_size
        << ", max parallel paths " << q.max_parallel_paths << ", "
        << q.components << (q.components == 1 ? " component" : " components")
        << ", tree " << mark(q.is_tree) << "\n";
    out << "congruences: " << r.congruence_count
        << ", special ideals: " << r.ideal_count
        << ", covers: " << r.cover_count << "\n";
    out << "property                   predicted  computed\n";
    auto const predicted = property_list(r.predicted);
    auto const computed  = property_list(r.computed);
    for (std::size_t k = 0; k < predicted.size(); ++k) {
      auto name = predicted[k].first;
      name.resize(27, ' ');
      auto p = mark(predicted[k].second);
      p.resize(11, ' ');
      out << name << p << mark(computed[k].second) << "\n";
    }
    if (r.lower_semimodular_witness) {
      out << "lower semimodularity fails at: "
          << r.lower_semimodular_witness->first << " ; "
          << r.lower_semimodular_witness->second << "\n";
    }
    auto const quintet = [&out](char const* what,
                                std::vector<std::string> const& labels) {
      out << what << ":";
      for (auto const& l : labels) {
        out << " [" << l << "]";
      }
      out << "\n";
    };
    if (r.pentagon) {
      quintet("pentagon", *r.pentagon);
    }
    if (r.diamond) {
      quintet("diamond", *r.diamond);
    }
    for (auto const& v : r.verdicts) {
      out << "check " << v.name << ": "
          << (v.consistent ? "consistent" : "VIOLATION") << " (" << v.detail
          << ")\n";
    }
    return out.str();
  }

}  // namespace pathcong
