#include "pathcong/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "pathcong/error.hpp"
#include "pathcong/ideals.hpp"
#include "pathcong/quiver.hpp"
#include "pathcong/semigroup.hpp"
#include "pathcong/serialize.hpp"
#include "pathcong/theorems.hpp"

namespace pathcong {

  namespace {

    struct Options {
      std::string   file;
      std::string   dot_path;
      bool          json         = false;
      std::size_t   max_elements = default_element_cap;
      std::size_t   vertices     = 4;
      std::size_t   arrows       = 5;
      std::size_t   multiplicity = 3;
      std::size_t   trials       = 10;
      std::uint64_t seed         = 42;
    };

    Quiver load_quiver(std::string const& path) {
      std::ifstream in(path);
      if (!in) {
        throw DomainError("cannot read '" + path + "'");
      }
      std::ostringstream text;
      text << in.rdbuf();
      return parse_quiver(text.str());
    }

    PathSemigroup load_semigroup(Options const& o) {
      auto q = load_quiver(o.file);
      if (!is_acyclic(q)) {
        throw CyclicQuiverError();
      }
      return build_semigroup(std::move(q));
    }

    int cmd_validate(Options const& o, std::ostream& out) {
      auto const q = load_quiver(o.file);
      out << "ok: " << q.number_of_vertices() << " vertices, "
          << q.number_of_arrows() << " arrows, acyclic "
          << (is_acyclic(q) ? "yes" : "no") << "\n";
      return exit_ok;
    }

    int cmd_paths(Options const& o, std::ostream& out) {
      auto const q = load_quiver(o.file);
      for (auto const& p : enumerate_paths(q)) {
        out << path_name(q, p) << ": " << q.vertex(p.source) << " -> "
            << q.vertex(p.target) << ", length " << p.length() << "\n";
      }
      return exit_ok;
    }

    int cmd_congruences(Options const& o, std::ostream& out) {
      auto const s  = load_semigroup(o);
      auto const cs = enumerate_congruences(s, o.max_elements);
      if (o.json) {
        Json list = Json::array();
        for (auto const& c : cs) {
          list.push_back(to_json(s, c));
        }
        out << Json{{"count", cs.size()}, {"congruences", std::move(list)}}.dump(2)
            << "\n";
        return exit_ok;
      }
      out << cs.size() << " congruences\n";
      for (std::size_t k = 0; k < cs.size(); ++k) {
        out << k + 1 << ":";
        for (auto const& block : cs[k].blocks()) {
          out << " {";
          for (std::size_t i = 0; i < block.size(); ++i) {
            out << (i == 0 ? "" : ",") << s.name(block[i]);
          }
          out << "}";
        }
        out << (is_rees(cs[k]) ? " (Rees)" : "") << "\n";
      }
      return exit_ok;
    }

    int cmd_ideals(Options const& o, std::ostream& out) {
      auto const s      = load_semigroup(o);
      auto const ideals = enumerate_special_ideals(s, o.max_elements);
      if (o.json) {
        Json list = Json::array();
        for (auto const& i : ideals) {
          list.push_back(to_json(s, i));
        }
        out << Json{{"count", ideals.size()}, {"ideals", std::move(list)}}.dump(2)
            << "\n";
        return exit_ok;
      }
      out << ideals.size() << " special ideals\n";
      for (std::size_t k = 0; k < ideals.size(); ++k) {
        out << k + 1 << ": " << ideal_label(s, ideals[k]);
        auto const& gens = ideals[k].generators();
        if (!gens.empty()) {
          out << " generated by ";
          for (std::size_t g = 0; g < gens.size(); ++g) {
            out << (g == 0 ? "" : ", ") << relation_name(s, gens[g]);
          }
        }
        out << "\n";
      }
      return exit_ok;
    }

    int cmd_lattice(Options const& o, std::ostream& out) {
      auto const s     = load_semigroup(o);
      auto const cl    = congruence_lattice(s, o.max_elements);
      auto       props = compute_lattice_properties(cl.lattice);
      props.all_congruences_rees
          = std::all_of(cl.congruences.begin(), cl.congruences.end(), is_rees);
      if (!o.dot_path.empty()) {
        std::ofstream dot(o.dot_path);
        dot << to_dot(cl.lattice);
        if (!dot) {
          throw DomainError("cannot write '" + o.dot_path + "'");
        }
      }
      if (o.json) {
        out << to_json(cl.lattice, props).dump(2) << "\n";
        return exit_ok;
      }
      auto const& l = cl.lattice;
      out << l.size() << " elements, " << l.cover_pairs().size() << " covers\n";
      for (LatticeIndex a = 0; a < l.size(); ++a) {
        out << a << ": " << l.label(a) << "\n";
      }
      out << "covers:";
      for (auto [lo, hi] : l.cover_pairs()) {
        out << " " << lo << "<" << hi;
      }
      out << "\n";
      for (auto const& [name, value] : property_list(props)) {
        out << name << ": " << (value ? "yes" : "no") << "\n";
      }
      return exit_ok;
    }

    int cmd_check(Options const& o, std::ostream& out) {
      auto const report = check_theorems(load_quiver(o.file), o.max_elements);
      if (o.json) {
        out << to_json(report).dump(2) << "\n";
      } else {
        out << format_report(report);
      }
      return report.all_consistent() ? exit_ok : exit_violation;
    }

    int cmd_random_check(Options const& o, std::ostream& out) {
      RandomQuiverOptions ro;
      ro.min_vertices     = o.vertices;
      ro.max_vertices     = o.vertices;
      ro.max_arrows       = o.arrows;
      ro.max_multiplicity = o.multiplicity;
      ro.element_cap      = o.max_elements;
      RandomQuiverGenerator gen(o.seed, ro);
      std::size_t           violations = 0;
      for (std::size_t t = 1; t <= o.trials; ++t) {
        auto const q      = gen.next();
        auto const report = check_theorems(q, o.max_elements);
        out << "trial " << t << ": " << q.number_of_arrows() << " arrows, |S| = "
            << report.summary.semigroup_size << ", max parallel paths "
            << report.summary.max_parallel_paths << ", "
            << report.congruence_count << " congruences: ";
        if (report.all_consistent()) {
          out << "consistent\n";
          continue;
        }
        ++violations;
        out << "VIOLATION\n" << format_quiver(q) << format_report(report);
      }
      out << o.trials << " trials, " << violations << " violations\n";
      return violations == 0 ? exit_ok : exit_violation;
    }

  }  // namespace

  int run_cli(std::vector<std::string> const& args,
              std::ostream&                   out,
              std::ostream&                   err) {
    CLI::App app{"Congruence lattices of path semigroups of acyclic quivers",
                 "pathcong"};
    app.require_subcommand(1);
    Options o;

    auto add_file = [&o](CLI::App* sub) {
      sub->add_option("file", o.file, "Quiver description file")->required();
    };
    auto add_cap = [&o](CLI::App* sub) {
      sub->add_option("--max-elements",
                      o.max_elements,
                      "Largest semigroup (paths plus zero) to enumerate")
          ->capture_default_str()
          ->check(CLI::PositiveNumber);
    };

    auto* validate = app.add_subcommand("validate", "Parse and validate a quiver");
    add_file(validate);
    auto* paths = app.add_subcommand("paths", "List the paths of a quiver");
    add_file(paths);
    auto* congruences
        = app.add_subcommand("congruences", "Enumerate semigroup congruences");
    add_file(congruences);
    congruences->add_flag("--json", o.json, "Emit JSON");
    add_cap(congruences);
    auto* ideals = app.add_subcommand("ideals", "Enumerate special ideals");
    add_file(ideals);
    ideals->add_flag("--json", o.json, "Emit JSON");
    add_cap(ideals);
    auto* lattice = app.add_subcommand("lattice", "Build the congruence lattice");
    add_file(lattice);
    lattice->add_option("--dot", o.dot_path, "Write the Hasse diagram as DOT");
    lattice->add_flag("--json", o.json, "Emit JSON");
    add_cap(lattice);
    auto* check = app.add_subcommand("check", "Verify the structure theorems");
    add_file(check);
    check->add_flag("--json", o.json, "Emit JSON");
    add_cap(check);
    auto* random = app.add_subcommand(
        "random-check", "Verify the structure theorems on random quivers");
    random->add_option("--vertices", o.vertices, "Vertices per quiver")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    random->add_option("--arrows", o.arrows, "Largest number of arrows")
        ->capture_default_str();
    random->add_option("--multiplicity",
                       o.multiplicity,
                       "Largest number of arrows between two vertices")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    random->add_option("--seed", o.seed, "Random seed")->capture_default_str();
    random->add_option("--trials", o.trials, "Number of quivers")
        ->capture_default_str();
    add_cap(random);

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto const code = app.exit(e, out, err);
      return code == 0 ? exit_ok : exit_usage;
    }

    try {
      if (validate->parsed()) {
        return cmd_validate(o, out);
      }
      if (paths->parsed()) {
        return cmd_paths(o, out);
      }
      if (congruences->parsed()) {
        return cmd_congruences(o, out);
      }
      if (ideals->parsed()) {
        return cmd_ideals(o, out);
      }
      if (lattice->parsed()) {
        return cmd_lattice(o, out);
      }
      if (check->parsed()) {
        return cmd_check(o, out);
      }
      return cmd_random_check(o, out);
    } catch (DomainError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_domain;
    }
  }

}  // namespace pathcong
