// Fixtures and independent oracles shared by the unit and acceptance tests.
// Nothing here calls the library routine it is used to check.
#ifndef PATHCONG_TESTS_SUPPORT_HPP_
#define PATHCONG_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pathcong/ideals.hpp"
#include "pathcong/linalg.hpp"
#include "pathcong/quiver.hpp"
#include "pathcong/semigroup.hpp"

namespace pathcong::testing {

  // 1 --alpha--> 2
  inline Quiver single_arrow() {
    return Quiver({"1", "2"}, {{"alpha", "1", "2"}});
  }

  // 1 ==alpha,beta==> 2
  inline Quiver kronecker() {
    return Quiver({"1", "2"}, {{"alpha", "1", "2"}, {"beta", "1", "2"}});
  }

  // Three parallel arrows 1 -> 2.
  inline Quiver triple_arrow() {
    return Quiver({"1", "2"},
                  {{"alpha", "1", "2"}, {"beta", "1", "2"}, {"gamma", "1", "2"}});
  }

  // 1 --a--> 2 --b--> 3
  inline Quiver chain3() {
    return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}});
  }

  inline PathIndex path_index(PathSemigroup const& s, std::string const& name) {
    auto x = s.find(name);
    if (!x || *x == zero_element) {
      throw std::invalid_argument("no path named " + name);
    }
    return *x - 1;
  }

  // vec(s, {{"alpha", 1}, {"beta", -1}}) is alpha - beta.
  inline PathVector vec(PathSemigroup const&                               s,
                        std::initializer_list<std::pair<char const*, int>> terms) {
    std::vector<PathVector::Entry> entries;
    for (auto const& [name, c] : terms) {
      entries.emplace_back(path_index(s, name), Rational(c));
    }
    return PathVector(std::move(entries));
  }

  inline Subspace span(PathSemigroup const& s, std::vector<PathVector> const& vs) {
    return row_reduce(vs, s.number_of_paths());
  }

  inline Relation mono(PathSemigroup const& s, std::string const& p) {
    return Relation::monomial(path_index(s, p));
  }

  inline Relation comm(PathSemigroup const& s,
                       std::string const&   p,
                       std::string const&   q) {
    return Relation::commutative(s, path_index(s, p), path_index(s, q));
  }

  inline SpecialIdeal ideal(PathSemigroup const& s, std::vector<Relation> gens) {
    return generate_ideal(s, gens);
  }

  // Congruence given by its nontrivial blocks, written with element names.
  inline Congruence
  congruence(PathSemigroup const&                         s,
             std::vector<std::vector<std::string>> const& named_blocks) {
    std::vector<std::vector<ElementIndex>> blocks;
    for (auto const& nb : named_blocks) {
      auto& b = blocks.emplace_back();
      for (auto const& name : nb) {
        b.push_back(*s.find(name));
      }
    }
    return Congruence::from_blocks(s.size(), blocks);
  }

  ////////////////////////////////////////////////////////////////////////
  // Oracles
  ////////////////////////////////////////////////////////////////////////

  //! Every composable word over the arrows, generated by brute force over
  //! all words of each length (an acyclic quiver has no path longer than
  //! the number of vertices minus one).  Words are arrow-name sequences;
  //! trivial paths are {vertex id}.
  inline std::set<std::vector<std::string>> brute_force_path_words(Quiver const& q) {
    std::set<std::vector<std::string>> out;
    for (auto const& v : q.vertices()) {
      out.insert({"@" + v});
    }
    auto const m = q.number_of_arrows();
    for (std::size_t len = 1; len < q.number_of_vertices() && m > 0; ++len) {
      std::vector<std::size_t> word(len, 0);
      while (true) {
        bool composable = true;
        for (std::size_t i = 0; i + 1 < len; ++i) {
          composable = composable
                       && q.arrow(word[i]).target == q.arrow(word[i + 1]).source;
        }
        if (composable) {
          std::vector<std::string> names;
          for (auto a : word) {
            names.push_back(q.arrow(a).name);
          }
          out.insert(names);
        }
        std::size_t i = 0;
        while (i < len && ++word[i] == m) {
          word[i++] = 0;
        }
        if (i == len) {
          break;
        }
      }
    }
    return out;
  }

  //! Rank by fraction-free Bareiss elimination on a dense integer matrix.
  //! Inputs must have integer coefficients.
  inline std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
    std::size_t rank = 0;
    if (m.empty()) {
      return 0;
    }
    auto const cols = m.front().size();
    mpz_class  prev = 1;
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
      auto pivot = rank;
      while (pivot < m.size() && m[pivot][col] == 0) {
        ++pivot;
      }
      if (pivot == m.size()) {
        continue;
      }
      std::swap(m[pivot], m[rank]);
      for (auto r = rank + 1; r < m.size(); ++r) {
        for (auto c = col + 1; c < cols; ++c) {
          m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
        }
        m[r][col] = 0;
      }
      prev = m[rank][col];
      ++rank;
    }
    return rank;
  }

  inline std::vector<mpz_class> dense_integer_row(PathVector const& v,
                                                  std::size_t       dim) {
    std::vector<mpz_class> row(dim, 0);
    for (auto const& [i, c] : v.entries()) {
      if (c.get_den() != 1) {
        throw std::invalid_argument("dense_integer_row needs integer entries");
      }
      row.at(i) = c.get_num();
    }
    return row;
  }

  inline std::size_t oracle_rank(std::vector<PathVector> const& vs,
                                 std::size_t                    dim) {
    std::vector<std::vector<mpz_class>> m;
    for (auto const& v : vs) {
      m.push_back(dense_integer_row(v, dim));
    }
    return bareiss_rank(std::move(m));
  }

  // Random integer vectors, each coordinate nonzero with probability about
  // one half and bounded by \p bound in absolute value.
  inline std::vector<PathVector> random_integer_vectors(std::mt19937_64& rng,
                                                        std::size_t      count,
                                                        std::size_t      dim,
                                                        int              bound) {
    std::vector<PathVector> out;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<PathVector::Entry> entries;
      for (std::size_t i = 0; i < dim; ++i) {
        if (rng() % 2 == 0) {
          auto const c = static_cast<int>(rng() % (2 * bound + 1)) - bound;
          entries.emplace_back(i, Rational(c));
        }
      }
      out.emplace_back(std::move(entries));
    }
    return out;
  }

}  // namespace pathcong::testing

#endif  // PATHCONG_TESTS_SUPPORT_HPP_
