#include "pathcong/lattice.hpp"

#include <algorithm>
#include <bit>

namespace pathcong {

  namespace {

    using Bits = std::vector<std::uint64_t>;

    struct BitMatrix {
      BitMatrix(std::size_t n_, std::size_t words_)
          : n(n_), words(words_), data(n_ * words_, 0) {}

      void set(std::size_t r, std::size_t c) {
        data[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
      }
      bool test(std::size_t r, std::size_t c) const {
        return (data[r * words + c / 64] >> (c % 64)) & 1u;
      }
      std::uint64_t const* row(std::size_t r) const {
        return data.data() + r * words;
      }
      std::uint64_t* row(std::size_t r) {
        return data.data() + r * words;
      }

      std::size_t n;
      std::size_t words;
      Bits        data;
    };

    bool rows_equal_and(std::uint64_t const* target,
                        std::uint64_t const* x,
                        std::uint64_t const* y,
                        std::size_t          words) {
      for (std::size_t w = 0; w < words; ++w) {
        if (target[w] != (x[w] & y[w])) {
          return false;
        }
      }
      return true;
    }

    // First index set in (x & ~y), or words*64 if none.
    std::size_t first_in_difference(std::uint64_t const* x,
                                    std::uint64_t const* y,
                                    std::size_t          words) {
      for (std::size_t w = 0; w < words; ++w) {
        auto const d = x[w] & ~y[w];
        if (d != 0) {
          return w * 64 + static_cast<std::size_t>(std::countr_zero(d));
        }
      }
      return words * 64;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Construction
  ////////////////////////////////////////////////////////////////////////

  FiniteLattice build_lattice(
      std::size_t                                                    n,
      std::function<bool(LatticeIndex, LatticeIndex)> const&         leq,
      std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const& join,
      std::function<LatticeIndex(LatticeIndex, LatticeIndex)> const& meet,
      std::vector<std::string>                                       labels) {
    if (n == 0) {
      throw LatticeAxiomError("a lattice needs at least one element", 0, 0);
    }
    FiniteLattice l;
    l._n     = n;
    l._words = (n + 63) / 64;
    auto const words = l._words;
    auto const N     = static_cast<LatticeIndex>(n);

    BitMatrix up(n, words);
    BitMatrix down(n, words);
    for (LatticeIndex a = 0; a < N; ++a) {
      for (LatticeIndex b = 0; b < N; ++b) {
        if (leq(a, b)) {
          up.set(a, b);
          down.set(b, a);
        }
      }
    }

    for (LatticeIndex a = 0; a < N; ++a) {
      if (!up.test(a, a)) {
        throw LatticeAxiomError("order is not reflexive", a, a);
      }
      for (LatticeIndex b = a + 1; b < N; ++b) {
        if (up.test(a, b) && up.test(b, a)) {
          throw LatticeAxiomError("order is not antisymmetric", a, b);
        }
      }
    }
    for (LatticeIndex a = 0; a < N; ++a) {
      for (LatticeIndex b = 0; b < N; ++b) {
        if (a == b || !up.test(a, b)) {
          continue;
        }
        auto const c = first_in_difference(up.row(b), up.row(a), words);
        if (c < n) {
          throw LatticeAxiomError("order is not transitive",
                                  a,
                                  static_cast<LatticeIndex>(c));
        }
      }
    }

    l._join.assign(n * n, 0);
    l._meet.assign(n * n, 0);
    for (LatticeIndex a = 0; a < N; ++a) {
      for (LatticeIndex b = a; b < N; ++b) {
        auto const j = join(a, b);
        if (j >= N
            || !rows_equal_and(up.row(j), up.row(a), up.row(b), words)) {
          throw LatticeAxiomError("join is not the least upper bound", a, b);
        }
        auto const m = meet(a, b);
        if (m >= N
            || !rows_equal_and(down.row(m), down.row(a), down.row(b), words)) {
          throw LatticeAxiomError("meet is not the greatest lower bound", a, b);
        }
        l._join[a * n + b] = l._join[b * n + a] = j;
        l._meet[a * n + b] = l._meet[b * n + a] = m;
      }
    }
    for (LatticeIndex a = 0; a < N; ++a) {
      for (LatticeIndex b = 0; b < N; ++b) {
        if (l.meet(a, l.join(a, b)) != a || l.join(a, l.meet(a, b)) != a) {
          throw LatticeAxiomError("absorption fails", a, b);
        }
      }
    }

    LatticeIndex bottom = 0;
    LatticeIndex top    = 0;
    for (LatticeIndex a = 1; a < N; ++a) {
      bottom = l.meet(bottom, a);
      top    = l.join(top, a);
    }
    for (LatticeIndex a = 0; a < N; ++a) {
      if (!up.test(bottom, a) || !up.test(a, top)) {
        throw LatticeAxiomError("no bottom or top element", bottom, top);
      }
    }
    l._bottom = bottom;
    l._top    = top;

    // Transitive reduction: the covers of a are the minimal elements of its
    // strict up-set.
    BitMatrix cover(n, words);
    Bits      above(words);
    for (LatticeIndex a = 0; a < N; ++a) {
      // Union of the strict up-sets of every c > a.
      std::fill(above.begin(), above.end(), 0);
      for (LatticeIndex c = 0; c < N; ++c) {
        if (c == a || !up.test(a, c)) {
          continue;
        }
        auto const* row = up.row(c);
        for (std::size_t w = 0; w < words; ++w) {
          auto bits = row[w];
          if (w == c / 64) {
            bits &= ~(std::uint64_t{1} << (c % 64));
          }
          above[w] |= bits;
        }
      }
      for (LatticeIndex b = 0; b < N; ++b) {
        if (b != a && up.test(a, b) && !((above[b / 64] >> (b % 64)) & 1u)) {
          cover.set(a, b);
          l._covers.emplace_back(a, b);
        }
      }
    }

    l._up    = std::move(up.data);
    l._cover = std::move(cover.data);

    labels.resize(n);
    for (LatticeIndex a = 0; a < N; ++a) {
      if (labels[a].empty()) {
        labels[a] = std::to_string(a);
      }
    }
    l._labels = std::move(labels);
    return l;
  }

  FiniteLattice
  lattice_from_order(std::size_t                                            n,
                     std::function<bool(LatticeIndex, LatticeIndex)> const& leq,
                     std::vector<std::string> labels) {
    auto const N = static_cast<LatticeIndex>(n);
    // Least upper bound by scanning; fails loudly if it does not exist.
    auto const bound = [&](LatticeIndex a, LatticeIndex b, bool upper) {
      std::vector<LatticeIndex> candidates;
      for (LatticeIndex c = 0; c < N; ++c) {
        if (upper ? (leq(a, c) && leq(b, c)) : (leq(c, a) && leq(c, b))) {
          candidates.push_back(c);
        }
      }
      for (auto c : candidates) {
        bool const extreme
            = std::all_of(candidates.begin(), candidates.end(), [&](auto d) {
                return upper ? leq(c, d) : leq(d, c);
              });
        if (extreme) {
          return c;
        }
      }
      throw LatticeAxiomError(upper ? "pair has no least upper bound"
                                    : "pair has no greatest lower bound",
                              a,
                              b);
    };
    return build_lattice(
        n,
        leq,
        [&](LatticeIndex a, LatticeIndex b) { return bound(a, b, true); },
        [&](LatticeIndex a, LatticeIndex b) { return bound(a, b, false); },
        std::move(labels));
  }

  FiniteLattice lattice_from_covers(
      std::size_t                                               n,
      std::vector<std::pair<LatticeIndex, LatticeIndex>> const& covers,
      std::vector<std::string>                                  labels) {
    // Reflexive-transitive closure by Warshall.
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a) {
      reach[a][a] = true;
    }
    for (auto [a, b] : covers) {
      reach.at(a).at(b) = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!reach[i][k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (reach[k][j]) {
            reach[i][j] = true;
          }
        }
      }
    }
    return lattice_from_order(
        n,
        [&reach](LatticeIndex a, LatticeIndex b) { return reach[a][b]; },
        std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Laws
  ////////////////////////////////////////////////////////////////////////

  bool violates_distributivity(FiniteLattice const& l, Triple const& t) {
    auto const [a, b, c] = t;
    return l.meet(l.join(a, b), c) != l.join(l.meet(a, c), l.meet(b, c));
  }

  bool violates_modularity(FiniteLattice const& l, Triple const& t) {
    auto const [a, b, c] = t;
    return l.leq(a, c) && l.meet(l.join(a, b), c) != l.join(a, l.meet(b, c));
  }

  std::optional<Triple> find_distributivity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        auto const ab = l.join(a, b);
        for (LatticeIndex c = 0; c < n; ++c) {
          if (l.meet(ab, c) != l.join(l.meet(a, c), l.meet(b, c))) {
            return Triple{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Triple> find_modularity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex c = 0; c < n; ++c) {
        // a == c and comparable-b cases satisfy the law trivially.
        if (a == c || !l.leq(a, c)) {
          continue;
        }
        for (LatticeIndex b = 0; b < n; ++b) {
          if (l.meet(l.join(a, b), c) != l.join(a, l.meet(b, c))) {
            return Triple{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Pair>
  find_strong_upper_semimodularity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        if (l.covers(l.meet(a, b), a) && !l.covers(b, l.join(a, b))) {
          return Pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Pair>
  find_strong_lower_semimodularity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        if (l.covers(a, l.join(a, b)) && !l.covers(l.meet(a, b), b)) {
          return Pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Pair> find_upper_semimodularity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        auto const m = l.meet(a, b);
        auto const j = l.join(a, b);
        if (l.covers(m, a) && l.covers(m, b)
            && !(l.covers(a, j) && l.covers(b, j))) {
          return Pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Pair> find_lower_semimodularity_violation(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        auto const m = l.meet(a, b);
        auto const j = l.join(a, b);
        if (l.covers(a, j) && l.covers(b, j)
            && !(l.covers(m, a) && l.covers(m, b))) {
          return Pair{a, b};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Pentagons and diamonds
  ////////////////////////////////////////////////////////////////////////

  bool is_pentagon(FiniteLattice const& l, Quintet const& q) {
    auto const [o, a, c, b, i] = q;
    std::array<LatticeIndex, 5> sorted = q;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()
        || sorted.back() >= l.size()) {
      return false;
    }
    // Chain o < a < c < i, and b meets/joins both a and c at o/i.
    return l.less(o, a) && l.less(a, c) && l.less(c, i) && l.meet(a, b) == o
           && l.meet(c, b) == o && l.join(a, b) == i && l.join(c, b) == i
           && l.meet(a, c) == a && l.join(a, c) == c;
  }

  bool is_diamond(FiniteLattice const& l, Quintet const& q) {
    auto const [o, x, y, z, i] = q;
    std::array<LatticeIndex, 5> sorted = q;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()
        || sorted.back() >= l.size()) {
      return false;
    }
    std::array<LatticeIndex, 3> const mid = {x, y, z};
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t r = p + 1; r < 3; ++r) {
        if (l.meet(mid[p], mid[r]) != o || l.join(mid[p], mid[r]) != i) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Quintet> search_pentagon_exhaustive(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex b = 0; b < n; ++b) {
      for (LatticeIndex a = 0; a < n; ++a) {
        if (l.comparable(a, b)) {
          continue;
        }
        auto const lo = l.meet(a, b);
        auto const hi = l.join(a, b);
        for (LatticeIndex c = 0; c < n; ++c) {
          if (c == a || !l.leq(a, c) || l.comparable(c, b)) {
            continue;
          }
          if (l.meet(c, b) == lo && l.join(c, b) == hi) {
            return Quintet{lo, a, c, b, hi};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Quintet> search_diamond_exhaustive(FiniteLattice const& l) {
    auto const n = static_cast<LatticeIndex>(l.size());
    for (LatticeIndex x = 0; x < n; ++x) {
      for (LatticeIndex y = x + 1; y < n; ++y) {
        if (l.comparable(x, y)) {
          continue;
        }
        auto const lo = l.meet(x, y);
        auto const hi = l.join(x, y);
        for (LatticeIndex z = y + 1; z < n; ++z) {
          if (l.meet(x, z) == lo && l.meet(y, z) == lo && l.join(x, z) == hi
              && l.join(y, z) == hi && !l.comparable(x, z)
              && !l.comparable(y, z)) {
            return Quintet{lo, x, y, z, hi};
          }
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Quintet> find_pentagon(FiniteLattice const& l) {
    if (auto t = find_modularity_violation(l)) {
      // With a <= c: p = a ∨ (b ∧ c) < q = (a ∨ b) ∧ c, and b meets both at
      // b ∧ c and joins both at a ∨ b.
      auto const [a, b, c] = *t;
      auto const p         = l.join(a, l.meet(b, c));
      auto const q         = l.meet(l.join(a, b), c);
      Quintet    candidate{l.meet(b, c), p, q, b, l.join(a, b)};
      if (is_pentagon(l, candidate)) {
        return candidate;
      }
    }
    return search_pentagon_exhaustive(l);
  }

  std::optional<Quintet> find_diamond(FiniteLattice const& l) {
    auto const t = find_distributivity_violation(l);
    if (t && is_modular(l)) {
      // In a modular lattice a non-distributive triple x, y, z yields the
      // diamond with bottom d = (x∧y)∨(y∧z)∨(z∧x), top e = (x∨y)∧(y∨z)∧(z∨x)
      // and atoms (w∧e)∨d for w in {x, y, z}.
      auto const [x, y, z] = *t;
      auto const d = l.join(l.join(l.meet(x, y), l.meet(y, z)), l.meet(z, x));
      auto const e = l.meet(l.meet(l.join(x, y), l.join(y, z)), l.join(z, x));
      Quintet    candidate{d,
                        l.join(l.meet(x, e), d),
                        l.join(l.meet(y, e), d),
                        l.join(l.meet(z, e), d),
                        e};
      if (is_diamond(l, candidate)) {
        return candidate;
      }
    }
    return search_diamond_exhaustive(l);
  }

  bool is_order_isomorphism(FiniteLattice const&             l1,
                            FiniteLattice const&             l2,
                            std::vector<LatticeIndex> const& phi) {
    auto const n = l1.size();
    if (l2.size() != n || phi.size() != n) {
      return false;
    }
    std::vector<bool> hit(n, false);
    for (auto x : phi) {
      if (x >= n || hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    for (LatticeIndex a = 0; a < n; ++a) {
      for (LatticeIndex b = 0; b < n; ++b) {
        if (l1.leq(a, b) != l2.leq(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace pathcong
