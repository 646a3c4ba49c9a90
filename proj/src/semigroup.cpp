#include "pathcong/semigroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), ElementIndex{0});
      }

      ElementIndex find(ElementIndex x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }

      bool unite(ElementIndex x, ElementIndex y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        // Keep the least element as the root so roots are canonical.
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return true;
      }

      Congruence to_congruence() {
        std::vector<std::size_t> labels(_parent.size());
        for (ElementIndex i = 0; i < _parent.size(); ++i) {
          labels[i] = find(i);
        }
        return Congruence::from_labels(labels);
      }

     private:
      std::vector<ElementIndex> _parent;
    };

    // Merges blocks until the relation held by uf is left and right
    // compatible.  Each round merges at least one pair or stops.
    void close_under_multiplication(PathSemigroup const& s, UnionFind& uf) {
      auto const n       = static_cast<ElementIndex>(s.size());
      bool       changed = true;
      while (changed) {
        changed = false;
        for (ElementIndex x = 0; x < n; ++x) {
          auto const r = uf.find(x);
          if (r == x) {
            continue;
          }
          for (ElementIndex a = 0; a < n; ++a) {
            changed |= uf.unite(s.product(a, x), s.product(a, r));
            changed |= uf.unite(s.product(x, a), s.product(r, a));
          }
        }
      }
    }

    void check_same_size(Congruence const& a, Congruence const& b) {
      if (a.size() != b.size()) {
        throw InvariantError("congruences over semigroups of different sizes ("
                             + std::to_string(a.size()) + " vs "
                             + std::to_string(b.size()) + ")");
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PathSemigroup
  ////////////////////////////////////////////////////////////////////////

  PathSemigroup::PathSemigroup(Quiver q)
      : _quiver(std::move(q)), _paths(enumerate_paths(_quiver)) {
    auto const n = size();
    _names.reserve(n);
    _names.emplace_back("0");
    for (auto const& p : _paths) {
      _names.push_back(path_name(_quiver, p));
    }

    std::map<std::vector<ArrowIndex>, ElementIndex> by_arrows;
    for (std::size_t i = 0; i < _paths.size(); ++i) {
      if (!_paths[i].is_trivial()) {
        by_arrows.emplace(_paths[i].arrows, static_cast<ElementIndex>(i + 1));
      }
    }

    _ending_at.assign(_quiver.number_of_vertices(), {});
    _starting_at.assign(_quiver.number_of_vertices(), {});
    for (ElementIndex x = 1; x < n; ++x) {
      _ending_at[path(x).target].push_back(x);
      _starting_at[path(x).source].push_back(x);
    }

    _table.assign(n * n, zero_element);
    for (ElementIndex x = 1; x < n; ++x) {
      auto const& p = path(x);
      for (auto y : _starting_at[p.target]) {
        auto const& r = path(y);
        if (p.is_trivial()) {
          _table[x * n + y] = y;
        } else if (r.is_trivial()) {
          _table[x * n + y] = x;
        } else {
          auto arrows = p.arrows;
          arrows.insert(arrows.end(), r.arrows.begin(), r.arrows.end());
          // Enumeration is closed under concatenation, so the lookup hits.
          _table[x * n + y] = by_arrows.at(arrows);
        }
      }
    }
  }

  std::optional<ElementIndex> PathSemigroup::find(std::string_view name) const {
    for (ElementIndex x = 0; x < _names.size(); ++x) {
      if (_names[x] == name) {
        return x;
      }
    }
    return std::nullopt;
  }

  PathSemigroup build_semigroup(Quiver q) {
    return PathSemigroup(std::move(q));
  }

  ////////////////////////////////////////////////////////////////////////
  // Congruence
  ////////////////////////////////////////////////////////////////////////

  Congruence Congruence::from_labels(std::vector<std::size_t> const& labels) {
    Congruence                                c;
    std::unordered_map<std::size_t, ElementIndex> first;
    c._rep.resize(labels.size());
    for (ElementIndex i = 0; i < labels.size(); ++i) {
      auto [it, inserted] = first.emplace(labels[i], i);
      c._rep[i]           = it->second;
    }
    return c;
  }

  Congruence
  Congruence::from_blocks(std::size_t                                   n,
                          std::vector<std::vector<ElementIndex>> const& blocks) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), std::size_t{0});
    std::vector<bool> seen(n, false);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (auto x : blocks[b]) {
        if (x >= n || seen[x]) {
          throw InvariantError("blocks do not form a partition of "
                               + std::to_string(n) + " elements");
        }
        seen[x]   = true;
        labels[x] = n + b;
      }
    }
    return from_labels(labels);
  }

  Congruence Congruence::identity(std::size_t n) {
    Congruence c;
    c._rep.resize(n);
    std::iota(c._rep.begin(), c._rep.end(), ElementIndex{0});
    return c;
  }

  Congruence Congruence::universal(std::size_t n) {
    Congruence c;
    c._rep.assign(n, 0);
    return c;
  }

  std::vector<std::vector<ElementIndex>> Congruence::blocks() const {
    std::vector<std::vector<ElementIndex>> out;
    std::vector<std::size_t>               slot(_rep.size());
    for (ElementIndex i = 0; i < _rep.size(); ++i) {
      if (_rep[i] == i) {
        slot[i] = out.size();
        out.push_back({i});
      } else {
        out[slot[_rep[i]]].push_back(i);
      }
    }
    return out;
  }

  std::vector<ElementIndex> Congruence::zero_block() const {
    std::vector<ElementIndex> out;
    for (ElementIndex i = 0; i < _rep.size(); ++i) {
      if (_rep[i] == _rep[zero_element]) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::size_t Congruence::number_of_blocks() const {
    std::size_t k = 0;
    for (ElementIndex i = 0; i < _rep.size(); ++i) {
      k += (_rep[i] == i);
    }
    return k;
  }

  std::size_t Congruence::number_of_nontrivial_pairs() const {
    std::size_t total = 0;
    for (auto const& b : blocks()) {
      total += b.size() * (b.size() - 1);
    }
    return total;
  }

  bool Congruence::is_contained_in(Congruence const& other) const {
    check_same_size(*this, other);
    for (ElementIndex i = 0; i < _rep.size(); ++i) {
      if (other._rep[i] != other._rep[_rep[i]]) {
        return false;
      }
    }
    return true;
  }

  std::size_t CongruenceHash::operator()(Congruence const& c) const noexcept {
    // FNV-1a over the representative vector.
    std::size_t h = 1469598103934665603ULL;
    for (auto r : c.representatives()) {
      h ^= r;
      h *= 1099511628211ULL;
    }
    return h;
  }

  bool is_congruence(PathSemigroup const& s, Congruence const& c) {
    if (c.size() != s.size()) {
      return false;
    }
    auto const n = static_cast<ElementIndex>(s.size());
    for (ElementIndex x = 0; x < n; ++x) {
      auto const r = c.representative(x);
      if (c.representative(r) != r || r > x) {
        return false;
      }
      if (r == x) {
        continue;
      }
      for (ElementIndex a = 0; a < n; ++a) {
        if (!c.related(s.product(a, x), s.product(a, r))
            || !c.related(s.product(x, a), s.product(r, a))) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Lattice operations
  ////////////////////////////////////////////////////////////////////////

  Congruence principal_congruence(PathSemigroup const& s,
                                  ElementIndex         x,
                                  ElementIndex         y) {
    auto const n = static_cast<ElementIndex>(s.size());
    UnionFind  uf(n);
    // Index n stands for the adjoined identity of S^1.
    auto const mul = [&s, n](ElementIndex a, ElementIndex b) {
      if (a == n) {
        return b;
      }
      if (b == n) {
        return a;
      }
      return s.product(a, b);
    };
    for (ElementIndex a = 0; a <= n; ++a) {
      auto const ax = mul(a, x);
      auto const ay = mul(a, y);
      for (ElementIndex b = 0; b <= n; ++b) {
        uf.unite(mul(ax, b), mul(ay, b));
      }
    }
    auto result = uf.to_congruence();
    assert(is_congruence(s, result));
    return result;
  }

  Congruence join_congruences(PathSemigroup const& s,
                              Congruence const&    a,
                              Congruence const&    b) {
    check_same_size(a, b);
    if (a.size() != s.size()) {
      throw InvariantError("congruence does not belong to this semigroup");
    }
    UnionFind uf(a.size());
    for (ElementIndex i = 0; i < a.size(); ++i) {
      uf.unite(i, a.representative(i));
      uf.unite(i, b.representative(i));
    }
    auto result = uf.to_congruence();
    // The equivalence generated by two compatible relations is compatible;
    // the closure loop only runs if that ever fails to hold.
    if (!is_congruence(s, result)) {
      close_under_multiplication(s, uf);
      result = uf.to_congruence();
    }
    return result;
  }

  Congruence meet_congruences(Congruence const& a, Congruence const& b) {
    check_same_size(a, b);
    std::vector<std::size_t> labels(a.size());
    for (ElementIndex i = 0; i < a.size(); ++i) {
      labels[i] = static_cast<std::size_t>(a.representative(i)) * a.size()
                  + b.representative(i);
    }
    return Congruence::from_labels(labels);
  }

  void sort_congruences(std::vector<Congruence>& cs) {
    std::sort(cs.begin(), cs.end(), [](auto const& x, auto const& y) {
      auto const bx = x.number_of_blocks();
      auto const by = y.number_of_blocks();
      if (bx != by) {
        return bx > by;
      }
      return x < y;
    });
  }

  std::vector<Congruence> enumerate_congruences(PathSemigroup const& s,
                                                std::size_t element_cap) {
    if (s.size() > element_cap) {
      throw CapExceededError("semigroup size", s.size(), element_cap);
    }
    auto const n = static_cast<ElementIndex>(s.size());

    std::vector<Congruence> principals;
    {
      std::unordered_set<Congruence, CongruenceHash> seen;
      for (ElementIndex x = 0; x < n; ++x) {
        for (ElementIndex y = x + 1; y < n; ++y) {
          auto p = principal_congruence(s, x, y);
          if (seen.insert(p).second) {
            principals.push_back(std::move(p));
          }
        }
      }
    }

    std::unordered_set<Congruence, CongruenceHash> known;
    std::deque<Congruence>                         frontier;
    known.insert(Congruence::identity(n));
    frontier.push_back(Congruence::identity(n));
    while (!frontier.empty()) {
      auto c = std::move(frontier.front());
      frontier.pop_front();
      for (auto const& p : principals) {
        if (p.is_contained_in(c)) {
          continue;
        }
        auto j = join_congruences(s, c, p);
        if (known.insert(j).second) {
          frontier.push_back(std::move(j));
        }
      }
    }
    std::vector<Congruence> result(known.begin(), known.end());
    sort_congruences(result);
    return result;
  }

  std::vector<Congruence>
  enumerate_congruences_bruteforce(PathSemigroup const& s,
                                   std::size_t          element_cap) {
    if (s.size() > element_cap) {
      throw CapExceededError("semigroup size", s.size(), element_cap);
    }
    auto const n = s.size();
    // Restricted growth strings: label[0] = 0, label[i] <= 1 + max(label[<i]).
    std::vector<std::size_t> label(n, 0);
    std::vector<std::size_t> prefix_max(n, 0);
    std::vector<Congruence>  result;
    while (true) {
      auto c = Congruence::from_labels(label);
      if (is_congruence(s, c)) {
        result.push_back(std::move(c));
      }
      // Advance to the next restricted growth string.
      auto i = n - 1;
      while (i >= 1 && label[i] > prefix_max[i - 1]) {
        --i;
      }
      if (i == 0) {
        break;
      }
      ++label[i];
      prefix_max[i] = std::max(prefix_max[i - 1], label[i]);
      for (auto j = i + 1; j < n; ++j) {
        label[j]      = 0;
        prefix_max[j] = prefix_max[i];
      }
    }
    sort_congruences(result);
    return result;
  }

  bool is_rees(Congruence const& c) {
    auto const z = c.representative(zero_element);
    for (auto const& block : c.blocks()) {
      if (block.front() != z && block.size() > 1) {
        return false;
      }
    }
    return true;
  }

}  // namespace pathcong
