#include "pathcong/linalg.hpp"

#include <algorithm>
#include <stdexcept>

#include "pathcong/error.hpp"

namespace pathcong {

  namespace {

    void check_dimensions(Subspace const& a, Subspace const& b) {
      if (a.ambient_dimension() != b.ambient_dimension()) {
        throw InvariantError("ambient dimension mismatch ("
                             + std::to_string(a.ambient_dimension()) + " vs "
                             + std::to_string(b.ambient_dimension()) + ")");
      }
    }

    std::size_t hash_mpz(mpz_srcptr z) noexcept {
      std::size_t h = static_cast<std::size_t>(mpz_sgn(z)) * 31u
                      + mpz_size(z);
      for (std::size_t i = 0; i < mpz_size(z); ++i) {
        h = h * 1099511628211ULL ^ static_cast<std::size_t>(mpz_getlimbn(z, i));
      }
      return h;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PathVector
  ////////////////////////////////////////////////////////////////////////

  PathVector::PathVector(std::vector<Entry> entries) {
    std::stable_sort(entries.begin(),
                     entries.end(),
                     [](auto const& x, auto const& y) { return x.first < y.first; });
    for (auto& e : entries) {
      if (!_entries.empty() && _entries.back().first == e.first) {
        _entries.back().second += e.second;
        if (_entries.back().second == 0) {
          _entries.pop_back();
        }
      } else if (e.second != 0) {
        _entries.push_back(std::move(e));
      }
    }
  }

  PathVector PathVector::unit(PathIndex i) {
    PathVector v;
    v._entries.emplace_back(i, 1);
    return v;
  }

  PathVector PathVector::difference(PathIndex i, PathIndex j) {
    if (i == j) {
      return PathVector();
    }
    PathVector v;
    if (i < j) {
      v._entries.emplace_back(i, 1);
      v._entries.emplace_back(j, -1);
    } else {
      v._entries.emplace_back(j, -1);
      v._entries.emplace_back(i, 1);
    }
    return v;
  }

  Rational PathVector::coefficient(PathIndex i) const {
    auto it = std::lower_bound(
        _entries.begin(), _entries.end(), i, [](auto const& e, PathIndex k) {
          return e.first < k;
        });
    if (it == _entries.end() || it->first != i) {
      return 0;
    }
    return it->second;
  }

  PathVector& PathVector::add_scaled(PathVector const& other,
                                     Rational const&   k) {
    if (k == 0 || other.is_zero()) {
      return *this;
    }
    std::vector<Entry> merged;
    merged.reserve(_entries.size() + other._entries.size());
    auto       it  = _entries.begin();
    auto       jt  = other._entries.begin();
    auto const end = _entries.end();
    while (it != end || jt != other._entries.end()) {
      if (jt == other._entries.end() || (it != end && it->first < jt->first)) {
        merged.push_back(std::move(*it++));
      } else if (it == end || jt->first < it->first) {
        merged.emplace_back(jt->first, k * jt->second);
        ++jt;
      } else {
        Rational sum = it->second + k * jt->second;
        if (sum != 0) {
          merged.emplace_back(it->first, std::move(sum));
        }
        ++it;
        ++jt;
      }
    }
    _entries = std::move(merged);
    return *this;
  }

  PathVector& PathVector::scale(Rational const& k) {
    if (k == 0) {
      _entries.clear();
      return *this;
    }
    for (auto& e : _entries) {
      e.second *= k;
    }
    return *this;
  }

  bool operator==(PathVector const& x, PathVector const& y) {
    return x._entries == y._entries;
  }

  bool operator<(PathVector const& x, PathVector const& y) {
    return std::lexicographical_compare(
        x._entries.begin(),
        x._entries.end(),
        y._entries.begin(),
        y._entries.end(),
        [](PathVector::Entry const& a, PathVector::Entry const& b) {
          if (a.first != b.first) {
            return a.first < b.first;
          }
          return a.second < b.second;
        });
  }

  ////////////////////////////////////////////////////////////////////////
  // Subspace
  ////////////////////////////////////////////////////////////////////////

  std::vector<PathIndex> Subspace::pivots() const {
    std::vector<PathIndex> out;
    out.reserve(_basis.size());
    for (auto const& b : _basis) {
      out.push_back(b.leading_index());
    }
    return out;
  }

  PathVector Subspace::reduce(PathVector v) const {
    // Basis rows vanish on each other's pivots, so one pass suffices.
    for (auto const& row : _basis) {
      if (v.is_zero()) {
        break;
      }
      auto const c = v.coefficient(row.leading_index());
      if (c != 0) {
        v.add_scaled(row, -c);
      }
    }
    return v;
  }

  bool Subspace::insert(PathVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) {
      return false;
    }
    auto const pivot = v.leading_index();
    if (pivot >= _ambient) {
      throw InvariantError("path index " + std::to_string(pivot)
                           + " outside ambient dimension "
                           + std::to_string(_ambient));
    }
    Rational const lead = v.entries().front().second;
    v.scale(1 / lead);
    for (auto& row : _basis) {
      auto const c = row.coefficient(pivot);
      if (c != 0) {
        row.add_scaled(v, -c);
      }
    }
    auto pos = std::lower_bound(
        _basis.begin(), _basis.end(), pivot, [](auto const& row, PathIndex p) {
          return row.leading_index() < p;
        });
    _basis.insert(pos, std::move(v));
    return true;
  }

  bool operator==(Subspace const& x, Subspace const& y) {
    return x._ambient == y._ambient && x._basis == y._basis;
  }

  bool operator<(Subspace const& x, Subspace const& y) {
    if (x._basis.size() != y._basis.size()) {
      return x._basis.size() < y._basis.size();
    }
    return x._basis < y._basis;
  }

  std::size_t SubspaceHash::operator()(Subspace const& s) const noexcept {
    std::size_t h = s.ambient_dimension();
    for (auto const& row : s.basis()) {
      for (auto const& [i, c] : row.entries()) {
        h = h * 1099511628211ULL ^ i;
        h = h * 31 + hash_mpz(c.get_num_mpz_t());
        h = h * 31 + hash_mpz(c.get_den_mpz_t());
      }
      h = h * 1099511628211ULL ^ 0x9e3779b97f4a7c15ULL;
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Operations
  ////////////////////////////////////////////////////////////////////////

  Subspace row_reduce(std::span<PathVector const> vectors,
                      std::size_t                 dimension) {
    Subspace s(dimension);
    for (auto const& v : vectors) {
      if (!v.is_zero() && v.entries().back().first >= dimension) {
        throw InvariantError("path index " + std::to_string(v.entries().back().first)
                             + " outside ambient dimension "
                             + std::to_string(dimension));
      }
      s.insert(v);
    }
    return s;
  }

  bool membership(Subspace const& s, PathVector const& v) {
    return s.reduce(v).is_zero();
  }

  std::optional<std::vector<Rational>> coordinates(Subspace const&   s,
                                                   PathVector const& v) {
    std::vector<Rational> coeffs;
    coeffs.reserve(s.dimension());
    PathVector rest = v;
    for (auto const& row : s.basis()) {
      coeffs.push_back(v.coefficient(row.leading_index()));
      rest.add_scaled(row, -coeffs.back());
    }
    if (!rest.is_zero()) {
      return std::nullopt;
    }
    return coeffs;
  }

  bool is_subspace_of(Subspace const& a, Subspace const& b) {
    check_dimensions(a, b);
    if (a.dimension() > b.dimension()) {
      return false;
    }
    return std::all_of(a.basis().begin(),
                       a.basis().end(),
                       [&b](auto const& v) { return membership(b, v); });
  }

  Subspace subspace_sum(Subspace const& a, Subspace const& b) {
    check_dimensions(a, b);
    Subspace const& big   = a.dimension() >= b.dimension() ? a : b;
    Subspace const& small = a.dimension() >= b.dimension() ? b : a;
    Subspace        out   = big;
    for (auto const& v : small.basis()) {
      out.insert(v);
    }
    return out;
  }

  Subspace subspace_intersection(Subspace const& a, Subspace const& b) {
    check_dimensions(a, b);
    auto const n = a.ambient_dimension();
    // Zassenhaus: reduce the rows (u | u) for u in a and (w | 0) for w in b
    // inside a space of twice the dimension.  Rows whose left half vanishes
    // carry a basis of the intersection in their right half; this is the
    // kernel of [A; B] read off through the echelon form.
    Subspace joint(2 * n);
    for (auto const& u : a.basis()) {
      std::vector<PathVector::Entry> entries;
      entries.reserve(2 * u.number_of_nonzeros());
      for (auto const& [i, c] : u.entries()) {
        entries.emplace_back(i, c);
      }
      for (auto const& [i, c] : u.entries()) {
        entries.emplace_back(n + i, c);
      }
      joint.insert(PathVector(std::move(entries)));
    }
    for (auto const& w : b.basis()) {
      joint.insert(w);
    }
    Subspace out(n);
    for (auto const& row : joint.basis()) {
      if (row.leading_index() < n) {
        continue;
      }
      std::vector<PathVector::Entry> entries;
      for (auto const& [i, c] : row.entries()) {
        entries.emplace_back(i - n, c);
      }
      out.insert(PathVector(std::move(entries)));
    }
    return out;
  }

  std::string format_rational(Rational const& q) {
    Rational r(q);
    r.canonicalize();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
  }

  Rational parse_rational(std::string const& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (q.get_den() == 0) {
      throw std::invalid_argument("zero denominator: '" + text + "'");
    }
    q.canonicalize();
    return q;
  }

}  // namespace pathcong
