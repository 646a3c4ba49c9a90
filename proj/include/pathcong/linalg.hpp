#ifndef PATHCONG_LINALG_HPP_
#define PATHCONG_LINALG_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pathcong {

  using Rational  = mpq_class;
  // Position of a path in enumerate_paths order (element index - 1).
  using PathIndex = std::size_t;

  //! A sparse vector of the path algebra in the path basis, with exact
  //! rational coefficients.  Entries are sorted by index and never zero.
  class PathVector {
   public:
    using Entry = std::pair<PathIndex, Rational>;

    PathVector() = default;
    // Sums repeated indices and drops zeros.
    explicit PathVector(std::vector<Entry> entries);

    static PathVector unit(PathIndex i);
    // e_i - e_j (zero when i == j).
    static PathVector difference(PathIndex i, PathIndex j);

    [[nodiscard]] std::vector<Entry> const& entries() const noexcept {
      return _entries;
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _entries.empty();
    }
    [[nodiscard]] std::size_t number_of_nonzeros() const noexcept {
      return _entries.size();
    }
    // Requires !is_zero().
    [[nodiscard]] PathIndex leading_index() const {
      return _entries.front().first;
    }
    [[nodiscard]] Rational coefficient(PathIndex i) const;

    // *this += k * other
    PathVector& add_scaled(PathVector const& other, Rational const& k);
    PathVector& scale(Rational const& k);

    friend bool operator==(PathVector const& x, PathVector const& y);
    friend bool operator<(PathVector const& x, PathVector const& y);

   private:
    std::vector<Entry> _entries;
  };

  //! A subspace of the path algebra held as its reduced row-echelon basis:
  //! pivots strictly increase, every pivot entry is 1 and every other basis
  //! vector is 0 in a pivot column.  Equal subspaces have identical bases.
  class Subspace {
   public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dimension)
        : _ambient(ambient_dimension) {}

    [[nodiscard]] std::size_t ambient_dimension() const noexcept {
      return _ambient;
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _basis.size();
    }
    [[nodiscard]] std::vector<PathVector> const& basis() const noexcept {
      return _basis;
    }
    [[nodiscard]] std::vector<PathIndex> pivots() const;

    // Reduces v against the basis; the result is zero iff v is a member.
    [[nodiscard]] PathVector reduce(PathVector v) const;

    // Adds v to the span, keeping the basis in reduced row-echelon form.
    // Returns false if v was already a member.
    bool insert(PathVector v);

    friend bool operator==(Subspace const& x, Subspace const& y);
    // Dimension first, then the bases lexicographically.
    friend bool operator<(Subspace const& x, Subspace const& y);

   private:
    std::size_t             _ambient = 0;
    std::vector<PathVector> _basis;
  };

  struct SubspaceHash {
    std::size_t operator()(Subspace const& s) const noexcept;
  };

  // Reduced row-echelon basis of span(vectors).  Throws InvariantError if an
  // index is >= dimension.
  [[nodiscard]] Subspace row_reduce(std::span<PathVector const> vectors,
                                    std::size_t                 dimension);

  [[nodiscard]] bool membership(Subspace const& s, PathVector const& v);

  // Coefficients c with v == sum_j c[j] * s.basis()[j], or nullopt if v is
  // not in s.
  [[nodiscard]] std::optional<std::vector<Rational>>
  coordinates(Subspace const& s, PathVector const& v);

  [[nodiscard]] bool is_subspace_of(Subspace const& a, Subspace const& b);

  // Both throw InvariantError on an ambient dimension mismatch.
  [[nodiscard]] Subspace subspace_sum(Subspace const& a, Subspace const& b);
  [[nodiscard]] Subspace subspace_intersection(Subspace const& a,
                                               Subspace const& b);

  // "num/den" with den > 0, e.g. "-1/1".
  [[nodiscard]] std::string format_rational(Rational const& q);
  // Accepts "num/den" or an integer.  Throws std::invalid_argument.
  [[nodiscard]] Rational parse_rational(std::string const& text);

}  // namespace pathcong

#endif  // PATHCONG_LINALG_HPP_
