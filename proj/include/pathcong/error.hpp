#ifndef PATHCONG_ERROR_HPP_
#define PATHCONG_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathcong {

  // Base class for every error raised by the library.  The CLI maps
  // DomainError to exit code 1.
  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class ParseError : public DomainError {
   public:
    ParseError(std::size_t line, std::string const& what)
        : DomainError("line " + std::to_string(line) + ": " + what),
          _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  class InvalidQuiverError : public DomainError {
   public:
    using DomainError::DomainError;
  };

  class CyclicQuiverError : public DomainError {
   public:
    CyclicQuiverError()
        : DomainError("quiver contains a cycle; only acyclic quivers are "
                      "supported here") {}
  };

  class CapExceededError : public DomainError {
   public:
    CapExceededError(std::string const& what_limit,
                     std::size_t       actual,
                     std::size_t       cap)
        : DomainError(what_limit + " " + std::to_string(actual)
                      + " exceeds cap " + std::to_string(cap)) {}
  };

  // A lattice table that fails the order/bound axioms, or a congruence
  // or ideal handed to an operation over a different semigroup.
  class InvariantError : public DomainError {
   public:
    using DomainError::DomainError;
  };

}  // namespace pathcong

#endif  // PATHCONG_ERROR_HPP_
