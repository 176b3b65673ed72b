#ifndef LENSHOM_ERRORS_HPP
#define LENSHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lenshom {

// Input data violates a diagram invariant. `kind` names the invariant
// (NonCoprime, StripOutOfRange, DuplicateRow, DuplicateColumn,
// SharedCellOutsideUnknot).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// A move's precondition failed (IllegalExchange, NotDestabilizable,
// CellNotInPair, NotAligned, NotAllGridNumberOne, EmptyIndexSet).
class MoveError : public std::runtime_error {
 public:
  MoveError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Malformed polynomial or document text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A convention bug, not a user error: the termination measure failed to
// decrease, a reduction row commutation classified interleaving, or an
// operation produced an invalid diagram.
class InternalInvariantViolation : public std::logic_error {
 public:
  explicit InternalInvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace lenshom

#endif
