#ifndef IBNCERT_ERROR_HPP_
#define IBNCERT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ibncert {

  enum class ErrorKind {
    DuplicateName,
    DanglingEdge,
    EmptyGraph,
    NotRegular,
    OutOfRange,
    LengthMismatch,
    ZeroElement,
    NonTerminating,
    ParseError,
    UnknownExample,
    InternalInvariantViolation,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  // Every failure raised by the library carries one of the kinds above so the
  // CLI can map it to an exit status without string matching.
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string const& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          _kind(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return _kind;
    }

   private:
    ErrorKind _kind;
  };

}  // namespace ibncert

#endif  // IBNCERT_ERROR_HPP_
