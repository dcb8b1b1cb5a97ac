// SPDX-License-Identifier: Apache-2.0

#ifndef XRES_ERROR_HPP_
#define XRES_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace xres {

  enum class ErrorKind {
    NonComposablePath,
    UnknownGenerator,
    NotFiniteWithinBound,
    OracleMismatch,
    SyntaxError,
    NonLoopRelator,
    UnknownRelator,
    BasepointMismatch,
    DimensionOutOfRange,
    MissingImage,
    NonIdentityBoundary,
    NotFinite,
    DimensionOverflow,
    UnverifiedLift,
    NotTwoObject,
    LiftNotFound,
    AmbiguousWithoutHints,
    MissingOracle,
    TooLarge,
    UnverifiedCocycle,
    InvalidArgument,
    Io,
  };

  std::string_view to_string(ErrorKind kind) noexcept;

  //! Every failure raised by the library. The message is prefixed with the
  //! module that raised it ("words: ...", "constructions: ...").
  class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, std::string_view module, std::string const& what)
        : std::runtime_error(std::string(module) + ": " + std::string(to_string(kind))
                             + ": " + what),
          kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept {
      return kind_;
    }

   private:
    ErrorKind kind_;
  };

  //! Syntax errors carry the byte offset of the offending character.
  class SyntaxError : public Error {
   public:
    SyntaxError(std::string_view module, std::size_t position, std::string const& what)
        : Error(ErrorKind::SyntaxError, module,
                "at position " + std::to_string(position) + ": " + what),
          position_(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return position_;
    }

   private:
    std::size_t position_;
  };

}  // namespace xres

#endif  // XRES_ERROR_HPP_
