// SPDX-License-Identifier: Apache-2.0

#include "xres/error.hpp"

namespace xres {

  std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
      case ErrorKind::NonComposablePath:
        return "NonComposablePath";
      case ErrorKind::UnknownGenerator:
        return "UnknownGenerator";
      case ErrorKind::NotFiniteWithinBound:
        return "NotFiniteWithinBound";
      case ErrorKind::OracleMismatch:
        return "OracleMismatch";
      case ErrorKind::SyntaxError:
        return "SyntaxError";
      case ErrorKind::NonLoopRelator:
        return "NonLoopRelator";
      case ErrorKind::UnknownRelator:
        return "UnknownRelator";
      case ErrorKind::BasepointMismatch:
        return "BasepointMismatch";
      case ErrorKind::DimensionOutOfRange:
        return "DimensionOutOfRange";
      case ErrorKind::MissingImage:
        return "MissingImage";
      case ErrorKind::NonIdentityBoundary:
        return "NonIdentityBoundary";
      case ErrorKind::NotFinite:
        return "NotFinite";
      case ErrorKind::DimensionOverflow:
        return "DimensionOverflow";
      case ErrorKind::UnverifiedLift:
        return "UnverifiedLift";
      case ErrorKind::NotTwoObject:
        return "NotTwoObject";
      case ErrorKind::LiftNotFound:
        return "LiftNotFound";
      case ErrorKind::AmbiguousWithoutHints:
        return "AmbiguousWithoutHints";
      case ErrorKind::MissingOracle:
        return "MissingOracle";
      case ErrorKind::TooLarge:
        return "TooLarge";
      case ErrorKind::UnverifiedCocycle:
        return "UnverifiedCocycle";
      case ErrorKind::InvalidArgument:
        return "InvalidArgument";
      case ErrorKind::Io:
        return "Io";
    }
    return "Error";
  }

}  // namespace xres
