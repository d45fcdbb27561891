#pragma once

#include <stdexcept>
#include <string>

namespace biclosure {

/// Base class for every error raised by the library. Each subclass names one
/// input condition so callers (and the CLI exit-code mapping) can dispatch on type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error { using Error::Error; };
class UnknownLabel : public Error { using Error::Error; };
class BoundExceeded : public Error { using Error::Error; };
class NotALattice : public Error { using Error::Error; };
class NotBounded : public Error { using Error::Error; };
class NotDistributive : public Error { using Error::Error; };
class NotBoolean : public Error { using Error::Error; };
class InvalidOrthoMap : public Error { using Error::Error; };
class NotInS : public Error { using Error::Error; };
class MemberOutOfRange : public Error { using Error::Error; };
class CarrierMismatch : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

/// Raised when a construction that is guaranteed by a theorem fails to verify.
/// This indicates a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace biclosure
