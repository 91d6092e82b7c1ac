#pragma once

#include <stdexcept>
#include <string>

namespace semicurve {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The generators have gcd != 1, so the complement in N would be infinite.
class NotNumerical : public Error {
 public:
  using Error::Error;
};

/// A gap set or membership table that is not additively closed.
class NotASemigroup : public Error {
 public:
  using Error::Error;
};

/// An explicit element set that is not closed under the ambient action S + E.
class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

/// Two operands live over different semigroups, or an overring does not
/// contain the base semigroup.
class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

/// T was expected to contain S.
class NotAnExtension : public Error {
 public:
  using Error::Error;
};

/// Enumeration was asked to go beyond the configured genus cap.
class GenusCapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace semicurve
