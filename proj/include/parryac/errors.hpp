#ifndef PARRYAC_ERRORS_HPP
#define PARRYAC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace parryac {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Morphism parameters violate p >= q >= 1 (simple) or p > q >= 1 (non-simple),
// or a numeric argument could not be parsed.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Argument outside the operation's domain, e.g. n = 0 for AC(n).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

class FamilyMismatch : public Error {
 public:
  using Error::Error;
};

// The simple family with q = 1 has no v/w construction.
class UnsupportedConstruction : public Error {
 public:
  using Error::Error;
};

// A prefix length exceeds the stage it was supposed to fit in.
class IndexError : public Error {
 public:
  using Error::Error;
};

// The supplied stage index does not bracket n.
class StageMismatch : public Error {
 public:
  using Error::Error;
};

// A requested prefix exceeds the configured generation cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace parryac

#endif  // PARRYAC_ERRORS_HPP
