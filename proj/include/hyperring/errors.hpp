#pragma once

#include <stdexcept>
#include <string>

namespace hyperring {

  // Base of every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input: non-total tables, out-of-range indices, bad JSON,
  // unknown names. Distinct from axiom violations.
  class InputError : public Error {
   public:
    using Error::Error;
  };

  // A sequence whose length is not of the form l(k-1)+1 for the arity k.
  class ArityError : public InputError {
   public:
    using InputError::InputError;
  };

  // A predicate evaluated outside its domain (e.g. primality of the whole
  // carrier, or an argument that is not an ideal).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  // A construction (quotient, localization, expansion, ...) whose result
  // fails its own contract.
  class ConstructionError : public Error {
   public:
    using Error::Error;
  };

  // An exhaustive scan that would exceed the configured tuple budget.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

}  // namespace hyperring
