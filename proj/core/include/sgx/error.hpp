#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sgx {

  //! Base class of every exception thrown by sgx.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class OutOfRange : public Error {
   public:
    using Error::Error;
  };

  class AssociativityViolation : public Error {
   public:
    AssociativityViolation(std::size_t x, std::size_t y, std::size_t z);
    std::size_t x, y, z;
  };

  class EmptyGenerators : public Error {
   public:
    EmptyGenerators() : Error("generating set is empty") {}
  };

  //! (a.s).s' != a.(ss') for a right act, or the left/biact analogue.
  class CompatibilityViolation : public Error {
   public:
    CompatibilityViolation(std::string const& what,
                           std::size_t        a,
                           std::size_t        s,
                           std::size_t        t);
    std::size_t a, s, t;
  };

  class EquivarianceViolation : public Error {
   public:
    EquivarianceViolation(std::size_t a, std::size_t s);
    std::size_t a, s;
  };

  class NotMultiplicative : public Error {
   public:
    NotMultiplicative(std::size_t x, std::size_t y);
    std::size_t x, y;
  };

  class SearchSpaceTooLarge : public Error {
   public:
    SearchSpaceTooLarge(double candidates, std::size_t limit);
  };

  class SemigroupMismatch : public Error {
   public:
    using Error::Error;
  };

  class NotBalanced : public Error {
   public:
    NotBalanced(std::size_t a, std::size_t s, std::size_t b);
    std::size_t a, s, b;
  };

  class PreconditionFailed : public Error {
   public:
    using Error::Error;
  };

  class WitnessNotFound : public Error {
   public:
    using Error::Error;
  };

  //! A pairing violates <s.p, q> = s<p,q> or <p, q.s> = <p,q>s.
  class BiactLawViolation : public Error {
   public:
    BiactLawViolation(std::string const& side,
                      std::size_t        s,
                      std::size_t        p,
                      std::size_t        q);
    std::size_t s, p, q;
  };

  //! Raised when a quantity that must not depend on a choice of
  //! representative does. Always indicates a bug or corrupt input tables.
  class WellDefinednessViolation : public Error {
   public:
    using Error::Error;
  };

  //! A property guaranteed by the theory failed on a concrete instance.
  class InvariantViolation : public Error {
   public:
    using Error::Error;
  };

  class ContextInvalid : public Error {
   public:
    using Error::Error;
  };

  class NotFactorizable : public Error {
   public:
    NotFactorizable() : Error("semigroup is not factorizable") {}
  };

  class CoverMissing : public Error {
   public:
    using Error::Error;
  };

  class OrderTooLarge : public Error {
   public:
    using Error::Error;
  };

  //! Parse failure; the message is "<file>:<line>: <reason>".
  class ParseError : public Error {
   public:
    ParseError(std::string const& file, std::size_t line, std::string const& why);
    std::string file;
    std::size_t line;
  };

}  // namespace sgx
