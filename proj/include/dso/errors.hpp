#pragma once

#include <stdexcept>
#include <string>

namespace dso {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Fitness evaluation was asked to run over an empty parameter list.
class EmptySpecList : public Error {
  public:
    using Error::Error;
};

/// The inverse-parameter group summed and multiplied to exactly zero.
class ZeroDenominator : public Error {
  public:
    using Error::Error;
};

/// Overflow turned a fitness value into inf or NaN.
class NonFiniteResult : public Error {
  public:
    using Error::Error;
};

/// Every parameter is identical across two or more solutions; ranking
/// such a population would be meaningless.
class AllParametersConstant : public Error {
  public:
    using Error::Error;
};

class UnknownSolution : public Error {
  public:
    using Error::Error;
};

class UnknownParameter : public Error {
  public:
    using Error::Error;
};

/// A reaction that needs an alternative solution found none.
class SingleSolution : public Error {
  public:
    using Error::Error;
};

/// Instance too large for exhaustive enumeration.
class TooLarge : public Error {
  public:
    using Error::Error;
};

class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// Malformed input document; the message carries line/field diagnostics.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public Error {
  public:
    using Error::Error;
};

} // namespace dso
