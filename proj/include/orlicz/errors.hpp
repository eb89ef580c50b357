#pragma once

#include <stdexcept>
#include <string>

namespace orlicz {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Operands built over different probability spaces, or mismatched shapes.
class DimensionError : public Error {
public:
  using Error::Error;
};

// A parameter outside its documented range (weights, exponents, grids).
class ArgumentError : public Error {
public:
  using Error::Error;
};

// A quantity that is mathematically undefined for the given input.
class DomainError : public Error {
public:
  using Error::Error;
};

// Structured input that parses but fails a semantic check.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Input size exceeds what a brute-force oracle is willing to handle.
class ScaleError : public Error {
public:
  using Error::Error;
};

// A documented precondition does not hold for the supplied data.
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace orlicz
