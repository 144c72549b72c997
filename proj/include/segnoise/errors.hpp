#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace segnoise {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonBinaryValue : public Error {
 public:
  NonBinaryValue(std::size_t index, double value)
      : Error("entry at flat index " + std::to_string(index) + " is not 0 or 1: " +
              std::to_string(value)),
        index(index),
        value(value) {}
  std::size_t index;
  double value;
};

class OutOfRange : public Error {
 public:
  OutOfRange(std::size_t index, double value)
      : Error("entry at flat index " + std::to_string(index) + " is outside [0,1]: " +
              std::to_string(value)),
        index(index),
        value(value) {}
  std::size_t index;
  double value;
};

class EmptyShape : public Error {
 public:
  EmptyShape() : Error("shape must have at least one axis") {}
};

class NonPositiveSigma : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class EmptyMarginal : public Error {
 public:
  EmptyMarginal() : Error("marginal is identically zero") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class NegativeAmplitude : public Error {
 public:
  explicit NegativeAmplitude(double a)
      : Error("noise amplitude must be >= 0, got " + std::to_string(a)) {}
};

class InteriorEmpty : public Error {
 public:
  using Error::Error;
};

class GeometryOutOfBounds : public Error {
 public:
  using Error::Error;
};

}  // namespace segnoise
