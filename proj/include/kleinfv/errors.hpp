#pragma once

#include <stdexcept>
#include <string>

namespace kfv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Energy sits on (or within tolerance of) a branch point such as E = m or E = u +/- m.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

/// Inputs outside the admissible physical domain (E <= m, m <= 0, r < 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Gamma function argument landed on a pole.
class PoleError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// c - a - b too close to an integer for the y <-> 1-y connection formula.
class DegenerateParams : public Error {
 public:
  using Error::Error;
};

/// Quantity not defined in the current energy regime (e.g. T with complex k2).
class RegimeError : public Error {
 public:
  using Error::Error;
};

class GridMismatch : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

class StepUnderflow : public Error {
 public:
  using Error::Error;
};

}  // namespace kfv
