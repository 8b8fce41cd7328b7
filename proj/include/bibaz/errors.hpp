#pragma once

#include <stdexcept>
#include <string>

namespace bibaz {

/// Base for every error the engine raises on purpose.
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series operation was called outside its algebraic domain
/// (wrong constant term, insufficient order, non-normalized input).
class SeriesDomainError : public EngineError {
 public:
  using EngineError::EngineError;
};

/// Parameter bundle or φ-family parameters outside their declared ranges.
class InvalidParameter : public EngineError {
 public:
  using EngineError::EngineError;
};

/// A multiplier Υ^k_n C(δ,n) vanished where the bound divides by it.
class DegenerateOperator : public EngineError {
 public:
  using EngineError::EngineError;
};

/// The bound's composite denominator is exactly zero; the bound is undefined.
class ZeroDenominator : public EngineError {
 public:
  using EngineError::EngineError;
};

}  // namespace bibaz
