#pragma once

#include <stdexcept>
#include <string>

namespace qentropy {

// Input rejected by a structural check (non-Hermitian, dimension mismatch, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotAStateError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NormalizationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Jordan-Hahn decomposition requested for states at trace distance ~0.
class IdenticalStatesError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A quantity that is finite in exact arithmetic came out non-finite or
// violated an identity implied by the hypotheses.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qentropy
