#pragma once

#include <stdexcept>
#include <string>

namespace tempora {

// Shapes or subsystem layouts that do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An input object violates its type invariants (non-Hermitian state,
// incomplete instrument, non-unitary evolution, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Post-selection on an outcome whose probability is below the cutoff.
class ImpossiblePostselection : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Pearson correlation with a zero-variance sample.
class UndefinedCorrelation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Enumeration would exceed the configured size limit.
class SizeLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tempora
