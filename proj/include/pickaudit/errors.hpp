#pragma once

#include <stdexcept>
#include <string>

namespace pickaudit {

// Invalid parameter values (probabilities outside (0,1), non-finite inputs,
// counts out of range). CLI exit code 4.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inputs that are structurally valid but statistically unusable
// (zero-variance samples, too-short samples). CLI exit code 4.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Malformed or unusable input files. CLI exit code 3.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pickaudit
