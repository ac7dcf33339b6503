#pragma once

#include <cmath>

#include "pickaudit/errors.hpp"

namespace pickaudit {

// A real in [0, 1]. Validated once at construction so downstream code can
// treat the invariant as established.
class Probability {
 public:
  Probability() : value_(0.0) {}

  static Probability checked(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("probability outside [0, 1]: " + std::to_string(v));
    }
    return Probability(v);
  }

  // For values in (0, 1) strictly, e.g. significance levels.
  static Probability checked_open(double v) {
    if (!(v > 0.0 && v < 1.0)) {
      throw DomainError("probability outside (0, 1): " + std::to_string(v));
    }
    return Probability(v);
  }

  double value() const { return value_; }
  operator double() const { return value_; }

 private:
  explicit Probability(double v) : value_(v) {}
  double value_;
};

}  // namespace pickaudit
