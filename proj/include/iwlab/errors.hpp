#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace iwlab {

/// Bad input: unparseable values, violated preconditions, p = 2, q1 == q2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Mathematically well-posed input outside the supported range (ramified p, degree > 2).
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Not enough p-adic digits to decide.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Three-valued answer for questions asked at finite precision.
enum class Verdict { no, yes, indeterminate };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "true";
    case Verdict::no:
      return "false";
    default:
      return "indeterminate";
  }
}

}  // namespace iwlab
