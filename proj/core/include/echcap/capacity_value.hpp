#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "echcap/rational.hpp"

namespace echcap {

/// A single capacity: exact nonnegative rational, an approximate real with
/// an absolute error bound, or +infinity.
class CapacityValue {
 public:
  enum class Kind { ExactRational, ApproxReal, Infinite };

  CapacityValue() = default;  // exact zero
  CapacityValue(const Rational& r) : CapacityValue(exact(r)) {}  // NOLINT: implicit from exact values
  CapacityValue(std::int64_t n) : CapacityValue(exact(Rational(n))) {}  // NOLINT

  static CapacityValue exact(const Rational& r);
  static CapacityValue approx(double value, double error_bound);
  static CapacityValue infinity();

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::ExactRational; }
  bool is_approx() const { return kind_ == Kind::ApproxReal; }
  bool is_finite() const { return kind_ != Kind::Infinite; }

  /// Throws InvalidArgument unless the value is exact.
  const Rational& rational() const;
  /// Midpoint as a double (+inf for Infinite).
  double value() const;
  /// Absolute error bound; 0 for exact and infinite values.
  double error() const { return kind_ == Kind::ApproxReal ? error_ : 0.0; }

  /// Exact values print as "p/q", approximations as "~" followed by twelve
  /// decimals, infinity as "inf".
  std::string to_string() const;

  friend CapacityValue operator+(const CapacityValue& a, const CapacityValue& b);
  /// Multiplication by a nonnegative exact scalar.
  friend CapacityValue operator*(const Rational& s, const CapacityValue& v);

  /// Bitwise identity of representation, not numeric equality.
  friend bool operator==(const CapacityValue& a, const CapacityValue& b);

 private:
  Kind kind_ = Kind::ExactRational;
  Rational exact_{};
  double approx_ = 0.0;
  double error_ = 0.0;
};

enum class Comparison { Less, Equal, Greater, Tie };

/// Exact whenever both sides are exact or infinite. Any comparison involving
/// an approximation whose difference lies within the combined error bound
/// is reported as Tie.
Comparison compare(const CapacityValue& a, const CapacityValue& b);

/// Max-plus maximum. On an approximate tie the larger midpoint is kept and the
/// error bound widened to cover both operands.
CapacityValue max(const CapacityValue& a, const CapacityValue& b);

std::ostream& operator<<(std::ostream& os, const CapacityValue& v);

}  // namespace echcap
