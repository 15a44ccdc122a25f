#include "echcap/capacity_value.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "echcap/errors.hpp"

namespace echcap {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Error introduced by rounding an exact rational to the nearest double.
double conversion_error(const Rational& r) { return std::abs(r.to_double()) * kEps; }

}  // namespace

CapacityValue CapacityValue::exact(const Rational& r) {
  if (r.sign() < 0) throw InvalidArgument("capacity values are nonnegative, got " + r.to_string());
  CapacityValue v;
  v.kind_ = Kind::ExactRational;
  v.exact_ = r;
  return v;
}

CapacityValue CapacityValue::approx(double value, double error_bound) {
  if (!std::isfinite(value) || !std::isfinite(error_bound) || error_bound < 0.0) {
    throw InvalidArgument("approximate capacity needs a finite value and error bound");
  }
  if (value < -error_bound) throw InvalidArgument("capacity values are nonnegative");
  CapacityValue v;
  v.kind_ = Kind::ApproxReal;
  v.approx_ = value;
  v.error_ = error_bound;
  return v;
}

CapacityValue CapacityValue::infinity() {
  CapacityValue v;
  v.kind_ = Kind::Infinite;
  return v;
}

const Rational& CapacityValue::rational() const {
  if (kind_ != Kind::ExactRational) {
    throw InvalidArgument("capacity value " + to_string() + " is not an exact rational");
  }
  return exact_;
}

double CapacityValue::value() const {
  switch (kind_) {
    case Kind::ExactRational:
      return exact_.to_double();
    case Kind::ApproxReal:
      return approx_;
    case Kind::Infinite:
      break;
  }
  return std::numeric_limits<double>::infinity();
}

std::string CapacityValue::to_string() const {
  switch (kind_) {
    case Kind::ExactRational:
      return exact_.to_string();
    case Kind::ApproxReal: {
      char buf[64];
      std::snprintf(buf, sizeof buf, "~%.12f", approx_);
      return buf;
    }
    case Kind::Infinite:
      break;
  }
  return "inf";
}

CapacityValue operator+(const CapacityValue& a, const CapacityValue& b) {
  using K = CapacityValue::Kind;
  if (a.kind_ == K::Infinite || b.kind_ == K::Infinite) return CapacityValue::infinity();
  if (a.kind_ == K::ExactRational && b.kind_ == K::ExactRational) {
    return CapacityValue::exact(a.exact_ + b.exact_);
  }
  double err = a.error() + b.error();
  if (a.is_exact()) err += conversion_error(a.exact_);
  if (b.is_exact()) err += conversion_error(b.exact_);
  double sum = a.value() + b.value();
  err += std::abs(sum) * kEps;
  return CapacityValue::approx(sum, err);
}

CapacityValue operator*(const Rational& s, const CapacityValue& v) {
  using K = CapacityValue::Kind;
  if (s.sign() < 0) throw InvalidArgument("capacity scaling needs a nonnegative factor");
  switch (v.kind_) {
    case K::ExactRational:
      return CapacityValue::exact(s * v.exact_);
    case K::ApproxReal: {
      double f = s.to_double();
      double prod = f * v.approx_;
      return CapacityValue::approx(prod, f * v.error_ + std::abs(prod) * 2 * kEps);
    }
    case K::Infinite:
      break;
  }
  return s.is_zero() ? CapacityValue() : CapacityValue::infinity();
}

bool operator==(const CapacityValue& a, const CapacityValue& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case CapacityValue::Kind::ExactRational:
      return a.exact_ == b.exact_;
    case CapacityValue::Kind::ApproxReal:
      return a.approx_ == b.approx_ && a.error_ == b.error_;
    case CapacityValue::Kind::Infinite:
      break;
  }
  return true;
}

Comparison compare(const CapacityValue& a, const CapacityValue& b) {
  bool ai = !a.is_finite(), bi = !b.is_finite();
  if (ai || bi) {
    if (ai && bi) return Comparison::Equal;
    return ai ? Comparison::Greater : Comparison::Less;
  }
  if (a.is_exact() && b.is_exact()) {
    auto c = a.rational() <=> b.rational();
    if (c < 0) return Comparison::Less;
    if (c > 0) return Comparison::Greater;
    return Comparison::Equal;
  }
  double tol = a.error() + b.error();
  if (a.is_exact()) tol += conversion_error(a.rational());
  if (b.is_exact()) tol += conversion_error(b.rational());
  double diff = a.value() - b.value();
  if (std::abs(diff) <= tol) return Comparison::Tie;
  return diff < 0 ? Comparison::Less : Comparison::Greater;
}

CapacityValue max(const CapacityValue& a, const CapacityValue& b) {
  switch (compare(a, b)) {
    case Comparison::Less:
      return b;
    case Comparison::Greater:
    case Comparison::Equal:
      return a;
    case Comparison::Tie:
      break;
  }
  const CapacityValue& hi = a.value() >= b.value() ? a : b;
  const CapacityValue& lo = a.value() >= b.value() ? b : a;
  double err = std::max(hi.error(), (hi.value() - lo.value()) + lo.error());
  if (hi.is_exact() && lo.is_exact()) return hi;
  return CapacityValue::approx(hi.value(), err + std::abs(hi.value()) * kEps);
}

std::ostream& operator<<(std::ostream& os, const CapacityValue& v) { return os << v.to_string(); }

}  // namespace echcap
