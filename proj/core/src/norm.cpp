#include "echcap/norm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "echcap/errors.hpp"

namespace echcap {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

int half_plane(const RationalPoint& p) {
  return (p.y.sign() < 0 || (p.y.is_zero() && p.x.sign() < 0)) ? 1 : 0;
}

Rational cross(const RationalPoint& a, const RationalPoint& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const RationalPoint& a, const RationalPoint& b) { return a.x * b.x + a.y * b.y; }

bool angle_less(const RationalPoint& a, const RationalPoint& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

// Returns s if n == s*s, otherwise -1.
std::int64_t exact_isqrt(std::int64_t n) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s * s == n ? s : -1;
}

}  // namespace

Norm Norm::euclidean() { return Norm(); }

Norm Norm::weighted_l1(const Rational& a, const Rational& b) {
  if (a.sign() <= 0 || b.sign() <= 0) {
    throw InvalidArgument("weighted L1 norm needs positive weights, got " + a.to_string() + ", " +
                          b.to_string());
  }
  Norm n;
  n.kind_ = Kind::WeightedL1;
  n.a_ = a;
  n.b_ = b;
  Rational ux = Rational(2) / a, uy = Rational(2) / b;
  n.unit_ball_ = {{ux, 0}, {0, uy}, {-ux, 0}, {0, -uy}};
  n.build_dual_ball();
  return n;
}

Norm Norm::polygonal(std::vector<RationalPoint> unit_ball) {
  const std::size_t count = unit_ball.size();
  if (count < 4 || count % 2 != 0) {
    throw InvalidArgument("polygonal unit ball needs an even number (>= 4) of vertices");
  }
  for (const auto& p : unit_ball) {
    if (p.x.is_zero() && p.y.is_zero()) {
      throw InvalidArgument("unit ball vertex at the origin");
    }
  }
  std::sort(unit_ball.begin(), unit_ball.end(), angle_less);
  for (std::size_t i = 0; i < count; ++i) {
    const auto& v = unit_ball[i];
    const auto& w = unit_ball[(i + count / 2) % count];
    if (!(w.x == -v.x && w.y == -v.y)) {
      throw InvalidArgument("polygonal unit ball must be centrally symmetric");
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = unit_ball[i];
    const auto& q = unit_ball[(i + 1) % count];
    const auto& r = unit_ball[(i + 2) % count];
    RationalPoint e1{q.x - p.x, q.y - p.y}, e2{r.x - q.x, r.y - q.y};
    if (cross(e1, e2).sign() <= 0) {
      throw InvalidArgument("polygonal unit ball must be strictly convex");
    }
  }
  Norm n;
  n.kind_ = Kind::Polygonal;
  n.unit_ball_ = std::move(unit_ball);
  n.build_dual_ball();
  return n;
}

void Norm::build_dual_ball() {
  // For the edge v_i -> v_{i+1} with outward normal nu and offset h = <nu, v_i>,
  // the polar vertex is nu / h.
  dual_ball_.clear();
  const std::size_t count = unit_ball_.size();
  for (std::size_t i = 0; i < count; ++i) {
    const auto& p = unit_ball_[i];
    const auto& q = unit_ball_[(i + 1) % count];
    RationalPoint normal{q.y - p.y, p.x - q.x};
    Rational h = dot(normal, p);
    dual_ball_.push_back({normal.x / h, normal.y / h});
  }
  std::sort(dual_ball_.begin(), dual_ball_.end(), angle_less);
}

Rational Norm::exact_length(const RationalPoint& v) const {
  switch (kind_) {
    case Kind::WeightedL1:
      return a_ * abs(v.x) / 2 + b_ * abs(v.y) / 2;
    case Kind::Polygonal: {
      Rational best = dot(dual_ball_.front(), v);
      for (const auto& w : dual_ball_) best = max(best, dot(w, v));
      return best;
    }
    case Kind::Euclidean:
      break;
  }
  throw InvalidArgument("Euclidean lengths are not exact rationals");
}

CapacityValue Norm::length(LatticePoint v) const {
  if (kind_ != Kind::Euclidean) return CapacityValue::exact(exact_length({v.x, v.y}));
  std::int64_t sq = checked_add(checked_mul(v.x, v.x), checked_mul(v.y, v.y));
  if (std::int64_t s = exact_isqrt(sq); s >= 0) return CapacityValue::exact(s);
  double len = std::sqrt(static_cast<double>(sq));
  return CapacityValue::approx(len, len * kEps);
}

CapacityValue Norm::path_length(std::span<const LatticePoint> edges) const {
  if (kind_ != Kind::Euclidean) {
    Rational total = 0;
    for (const auto& e : edges) total += exact_length({e.x, e.y});
    return CapacityValue::exact(total);
  }
  std::int64_t whole = 0;
  double irrational = 0.0;
  std::size_t terms = 0;
  for (const auto& e : edges) {
    std::int64_t sq = checked_add(checked_mul(e.x, e.x), checked_mul(e.y, e.y));
    if (std::int64_t s = exact_isqrt(sq); s >= 0) {
      whole = checked_add(whole, s);
    } else {
      irrational += std::sqrt(static_cast<double>(sq));
      ++terms;
    }
  }
  if (terms == 0) return CapacityValue::exact(whole);
  double total = static_cast<double>(whole) + irrational;
  return CapacityValue::approx(total, static_cast<double>(terms + 1) * kEps * total);
}

CapacityValue Norm::dual_length(const RationalPoint& covector) const {
  switch (kind_) {
    case Kind::Euclidean: {
      double x = covector.x.to_double(), y = covector.y.to_double();
      double len = std::hypot(x, y);
      if (covector.x.is_zero() || covector.y.is_zero()) {
        return CapacityValue::exact(covector.x.is_zero() ? abs(covector.y) : abs(covector.x));
      }
      return CapacityValue::approx(len, 4 * len * kEps);
    }
    case Kind::WeightedL1:
      return CapacityValue::exact(
          max(Rational(2) * abs(covector.x) / a_, Rational(2) * abs(covector.y) / b_));
    case Kind::Polygonal:
      break;
  }
  Rational best = dot(unit_ball_.front(), covector);
  for (const auto& v : unit_ball_) best = max(best, dot(v, covector));
  return CapacityValue::exact(best);
}

Norm Norm::dual() const {
  if (kind_ == Kind::Euclidean) return *this;
  return polygonal(dual_ball_);
}

CapacityValue Norm::unit_ball_area() const {
  if (kind_ == Kind::Euclidean) return CapacityValue::approx(std::numbers::pi, kEps * 4);
  return CapacityValue::exact(polygon_area(unit_ball_));
}

CapacityValue Norm::dual_ball_area() const {
  if (kind_ == Kind::Euclidean) return CapacityValue::approx(std::numbers::pi, kEps * 4);
  return CapacityValue::exact(polygon_area(dual_ball_));
}

double Norm::unit_ball_radius() const {
  if (kind_ == Kind::Euclidean) return 1.0;
  double r = 0.0;
  for (const auto& v : unit_ball_) r = std::max(r, std::hypot(v.x.to_double(), v.y.to_double()));
  return r * (1 + 1e-12) + 1e-12;
}

std::string Norm::describe() const {
  switch (kind_) {
    case Kind::Euclidean:
      return "euclidean";
    case Kind::WeightedL1:
      return "l1:" + a_.to_string() + "," + b_.to_string();
    case Kind::Polygonal:
      break;
  }
  std::string s = "poly:[";
  for (std::size_t i = 0; i < unit_ball_.size(); ++i) {
    if (i) s += ",";
    s += "[" + unit_ball_[i].x.to_string() + "," + unit_ball_[i].y.to_string() + "]";
  }
  return s + "]";
}

Rational polygon_area(std::span<const RationalPoint> vertices) {
  Rational twice = 0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return abs(twice) / 2;
}

}  // namespace echcap
