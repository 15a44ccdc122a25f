#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "echcap/capacity_value.hpp"
#include "echcap/rational.hpp"

namespace echcap {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
  friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
  friend LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x - b.x, a.y - b.y}; }
  friend LatticePoint operator-(LatticePoint a) { return {-a.x, -a.y}; }
};

struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

/// A symmetric convex gauge on R^2.
///
/// Euclidean lengths of lattice vectors are exact when the vector has integer
/// length and approximate otherwise; the other two kinds are always exact.
/// WeightedL1(a,b) is ||(q1,q2)|| = a|q1|/2 + b|q2|/2. Polygonal norms are
/// given by the vertices of their unit ball, which must be a centrally
/// symmetric strictly convex polygon with rational vertices.
class Norm {
 public:
  enum class Kind { Euclidean, WeightedL1, Polygonal };

  static Norm euclidean();
  static Norm weighted_l1(const Rational& a, const Rational& b);
  /// Vertices in any cyclic order; stored counterclockwise starting from the
  /// vertex after the positive x-axis.
  static Norm polygonal(std::vector<RationalPoint> unit_ball);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ != Kind::Euclidean; }
  const Rational& l1_a() const { return a_; }
  const Rational& l1_b() const { return b_; }

  /// ||v|| for an integer vector.
  CapacityValue length(LatticePoint v) const;
  /// ||v|| for a rational vector (exact kinds only).
  Rational exact_length(const RationalPoint& v) const;
  /// Sum of ||e|| over the given vectors. Euclidean sums are exact when every
  /// vector has integer length.
  CapacityValue path_length(std::span<const LatticePoint> edges) const;

  /// ||zeta||* = max <zeta, v> over the unit ball.
  CapacityValue dual_length(const RationalPoint& covector) const;
  /// The dual norm itself (Euclidean is self-dual).
  Norm dual() const;

  /// Unit-ball vertices, counterclockwise (empty for Euclidean).
  const std::vector<RationalPoint>& unit_ball() const { return unit_ball_; }
  /// Vertices of the dual unit ball, counterclockwise (empty for Euclidean).
  /// ||v|| = max_i <w_i, v> over these vertices.
  const std::vector<RationalPoint>& dual_ball() const { return dual_ball_; }

  CapacityValue unit_ball_area() const;
  /// Area of the dual unit ball; this is the volume of the toric domain.
  CapacityValue dual_ball_area() const;

  /// Euclidean radius of the unit ball, rounded up; bounds |v|_inf <=
  /// radius * ||v||.
  double unit_ball_radius() const;

  std::string describe() const;

  friend bool operator==(const Norm&, const Norm&) = default;

 private:
  Norm() = default;
  void build_dual_ball();

  Kind kind_ = Kind::Euclidean;
  Rational a_{};
  Rational b_{};
  std::vector<RationalPoint> unit_ball_;
  std::vector<RationalPoint> dual_ball_;
};

/// Area of a polygon given by its vertices in cyclic order (shoelace).
Rational polygon_area(std::span<const RationalPoint> vertices);

}  // namespace echcap
