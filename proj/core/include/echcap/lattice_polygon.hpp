#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "echcap/capacity_value.hpp"
#include "echcap/norm.hpp"

namespace echcap {

/// Primitive direction with a positive multiplicity; one polygon edge.
struct EdgeRun {
  LatticePoint direction;
  std::int64_t multiplicity = 1;
};

/// Convex polygon with integer vertices, possibly a point or a segment, in
/// canonical position: vertices counterclockwise starting at the
/// lexicographically smallest one, which sits at the origin.
class LatticePolygon {
 public:
  enum class Degeneracy { Point, Segment, Proper };

  /// The single point (0,0).
  LatticePolygon();

  /// Validates and canonicalizes. Proper polygons must be strictly convex
  /// and counterclockwise; a single vertex is a Point and two distinct
  /// vertices a Segment.
  static LatticePolygon from_vertices(std::vector<LatticePoint> vertices);
  /// Builds the polygon whose boundary traverses the given runs in order.
  /// Directions must be pairwise distinct and ordered by angle; the total
  /// displacement must be zero.
  static LatticePolygon from_edge_runs(std::span<const EdgeRun> runs);

  Degeneracy degeneracy() const;
  const std::vector<LatticePoint>& vertices() const { return vertices_; }

  /// Edge vectors of the closed boundary traversal. A segment [0, v] has the
  /// two edges v and -v; a point has none.
  std::vector<LatticePoint> edges() const;
  std::size_t edge_count() const;

  /// Lattice points on the boundary (sum of edge gcds; 1 for a point).
  std::int64_t boundary_point_count() const;
  std::int64_t twice_area() const;
  Rational area() const;
  /// |P ∩ Z^2| for the closed region, via Pick's theorem.
  std::int64_t lattice_point_count() const;
  CapacityValue perimeter(const Norm& norm) const;

  /// JSON-style literal "[[x,y],...]".
  std::string to_string() const;

  friend auto operator<=>(const LatticePolygon&, const LatticePolygon&) = default;

 private:
  explicit LatticePolygon(std::vector<LatticePoint> canonical) : vertices_(std::move(canonical)) {}

  std::vector<LatticePoint> vertices_;
};

std::int64_t gcd_abs(std::int64_t a, std::int64_t b);
std::int64_t cross(LatticePoint a, LatticePoint b);

}  // namespace echcap
