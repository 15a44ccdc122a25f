#include "echcap/lattice_polygon.hpp"

#include <algorithm>
#include <numeric>

#include "echcap/errors.hpp"

namespace echcap {
namespace {

int half_plane(LatticePoint p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; }

bool angle_less(LatticePoint a, LatticePoint b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

std::vector<LatticePoint> canonicalize(std::vector<LatticePoint> v) {
  auto lowest = std::min_element(v.begin(), v.end());
  std::rotate(v.begin(), lowest, v.end());
  LatticePoint origin = v.front();
  for (auto& p : v) p = p - origin;
  return v;
}

}  // namespace

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }

std::int64_t cross(LatticePoint a, LatticePoint b) {
  return checked_add(checked_mul(a.x, b.y), -checked_mul(a.y, b.x));
}

LatticePolygon::LatticePolygon() : vertices_{{0, 0}} {}

LatticePolygon LatticePolygon::from_vertices(std::vector<LatticePoint> vertices) {
  if (vertices.empty()) throw InvalidArgument("polygon needs at least one vertex");
  if (vertices.size() == 1) return LatticePolygon(canonicalize(std::move(vertices)));
  if (vertices.size() == 2) {
    if (vertices[0] == vertices[1]) throw InvalidArgument("segment endpoints coincide");
    return LatticePolygon(canonicalize(std::move(vertices)));
  }
  const std::size_t n = vertices.size();
  std::vector<LatticePoint> edges(n);
  for (std::size_t i = 0; i < n; ++i) edges[i] = vertices[(i + 1) % n] - vertices[i];
  for (std::size_t i = 0; i < n; ++i) {
    if (edges[i] == LatticePoint{}) throw InvalidArgument("repeated polygon vertex");
    if (cross(edges[i], edges[(i + 1) % n]) <= 0) {
      throw InvalidArgument("polygon vertices must be strictly convex and counterclockwise");
    }
  }
  // All left turns; the edge directions must also wind exactly once.
  auto first = std::min_element(edges.begin(), edges.end(), angle_less) - edges.begin();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!angle_less(edges[(first + i) % n], edges[(first + i + 1) % n])) {
      throw InvalidArgument("polygon boundary winds more than once");
    }
  }
  return LatticePolygon(canonicalize(std::move(vertices)));
}

LatticePolygon LatticePolygon::from_edge_runs(std::span<const EdgeRun> runs) {
  if (runs.empty()) return LatticePolygon();
  std::vector<LatticePoint> vertices;
  LatticePoint at{};
  for (std::size_t i = 0; i < runs.size(); ++i) {
    const auto& r = runs[i];
    if (r.multiplicity <= 0) throw InvalidArgument("edge multiplicity must be positive");
    if (gcd_abs(r.direction.x, r.direction.y) != 1) {
      throw InvalidArgument("edge direction must be primitive");
    }
    if (i > 0 && !angle_less(runs[i - 1].direction, r.direction)) {
      throw InvalidArgument("edge directions must be distinct and ordered by angle");
    }
    vertices.push_back(at);
    at = at + LatticePoint{checked_mul(r.direction.x, r.multiplicity),
                           checked_mul(r.direction.y, r.multiplicity)};
  }
  if (!(at == LatticePoint{})) throw InvalidArgument("edge runs do not close up");
  if (runs.size() == 1) throw InvalidArgument("a single edge run cannot close up");
  if (runs.size() == 2) {
    // Segment: the two runs are v and -v.
    return LatticePolygon(canonicalize({vertices[0], vertices[1]}));
  }
  return LatticePolygon(canonicalize(std::move(vertices)));
}

LatticePolygon::Degeneracy LatticePolygon::degeneracy() const {
  if (vertices_.size() == 1) return Degeneracy::Point;
  if (vertices_.size() == 2) return Degeneracy::Segment;
  return Degeneracy::Proper;
}

std::vector<LatticePoint> LatticePolygon::edges() const {
  std::vector<LatticePoint> e;
  if (vertices_.size() == 1) return e;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    e.push_back(vertices_[(i + 1) % vertices_.size()] - vertices_[i]);
  }
  return e;
}

std::size_t LatticePolygon::edge_count() const {
  return vertices_.size() == 1 ? 0 : vertices_.size();
}

std::int64_t LatticePolygon::boundary_point_count() const {
  if (vertices_.size() == 1) return 1;
  std::int64_t b = 0;
  for (const auto& e : edges()) b += gcd_abs(e.x, e.y);
  return b;
}

std::int64_t LatticePolygon::twice_area() const {
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    twice = checked_add(twice, cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  }
  return twice;
}

Rational LatticePolygon::area() const { return Rational(twice_area(), 2); }

std::int64_t LatticePolygon::lattice_point_count() const {
  // Pick: A = I + B/2 - 1, so I + B = (2A + B)/2 + 1. For a segment 2A = 0 and
  // B counts both traversals, giving B/2 + 1 = gcd + 1.
  if (vertices_.size() == 1) return 1;
  return (twice_area() + boundary_point_count()) / 2 + 1;
}

CapacityValue LatticePolygon::perimeter(const Norm& norm) const {
  auto e = edges();
  return norm.path_length(e);
}

std::string LatticePolygon::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) s += ",";
    s += "[" + std::to_string(vertices_[i].x) + "," + std::to_string(vertices_[i].y) + "]";
  }
  return s + "]";
}

}  // namespace echcap
