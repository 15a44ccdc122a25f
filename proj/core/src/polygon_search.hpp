#pragma once

// Edge-vector search over convex lattice polygons.
//
// A convex lattice polygon up to translation is the same thing as a set of
// pairwise distinct primitive directions, each with a positive multiplicity,
// whose weighted sum is zero. Traversing the directions by increasing angle
// in [0, 2*pi) walks the boundary counterclockwise from its lowest-leftmost
// vertex, so every polygon is produced exactly once.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "echcap/errors.hpp"
#include "echcap/lattice_polygon.hpp"
#include "echcap/norm.hpp"
#include "echcap/polygon_enumeration.hpp"

namespace echcap::detail {

inline int half_plane(LatticePoint p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; }

inline bool angle_less(LatticePoint a, LatticePoint b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return a.x * b.y - a.y * b.x > 0;
}

/// Exact norm lengths scaled to integers: ||v|| = max_i <L_i, v> / denominator.
class ScaledExactCost {
 public:
  using value_type = std::int64_t;

  explicit ScaledExactCost(const Norm& norm) {
    denominator_ = 1;
    for (const auto& w : norm.dual_ball()) {
      denominator_ = checked_lcm(denominator_, w.x.den());
      denominator_ = checked_lcm(denominator_, w.y.den());
    }
    for (const auto& w : norm.dual_ball()) {
      functionals_.push_back({checked_mul(w.x.num(), denominator_ / w.x.den()),
                              checked_mul(w.y.num(), denominator_ / w.y.den())});
    }
  }

  value_type cost(LatticePoint v) const {
    value_type best = functionals_.front().x * v.x + functionals_.front().y * v.y;
    for (const auto& f : functionals_) best = std::max(best, f.x * v.x + f.y * v.y);
    return best;
  }

  /// Largest scaled value <= the exact budget.
  value_type scale_budget(const Rational& budget) const {
    return (budget * Rational(denominator_)).floor();
  }
  value_type scale_budget(double budget) const {
    return static_cast<value_type>(std::floor(budget * static_cast<double>(denominator_) + 1e-9));
  }
  Rational unscale(value_type v) const { return Rational(v, denominator_); }
  bool within(value_type c, value_type budget) const { return c <= budget; }
  double as_double(value_type v) const {
    return static_cast<double>(v) / static_cast<double>(denominator_);
  }

 private:
  std::int64_t denominator_;
  std::vector<LatticePoint> functionals_;
};

/// Euclidean lengths in double precision. Comparisons against the budget
/// carry a small relative slack so that exact ties are never pruned.
class EuclideanCost {
 public:
  using value_type = double;
  static constexpr double kSlack = 1e-9;

  value_type cost(LatticePoint v) const {
    return std::sqrt(static_cast<double>(v.x * v.x + v.y * v.y));
  }
  bool within(value_type c, value_type budget) const {
    return c <= budget + kSlack * std::max(1.0, budget);
  }
  double as_double(value_type v) const { return v; }
};

struct Candidate {
  std::vector<EdgeRun> runs;
  std::int64_t lattice_points;
};

/// Depth-first search over angle-ordered edge runs. The visitor is called
/// once per closed polygon as visitor(candidate, perimeter) and may shrink
/// the budget (branch and bound) through the reference it was given.
template <class Cost>
class PolygonSearch {
 public:
  using T = typename Cost::value_type;

  PolygonSearch(const Norm& norm, const Cost& cost, std::int64_t target, CountRule rule,
                std::uint64_t node_limit, T& budget)
      : cost_(cost), target_(target), rule_(rule), node_limit_(node_limit), budget_(budget) {
    build_directions(norm);
  }

  template <class Visitor>
  void run(Visitor&& visit) {
    runs_.clear();
    descend(0, LatticePoint{}, T{}, 0, 0, visit);
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  struct Direction {
    LatticePoint v;
    T cost;
  };

  void build_directions(const Norm& norm) {
    // Any edge of a closed polygon has length at most half the perimeter, and
    // |v|_inf <= radius(unit ball) * ||v||.
    double half = cost_.as_double(budget_) / 2.0;
    auto reach = static_cast<std::int64_t>(std::floor(norm.unit_ball_radius() * half + 1e-9)) + 1;
    for (std::int64_t x = -reach; x <= reach; ++x) {
      for (std::int64_t y = -reach; y <= reach; ++y) {
        if ((x == 0 && y == 0) || std::gcd(x, y) != 1) continue;
        LatticePoint v{x, y};
        T c = cost_.cost(v);
        if (cost_.within(c + c, budget_)) directions_.push_back({v, c});
      }
    }
    std::sort(directions_.begin(), directions_.end(),
              [](const Direction& a, const Direction& b) { return angle_less(a.v, b.v); });
  }

  template <class Visitor>
  void descend(std::size_t start, LatticePoint sum, T spent, std::int64_t twice_area,
               std::int64_t boundary, Visitor& visit) {
    if (++nodes_ > node_limit_) {
      throw ToricEnumerationBudgetExceeded(
          "polygon enumeration exceeded the node limit of " + std::to_string(node_limit_),
          nodes_);
    }
    for (std::size_t j = start; j < directions_.size(); ++j) {
      const Direction& d = directions_[j];
      // The lowest-leftmost vertex leaves along an edge pointing into the
      // upper half plane (or along the positive x-axis).
      if (runs_.empty() && half_plane(d.v) == 1) break;
      const bool lower = half_plane(d.v) == 1;
      const std::int64_t turn = sum.x * d.v.y - sum.y * d.v.x;
      for (std::int64_t t = 1;; ++t) {
        LatticePoint next{sum.x + t * d.v.x, sum.y + t * d.v.y};
        T used = spent + static_cast<T>(t) * d.cost;
        LatticePoint back{-next.x, -next.y};
        bool closed = next.x == 0 && next.y == 0;
        T home = closed ? T{} : cost_.cost(back);
        // spent + ||way home|| is nondecreasing in t.
        if (!cost_.within(used + home, budget_)) break;
        std::int64_t area = twice_area + t * turn;
        std::int64_t bnd = boundary + t;
        if (closed) {
          std::int64_t points = (area + bnd) / 2 + 1;
          if (rule_ == CountRule::Exact ? points == target_ : points >= target_) {
            runs_.push_back({d.v, t});
            visit(Candidate{runs_, points}, used);
            runs_.pop_back();
          }
          break;
        }
        if (rule_ == CountRule::Exact) {
          // The hull of the partial boundary sits inside the final polygon.
          std::int64_t partial = (area + bnd + std::gcd(next.x, next.y)) / 2 + 1;
          if (partial > target_) break;
        }
        // Once the traversal is in the lower half plane the remaining edges
        // all point downward, so the way home must too.
        if (lower && !(back.y < 0 && d.v.x * back.y - d.v.y * back.x > 0)) continue;
        runs_.push_back({d.v, t});
        descend(j + 1, next, used, area, bnd, visit);
        runs_.pop_back();
      }
    }
  }

  const Cost& cost_;
  std::int64_t target_;
  CountRule rule_;
  std::uint64_t node_limit_;
  T& budget_;
  std::vector<Direction> directions_;
  std::vector<EdgeRun> runs_;
  std::uint64_t nodes_ = 0;
};

}  // namespace echcap::detail
