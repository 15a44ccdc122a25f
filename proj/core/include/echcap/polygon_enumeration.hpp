#pragma once

#include <cstdint>
#include <vector>

#include "echcap/capacity_value.hpp"
#include "echcap/lattice_polygon.hpp"
#include "echcap/norm.hpp"

namespace echcap {

inline constexpr std::uint64_t kDefaultNodeLimit = 10'000'000;

/// Which polygons qualify for a target lattice-point count N.
enum class CountRule {
  Exact,   ///< |P ∩ Z^2| == N
  AtLeast  ///< |P ∩ Z^2| >= N (exploratory; disables count pruning)
};

struct EnumerationOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  CountRule count_rule = CountRule::Exact;
};

/// All canonical convex lattice polygons (points and segments included) with
/// the requested lattice-point count and norm perimeter <= length_budget,
/// sorted by vertex list. For Euclidean norms a polygon whose perimeter ties
/// the budget within its error bound is included.
///
/// Throws ToricEnumerationBudgetExceeded once the search visits more than
/// options.node_limit nodes.
std::vector<LatticePolygon> enumerate_polygons(std::int64_t target_count, const Norm& norm,
                                               const CapacityValue& length_budget,
                                               const EnumerationOptions& options = {});

}  // namespace echcap
