#include "echcap/polygon_enumeration.hpp"

#include <algorithm>

#include "polygon_search.hpp"

namespace echcap {

std::vector<LatticePolygon> enumerate_polygons(std::int64_t target_count, const Norm& norm,
                                               const CapacityValue& length_budget,
                                               const EnumerationOptions& options) {
  if (target_count < 1) throw InvalidArgument("target lattice-point count must be >= 1");
  if (!length_budget.is_finite()) throw InvalidArgument("length budget must be finite");

  std::vector<LatticePolygon> out;
  // The point has no edges; it is the only polygon of perimeter 0.
  if (target_count == 1) out.emplace_back();

  auto collect = [&](const detail::Candidate& c, auto) {
    LatticePolygon p = LatticePolygon::from_edge_runs(c.runs);
    auto cmp = compare(p.perimeter(norm), length_budget);
    if (cmp != Comparison::Greater) out.push_back(std::move(p));
  };

  if (norm.is_exact()) {
    detail::ScaledExactCost cost(norm);
    auto budget = length_budget.is_exact()
                      ? cost.scale_budget(length_budget.rational())
                      : cost.scale_budget(length_budget.value() + length_budget.error());
    detail::PolygonSearch search(norm, cost, target_count, options.count_rule, options.node_limit,
                                 budget);
    search.run(collect);
  } else {
    detail::EuclideanCost cost;
    double budget = length_budget.value() + length_budget.error();
    detail::PolygonSearch search(norm, cost, target_count, options.count_rule, options.node_limit,
                                 budget);
    search.run(collect);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace echcap
