#include "echcap/toric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "polygon_search.hpp"

namespace echcap {
namespace {

std::optional<LatticePolygon> trimmed_rectangle(std::int64_t m, std::int64_t n,
                                                std::int64_t target) {
  const std::int64_t excess = (m + 1) * (n + 1) - target;
  std::vector<LatticePoint> v;
  if (excess < 0) return std::nullopt;
  if (excess == 0) {
    v = {{0, 0}, {m, 0}, {m, n}, {0, n}};
  } else if (n >= 1 && excess <= m) {
    // Cut `excess` points off the right end of the top row.
    v = {{0, 0}, {m, 0}, {m, n - 1}, {m - excess, n}, {0, n}};
  } else if (m >= 1 && excess <= n) {
    // Cut `excess` points off the top of the right column.
    v = {{0, 0}, {m, 0}, {m, n - excess}, {m - 1, n}, {0, n}};
  } else {
    return std::nullopt;
  }
  std::vector<LatticePoint> dedup;
  for (const auto& p : v) {
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
  }
  LatticePolygon poly = LatticePolygon::from_vertices(std::move(dedup));
  if (poly.lattice_point_count() != target) return std::nullopt;
  return poly;
}

bool better_witness(const LatticePolygon& a, const LatticePolygon& b) {
  if (a.vertices().size() != b.vertices().size()) {
    return a.vertices().size() < b.vertices().size();
  }
  return a < b;
}

template <class Cost>
typename Cost::value_type scaled_perimeter(const Cost& cost, const LatticePolygon& p) {
  typename Cost::value_type total{};
  for (const auto& e : p.edges()) {
    std::int64_t g = std::gcd(e.x, e.y);
    total += static_cast<typename Cost::value_type>(g) * cost.cost({e.x / g, e.y / g});
  }
  return total;
}

void require_k(std::int64_t k) {
  if (k < 0) throw InvalidArgument("capacity index must be >= 0");
}

}  // namespace

LatticePolygon toric_seed_polygon(const Norm& norm, std::int64_t k) {
  require_k(k);
  const std::int64_t target = k + 1;
  if (target == 1) return LatticePolygon();

  std::vector<LatticePolygon> options;
  for (std::int64_t m = 0; m < target; ++m) {
    std::int64_t n = (target + m) / (m + 1) - 1;  // least n with (m+1)(n+1) >= target
    if (auto p = trimmed_rectangle(m, n, target)) options.push_back(*p);
  }
  options.push_back(LatticePolygon::from_vertices({{0, 0}, {k, k}}));
  options.push_back(LatticePolygon::from_vertices({{0, 0}, {k, -k}}));

  const LatticePolygon* best = &options.front();
  CapacityValue best_len = best->perimeter(norm);
  for (const auto& p : options) {
    CapacityValue len = p.perimeter(norm);
    Comparison c = compare(len, best_len);
    bool take = c == Comparison::Less ||
                ((c == Comparison::Equal || c == Comparison::Tie) && better_witness(p, *best));
    if (take) {
      best = &p;
      best_len = len;
    }
  }
  return *best;
}

ToricResult toric_capacity(const Norm& norm, std::int64_t k, const ToricOptions& options) {
  require_k(k);
  const std::int64_t target = k + 1;
  ToricResult result{CapacityValue(), LatticePolygon(), 1, 0};
  if (target == 1) return result;

  LatticePolygon seed = toric_seed_polygon(norm, k);

  if (norm.is_exact()) {
    detail::ScaledExactCost cost(norm);
    std::int64_t best = scaled_perimeter(cost, seed);
    LatticePolygon witness = seed;
    // Strict improvement only: the first minimizer found in canonical search
    // order is kept.
    std::int64_t budget = best - 1;
    detail::PolygonSearch search(norm, cost, target, options.count_rule, options.node_limit,
                                 budget);
    search.run([&](const detail::Candidate& c, std::int64_t used) {
      if (used < best) {
        best = used;
        witness = LatticePolygon::from_edge_runs(c.runs);
        budget = used - 1;
      }
    });
    result.value = CapacityValue::exact(cost.unscale(best));
    result.witness = std::move(witness);
    result.nodes = search.nodes();
    return result;
  }

  detail::EuclideanCost cost;
  double best = scaled_perimeter(cost, seed);
  double budget = best;
  std::vector<LatticePolygon> ties{seed};
  auto tolerance = [](double v) { return detail::EuclideanCost::kSlack * std::max(1.0, v); };
  detail::PolygonSearch search(norm, cost, target, options.count_rule, options.node_limit, budget);
  search.run([&](const detail::Candidate& c, double used) {
    if (used < best - tolerance(best)) {
      best = used;
      budget = used;
      ties.clear();
      ties.push_back(LatticePolygon::from_edge_runs(c.runs));
    } else if (std::abs(used - best) <= tolerance(best)) {
      ties.push_back(LatticePolygon::from_edge_runs(c.runs));
    }
  });
  std::sort(ties.begin(), ties.end());
  ties.erase(std::unique(ties.begin(), ties.end()), ties.end());
  auto chosen = std::min_element(ties.begin(), ties.end(), better_witness);
  result.witness = *chosen;
  result.value = result.witness.perimeter(norm);
  result.tied_candidates = ties.size();
  result.nodes = search.nodes();
  return result;
}

CapacitySequence toric_capacities(const Norm& norm, std::int64_t kmax,
                                  const ToricOptions& options) {
  require_k(kmax);
  std::vector<CapacityValue> entries;
  entries.reserve(static_cast<std::size_t>(kmax + 1));
  for (std::int64_t k = 0; k <= kmax; ++k) entries.push_back(toric_capacity(norm, k, options).value);
  return CapacitySequence(IndexOrigin::Distinguished, std::move(entries));
}

LabeledGenerator::LabeledGenerator(LatticePolygon polygon, std::vector<EdgeLabel> labels)
    : polygon_(std::move(polygon)), labels_(std::move(labels)) {
  if (labels_.size() != polygon_.edge_count()) {
    throw InvalidArgument("generator needs one label per edge: " +
                          std::to_string(polygon_.edge_count()) + " edges, " +
                          std::to_string(labels_.size()) + " labels");
  }
}

LabeledGenerator LabeledGenerator::all_e(LatticePolygon polygon) {
  std::vector<EdgeLabel> labels(polygon.edge_count(), EdgeLabel::e);
  return LabeledGenerator(std::move(polygon), std::move(labels));
}

std::size_t LabeledGenerator::h_count() const {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), EdgeLabel::h));
}

std::int64_t generator_grading(const LabeledGenerator& g) {
  return 2 * (g.polygon().lattice_point_count() - 1) - static_cast<std::int64_t>(g.h_count());
}

CapacityValue generator_action(const LabeledGenerator& g, const Norm& norm) {
  return g.polygon().perimeter(norm);
}

std::pair<ReebDirection, CapacityValue> reeb_orbit_data(const Norm& norm, std::int64_t m,
                                                        std::int64_t n) {
  if (std::gcd(m, n) != 1) {
    throw NotPrimitive("orbit class (" + std::to_string(m) + "," + std::to_string(n) +
                       ") is not primitive");
  }
  double r = std::hypot(static_cast<double>(m), static_cast<double>(n));
  ReebDirection dir{static_cast<double>(m) / r, static_cast<double>(n) / r,
                    4 * std::numeric_limits<double>::epsilon()};
  return {dir, norm.length({m, n})};
}

GradingMinimum min_action_at_grading(const Norm& norm, std::int64_t grading,
                                     const CapacityValue& budget,
                                     const EnumerationOptions& options) {
  if (grading < 0 || grading % 2 != 0) {
    throw InvalidArgument("grading must be even and nonnegative");
  }
  const std::int64_t k = grading / 2;
  GradingMinimum best{CapacityValue::infinity(), std::nullopt};
  // I = 2(c - 1) - #h with 0 <= #h <= #edges <= c, so c ranges over [k+1, 2k+2].
  for (std::int64_t c = k + 1; c <= 2 * k + 2; ++c) {
    const auto h = static_cast<std::size_t>(2 * (c - 1 - k));
    for (auto& poly : enumerate_polygons(c, norm, budget, options)) {
      if (poly.edge_count() < h) continue;
      CapacityValue action = poly.perimeter(norm);
      Comparison cmp = compare(action, best.value);
      bool take = cmp == Comparison::Less ||
                  (cmp == Comparison::Tie && action.value() < best.value.value());
      if (!take) continue;
      std::vector<EdgeLabel> labels(poly.edge_count(), EdgeLabel::e);
      std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(h), EdgeLabel::h);
      best.value = action;
      best.witness = LabeledGenerator(std::move(poly), std::move(labels));
    }
  }
  return best;
}

}  // namespace echcap
