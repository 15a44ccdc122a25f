#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "echcap/capacity_sequence.hpp"
#include "echcap/capacity_value.hpp"
#include "echcap/lattice_polygon.hpp"
#include "echcap/norm.hpp"
#include "echcap/polygon_enumeration.hpp"

namespace echcap {

struct ToricOptions {
  std::uint64_t node_limit = kDefaultNodeLimit;
  /// AtLeast minimizes over polygons with >= k+1 lattice points instead of
  /// exactly k+1. Report-only; the capacity is defined with Exact.
  CountRule count_rule = CountRule::Exact;
};

struct ToricResult {
  CapacityValue value;
  LatticePolygon witness;
  /// Number of minimizers found within the approximate error bound (1 for
  /// exact norms). Above 1, the witness was chosen by fewest vertices and
  /// then lexicographic vertex order.
  std::size_t tied_candidates = 1;
  std::uint64_t nodes = 0;
};

/// Minimum norm-perimeter over convex lattice polygons enclosing exactly k+1
/// lattice points, with a minimizing polygon. This is c_k of the toric
/// domain whose fibres are the unit ball of the dual norm.
ToricResult toric_capacity(const Norm& norm, std::int64_t k, const ToricOptions& options = {});

/// toric_capacity for k = 0..kmax as a distinguished sequence.
CapacitySequence toric_capacities(const Norm& norm, std::int64_t kmax,
                                  const ToricOptions& options = {});

/// Cheapest polygon available without search: a rectangle with at least k+1
/// points, trimmed along one side to exactly k+1, or a segment.
LatticePolygon toric_seed_polygon(const Norm& norm, std::int64_t k);

enum class EdgeLabel : char { e = 'e', h = 'h' };

/// Convex lattice polygon with an 'e'/'h' label per edge (two edges for a
/// segment, none for a point).
class LabeledGenerator {
 public:
  LabeledGenerator(LatticePolygon polygon, std::vector<EdgeLabel> labels);
  static LabeledGenerator all_e(LatticePolygon polygon);

  const LatticePolygon& polygon() const { return polygon_; }
  const std::vector<EdgeLabel>& labels() const { return labels_; }
  std::size_t h_count() const;

 private:
  LatticePolygon polygon_;
  std::vector<EdgeLabel> labels_;
};

/// I = 2(|P ∩ Z^2| - 1) - #h.
std::int64_t generator_grading(const LabeledGenerator& g);
/// Norm-perimeter of the polygon; labels carry no action.
CapacityValue generator_action(const LabeledGenerator& g, const Norm& norm);

struct ReebDirection {
  double cos_theta;
  double sin_theta;
  double error;
};

/// Unit direction of the Morse-Bott orbit family in class (m,n) and its
/// action ||(m,n)||. Throws NotPrimitive unless gcd(|m|,|n|) = 1.
std::pair<ReebDirection, CapacityValue> reeb_orbit_data(const Norm& norm, std::int64_t m,
                                                        std::int64_t n);

struct GradingMinimum {
  CapacityValue value;  // infinity if nothing fits in the budget
  std::optional<LabeledGenerator> witness;
};

/// Minimum action over labeled generators of the given even grading whose
/// action is within the budget. Computed by plain enumeration, independent of
/// toric_capacity's branch and bound.
GradingMinimum min_action_at_grading(const Norm& norm, std::int64_t grading,
                                     const CapacityValue& budget,
                                     const EnumerationOptions& options = {});

}  // namespace echcap
