#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "echcap/capacities.hpp"
#include "echcap/domain.hpp"

namespace echcap {

struct ObstructionVerdict {
  bool obstructed = false;
  std::int64_t witness_k = 0;  // first failing index when obstructed
  CapacityValue lower;         // c_k(inner) at witness_k
  CapacityValue upper;         // c_k(outer) at witness_k
  std::int64_t kmax = 0;       // range that was checked
};

/// Obstructed iff capacities(inner) fails to be dominated by
/// capacities(outer) for some k <= kmax.
ObstructionVerdict embedding_obstruction(const Domain& inner, const Domain& outer,
                                         std::int64_t kmax, DominanceMode mode,
                                         const ToricOptions& toric = {});

/// max_{d=1..dmax} (a,1)_{(d^2+3d+2)/2} / d, a lower bound for the
/// ellipsoid-into-ball function f(a).
Rational f_lower_bound(const Rational& a, std::int64_t dmax);
/// max_{k=2..kmax} (a,1)_k / (1,1)_k; matches f_lower_bound when kmax is a
/// ball threshold (d^2+3d+2)/2.
Rational f_lower_bound_all_k(const Rational& a, std::int64_t kmax);

/// Lower-left boundary chain of the hull of {(m,n) : (m+1)(n+1) >=
/// (d+1)(d+2)/2}, by increasing m. Lattice points of the set lying on the
/// hull boundary are kept even where the chain is straight.
std::vector<LatticePoint> lambda_d_path(std::int64_t d);
/// g_d(a) = min over the path of (am+n)/d.
Rational g_d(const Rational& a, std::int64_t d);
/// max_{d=1..dmax} g_d(a), a lower bound for the polydisk-into-ball function g(a).
Rational g_lower_bound(const Rational& a, std::int64_t dmax);

struct PackingInequality {
  std::vector<std::int64_t> multipliers;  // d_1..d_n
  std::int64_t d = 0;
  Rational lhs;                            // sum d_i a_i
  bool satisfied = true;                   // sum d_i a_i < d
};

struct PackingReport {
  std::vector<PackingInequality> inequalities;  // in enumeration order
  bool all_hold = true;
  /// Index of the inequality with the largest sum d_i a_i / d.
  std::size_t binding = 0;
};

/// Every tuple (d_1..d_n, d) with 1 <= d <= dmax and sum(d_i^2 + d_i) <=
/// d^2 + 3d, tested against sum d_i a_i < d. Ordered by d, then
/// lexicographically by multipliers.
PackingReport packing_obstructions(std::span<const Rational> radii, std::int64_t dmax);

struct BiranVerdict {
  enum class Status { Sufficient, FailsVolume, FailsInequality };
  Status status = Status::Sufficient;
  std::vector<std::int64_t> multipliers;  // failing tuple
  std::int64_t d = 0;
  Rational volume_sum;                    // sum a_i^2
};

/// Checks sum a_i^2 <= 1, then sum d_i a_i <= d over every tuple with
/// sum d_i = 3d - 1 and sum d_i^2 = d^2 + 1, d <= dmax.
BiranVerdict biran_sufficiency(std::span<const Rational> radii, std::int64_t dmax);

}  // namespace echcap
