#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "echcap/capacity_sequence.hpp"
#include "echcap/domain.hpp"
#include "echcap/toric.hpp"

namespace echcap {

/// (a,b)_1, ..., (a,b)_kmax: the values am+bn over m,n >= 0 in ascending
/// order, counted with repetition.
std::vector<CapacityValue> nk_sequence(const Rational& a, const Rational& b, std::int64_t kmax);

struct TriangleRank {
  std::int64_t k;       // lattice points (m',n') >= 0 with am'+bn' <= am+bn
  CapacityValue value;  // am+bn
};

/// Rank of am+bn by counting lattice points in the triangle cut off by the
/// line of slope -a/b through (m,n). On ties this is the largest rank
/// carrying the value.
TriangleRank nk_via_triangle(const Rational& a, const Rational& b, std::int64_t m, std::int64_t n);

/// c_k(E(a,b)) = (a,b)_{k+1}, k = 0..kmax.
CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, std::int64_t kmax);
/// c~_k(E(a,b)) = (a,b)_k, k = 1..kmax.
CapacitySequence ellipsoid_full_capacities(const Rational& a, const Rational& b,
                                           std::int64_t kmax);
/// c_k(B(a)) = d*a where (d^2+d)/2 <= k <= (d^2+3d)/2.
CapacitySequence ball_capacities(const Rational& a, std::int64_t kmax);
/// c_k(P(a,b)) = min{am+bn : (m+1)(n+1) >= k+1}.
CapacitySequence polydisk_capacities(const Rational& a, const Rational& b, std::int64_t kmax);

/// (f * g)_k = max_{i+j=k} f_i + g_j on distinguished sequences.
CapacitySequence max_plus_convolve(const CapacitySequence& f, const CapacitySequence& g,
                                   std::int64_t kmax);
/// Capacities of a disjoint union from those of its parts. Throws
/// MismatchedIndexOrigin if any input is a full spectrum.
CapacitySequence disjoint_union_capacities(std::span<const CapacitySequence> parts,
                                           std::int64_t kmax);

/// Distinguished capacities c_0..c_kmax of any model domain.
CapacitySequence capacities(const Domain& domain, std::int64_t kmax,
                            const ToricOptions& toric = {});

enum class DominanceMode { Weak, InteriorStrict };

struct DominanceVerdict {
  bool dominated = true;
  std::int64_t k = 0;  // first violating index when !dominated
  CapacityValue lower;
  CapacityValue upper;
};

/// lower_k <= upper_k over the common range; InteriorStrict also needs
/// lower_k < upper_k wherever lower_k is finite, except at the first index
/// where both spectra are 0 by definition. Throws ApproxTie when an
/// approximate comparison cannot be decided and MismatchedIndexOrigin when
/// the origins differ.
DominanceVerdict dominates(const CapacitySequence& lower, const CapacitySequence& upper,
                           DominanceMode mode);

}  // namespace echcap
