#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "echcap/capacities.hpp"
#include "echcap/domain.hpp"

namespace echcap {

/// vol(X) = (1/2) ∫ ω∧ω: ab/2 for E(a,b), a^2/2 for B(a), ab for P(a,b),
/// the dual unit-ball area for toric domains (π, approximate, for the
/// Euclidean norm), and the sum over parts for unions.
CapacityValue volume(const Domain& domain);

/// True for domains involving a polydisk, which is not quite a Liouville
/// domain; numerical results for those are labelled exploratory.
bool is_exploratory(const Domain& domain);

struct TracePoint {
  std::int64_t k;
  CapacityValue capacity;
  double ratio;  // c_k^2 / (4 k vol(X))
};

struct AsymptoticsOptions {
  ToricOptions toric{};
};

struct VolumeReport {
  std::string domain;
  CapacityValue vol_x;
  CapacityValue vol_y;  // = 2 vol(X), the contact volume of the boundary
  std::vector<TracePoint> trace;
  double final_ratio = 0.0;
  /// max |ratio - 1| over trace points in the final tenth of the k range.
  double max_deviation_last_decade = 0.0;
  std::int64_t kmax = 0;
  /// Set for domains with a toric part: polygon search keeps those traces at
  /// small k, far from the limit, so the trend is reported and not asserted.
  bool truncated = false;
  bool exploratory = false;
};

/// Samples c_k^2/(4k vol) at k = stride, 2*stride, ... and at the final k.
VolumeReport volume_ratio_trace(const Domain& domain, std::int64_t kmax, std::int64_t stride,
                                const AsymptoticsOptions& options = {});

struct QwResult {
  enum class Status { HoldsUpTo, ViolatedAt, Undecided };
  Status status = Status::HoldsUpTo;
  std::int64_t k = 0;  // kmax checked, or the first violating/undecided k
  CapacityValue capacity;
  bool exploratory = false;
};

/// Checks c_k < sqrt(2k vol(Y)) for k = 1..kmax, squared so exact
/// capacities are compared exactly.
QwResult qw_check(const Domain& domain, std::int64_t kmax, const AsymptoticsOptions& options = {});

struct WeinsteinBound {
  CapacityValue bound;   // sqrt(2 vol(Y))
  CapacityValue square;  // 2 vol(Y)
  CapacityValue c1;
  bool c1_below = false;
};

WeinsteinBound weinstein_bound(const Domain& domain, const ToricOptions& toric = {});

}  // namespace echcap
