#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "echcap/capacity_value.hpp"

namespace echcap {

/// Distinguished spectra start at k = 0 with c_0 = 0; full spectra start at
/// k = 1 with c~_1 = 0.
enum class IndexOrigin : int { Distinguished = 0, Full = 1 };

/// Nondecreasing sequence of capacities c_origin, ..., c_kmax.
///
/// The constructor checks monotonicity and the zero first entry, so every
/// CapacitySequence in circulation satisfies both. Approximate neighbours are
/// accepted unless they are decreasing beyond their error bounds.
class CapacitySequence {
 public:
  CapacitySequence(IndexOrigin origin, std::vector<CapacityValue> entries);

  IndexOrigin origin() const { return origin_; }
  std::int64_t first_index() const { return static_cast<std::int64_t>(origin_); }
  std::int64_t kmax() const { return first_index() + static_cast<std::int64_t>(entries_.size()) - 1; }

  /// Entry at index k, first_index() <= k <= kmax().
  const CapacityValue& at(std::int64_t k) const;
  std::span<const CapacityValue> entries() const { return entries_; }

  /// Sequence restricted to indices <= kmax.
  CapacitySequence truncated(std::int64_t kmax) const;

  friend bool operator==(const CapacitySequence&, const CapacitySequence&) = default;

 private:
  IndexOrigin origin_;
  std::vector<CapacityValue> entries_;
};

}  // namespace echcap
