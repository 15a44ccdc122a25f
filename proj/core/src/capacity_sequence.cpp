#include "echcap/capacity_sequence.hpp"

#include <string>

#include "echcap/errors.hpp"

namespace echcap {

CapacitySequence::CapacitySequence(IndexOrigin origin, std::vector<CapacityValue> entries)
    : origin_(origin), entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidArgument("capacity sequence needs at least one entry");
  if (compare(entries_.front(), CapacityValue()) == Comparison::Greater ||
      compare(entries_.front(), CapacityValue()) == Comparison::Less) {
    throw InvariantViolation("first capacity must be 0, got " + entries_.front().to_string());
  }
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (compare(entries_[i - 1], entries_[i]) == Comparison::Greater) {
      throw InvariantViolation("capacity sequence decreases at k=" +
                               std::to_string(first_index() + static_cast<std::int64_t>(i)) +
                               ": " + entries_[i - 1].to_string() + " > " +
                               entries_[i].to_string());
    }
  }
}

const CapacityValue& CapacitySequence::at(std::int64_t k) const {
  if (k < first_index() || k > kmax()) {
    throw InvalidArgument("index " + std::to_string(k) + " outside [" +
                          std::to_string(first_index()) + ", " + std::to_string(kmax()) + "]");
  }
  return entries_[static_cast<std::size_t>(k - first_index())];
}

CapacitySequence CapacitySequence::truncated(std::int64_t kmax) const {
  if (kmax < first_index()) throw InvalidArgument("truncation below the first index");
  if (kmax >= this->kmax()) return *this;
  return CapacitySequence(
      origin_, std::vector<CapacityValue>(entries_.begin(),
                                          entries_.begin() + (kmax - first_index() + 1)));
}

}  // namespace echcap
