#include "echcap/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "echcap/errors.hpp"
#include "overloaded.hpp"

namespace echcap {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool has_toric(const Domain& domain) {
  return std::visit(detail::Overloaded{
                        [](const ToricNorm&) { return true; },
                        [](const DisjointUnion& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(), has_toric);
                        },
                        [](const auto&) { return false; },
                    },
                    domain.variant());
}

CapacityValue square(const CapacityValue& c) {
  if (c.is_exact()) return CapacityValue::exact(c.rational() * c.rational());
  if (!c.is_finite()) return c;
  double v = c.value() * c.value();
  return CapacityValue::approx(v, 2 * c.value() * c.error() + c.error() * c.error() + v * kEps);
}

double ratio_of(const CapacityValue& c, std::int64_t k, const CapacityValue& vol) {
  if (c.is_exact() && vol.is_exact()) {
    try {
      return (c.rational() * c.rational() / (Rational(4 * k) * vol.rational())).to_double();
    } catch (const ArithmeticOverflow&) {
    }
  }
  return c.value() * c.value() / (4.0 * static_cast<double>(k) * vol.value());
}

}  // namespace

CapacityValue volume(const Domain& domain) {
  return std::visit(
      detail::Overloaded{
          [](const Ellipsoid& e) { return CapacityValue::exact(e.a * e.b / 2); },
          [](const Ball& b) { return CapacityValue::exact(b.a * b.a / 2); },
          [](const Polydisk& p) { return CapacityValue::exact(p.a * p.b); },
          [](const ToricNorm& t) { return t.norm.dual_ball_area(); },
          [](const DisjointUnion& u) {
            CapacityValue total;
            for (const auto& p : u.parts) total = total + volume(p);
            return total;
          },
      },
      domain.variant());
}

bool is_exploratory(const Domain& domain) {
  return std::visit(detail::Overloaded{
                        [](const Polydisk&) { return true; },
                        [](const DisjointUnion& u) {
                          return std::any_of(u.parts.begin(), u.parts.end(), is_exploratory);
                        },
                        [](const auto&) { return false; },
                    },
                    domain.variant());
}

VolumeReport volume_ratio_trace(const Domain& domain, std::int64_t kmax, std::int64_t stride,
                                const AsymptoticsOptions& options) {
  if (kmax < 1) throw InvalidArgument("kmax must be >= 1");
  if (stride < 1) throw InvalidArgument("stride must be >= 1");
  VolumeReport r;
  r.domain = domain.describe();
  r.vol_x = volume(domain);
  r.vol_y = Rational(2) * r.vol_x;
  r.kmax = kmax;
  r.truncated = has_toric(domain);
  r.exploratory = is_exploratory(domain);

  auto seq = capacities(domain, r.kmax, options.toric);
  auto sample = [&](std::int64_t k) {
    r.trace.push_back({k, seq.at(k), ratio_of(seq.at(k), k, r.vol_x)});
  };
  for (std::int64_t k = stride; k <= r.kmax; k += stride) sample(k);
  if (r.trace.empty() || r.trace.back().k != r.kmax) sample(r.kmax);

  r.final_ratio = r.trace.back().ratio;
  const std::int64_t tail_start = r.kmax - r.kmax / 10;
  for (const auto& p : r.trace) {
    if (p.k >= tail_start) {
      r.max_deviation_last_decade = std::max(r.max_deviation_last_decade, std::abs(p.ratio - 1.0));
    }
  }
  return r;
}

QwResult qw_check(const Domain& domain, std::int64_t kmax, const AsymptoticsOptions& options) {
  if (kmax < 1) throw InvalidArgument("kmax must be >= 1");
  QwResult out;
  out.exploratory = is_exploratory(domain);
  const CapacityValue vol_y = Rational(2) * volume(domain);
  auto seq = capacities(domain, kmax, options.toric);
  for (std::int64_t k = 1; k <= kmax; ++k) {
    const CapacityValue& c = seq.at(k);
    Comparison cmp = compare(square(c), Rational(2 * k) * vol_y);
    if (cmp == Comparison::Less) continue;
    out.status = cmp == Comparison::Tie ? QwResult::Status::Undecided : QwResult::Status::ViolatedAt;
    out.k = k;
    out.capacity = c;
    return out;
  }
  out.k = kmax;
  return out;
}

WeinsteinBound weinstein_bound(const Domain& domain, const ToricOptions& toric) {
  WeinsteinBound w;
  w.square = Rational(4) * volume(domain);  // 2 vol(Y) = 4 vol(X)
  double root = std::sqrt(w.square.value());
  w.bound = CapacityValue::approx(root, root * 2 * kEps + w.square.error() / (2 * root));
  w.c1 = capacities(domain, 1, toric).at(1);
  w.c1_below = compare(square(w.c1), w.square) == Comparison::Less;
  return w;
}

}  // namespace echcap
