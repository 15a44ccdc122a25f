#include "echcap/obstructions.hpp"

#include <algorithm>
#include <functional>

#include "echcap/errors.hpp"

namespace echcap {
namespace {

void require_at_least(std::int64_t v, std::int64_t least, const char* what) {
  if (v < least) {
    throw InvalidArgument(std::string(what) + " must be >= " + std::to_string(least) + ", got " +
                          std::to_string(v));
  }
}

void require_radii(std::span<const Rational> radii) {
  if (radii.empty()) throw InvalidArgument("need at least one ball");
  for (const auto& a : radii) {
    if (a.sign() <= 0) throw InvalidArgument("ball sizes must be positive, got " + a.to_string());
  }
}

std::int64_t ball_threshold(std::int64_t d) { return (d * d + 3 * d + 2) / 2; }

}  // namespace

ObstructionVerdict embedding_obstruction(const Domain& inner, const Domain& outer,
                                         std::int64_t kmax, DominanceMode mode,
                                         const ToricOptions& toric) {
  require_at_least(kmax, 1, "kmax");
  auto lo = capacities(inner, kmax, toric);
  auto up = capacities(outer, kmax, toric);
  DominanceVerdict v = dominates(lo, up, mode);
  ObstructionVerdict out;
  out.kmax = kmax;
  if (!v.dominated) {
    out.obstructed = true;
    out.witness_k = v.k;
    out.lower = v.lower;
    out.upper = v.upper;
  }
  return out;
}

Rational f_lower_bound(const Rational& a, std::int64_t dmax) {
  require_at_least(dmax, 1, "dmax");
  if (a < Rational(1)) throw InvalidArgument("f is tabulated for a >= 1, got " + a.to_string());
  auto seq = nk_sequence(a, 1, ball_threshold(dmax));
  Rational best = 0;
  for (std::int64_t d = 1; d <= dmax; ++d) {
    best = max(best, seq[static_cast<std::size_t>(ball_threshold(d) - 1)].rational() / d);
  }
  return best;
}

Rational f_lower_bound_all_k(const Rational& a, std::int64_t kmax) {
  require_at_least(kmax, 2, "kmax");
  if (a < Rational(1)) throw InvalidArgument("f is tabulated for a >= 1, got " + a.to_string());
  auto inner = nk_sequence(a, 1, kmax);
  auto ball = nk_sequence(1, 1, kmax);
  Rational best = 0;
  for (std::size_t i = 1; i < inner.size(); ++i) {
    best = max(best, inner[i].rational() / ball[i].rational());
  }
  return best;
}

std::vector<LatticePoint> lambda_d_path(std::int64_t d) {
  require_at_least(d, 1, "d");
  const std::int64_t target = (d + 1) * (d + 2) / 2;
  std::vector<LatticePoint> hull;
  for (std::int64_t m = 0; m < target; ++m) {
    LatticePoint q{m, (target + m) / (m + 1) - 1};
    // Pop on strict right turns only; collinear set points stay on the path.
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 1] - hull[hull.size() - 2], q - hull.back()) < 0) {
      hull.pop_back();
    }
    hull.push_back(q);
  }
  return hull;
}

Rational g_d(const Rational& a, std::int64_t d) {
  if (a < Rational(1)) throw InvalidArgument("g is tabulated for a >= 1, got " + a.to_string());
  auto path = lambda_d_path(d);
  Rational best = a * path.front().x + path.front().y;
  for (const auto& p : path) best = min(best, a * p.x + p.y);
  return best / d;
}

Rational g_lower_bound(const Rational& a, std::int64_t dmax) {
  require_at_least(dmax, 1, "dmax");
  Rational best = g_d(a, 1);
  for (std::int64_t d = 2; d <= dmax; ++d) best = max(best, g_d(a, d));
  return best;
}

PackingReport packing_obstructions(std::span<const Rational> radii, std::int64_t dmax) {
  require_radii(radii);
  require_at_least(dmax, 1, "dmax");
  PackingReport report;
  std::vector<std::int64_t> tuple(radii.size(), 0);
  Rational best_ratio = -1;

  for (std::int64_t d = 1; d <= dmax; ++d) {
    std::function<void(std::size_t, std::int64_t, const Rational&)> walk =
        [&](std::size_t i, std::int64_t room, const Rational& lhs) {
          if (i == radii.size()) {
            PackingInequality q{tuple, d, lhs, lhs < Rational(d)};
            report.all_hold = report.all_hold && q.satisfied;
            if (Rational ratio = lhs / d; ratio > best_ratio) {
              best_ratio = ratio;
              report.binding = report.inequalities.size();
            }
            report.inequalities.push_back(std::move(q));
            return;
          }
          for (std::int64_t di = 0; di * di + di <= room; ++di) {
            tuple[i] = di;
            walk(i + 1, room - (di * di + di), lhs + radii[i] * di);
          }
          tuple[i] = 0;
        };
    walk(0, d * d + 3 * d, 0);
  }
  return report;
}

BiranVerdict biran_sufficiency(std::span<const Rational> radii, std::int64_t dmax) {
  require_radii(radii);
  require_at_least(dmax, 1, "dmax");
  BiranVerdict out;
  for (const auto& a : radii) out.volume_sum += a * a;
  if (out.volume_sum > Rational(1)) {
    out.status = BiranVerdict::Status::FailsVolume;
    return out;
  }

  std::vector<std::int64_t> tuple(radii.size(), 0);
  for (std::int64_t d = 1; d <= dmax; ++d) {
    bool failed = false;
    std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
        [&](std::size_t i, std::int64_t sum_left, std::int64_t squares_left) {
          if (failed) return;
          if (i + 1 == radii.size()) {
            if (sum_left * sum_left != squares_left) return;
            tuple[i] = sum_left;
            Rational lhs = 0;
            for (std::size_t j = 0; j < radii.size(); ++j) lhs += radii[j] * tuple[j];
            if (lhs > Rational(d)) failed = true;
            return;
          }
          for (std::int64_t di = 0; di <= sum_left && di * di <= squares_left; ++di) {
            tuple[i] = di;
            walk(i + 1, sum_left - di, squares_left - di * di);
            if (failed) return;
          }
        };
    walk(0, 3 * d - 1, d * d + 1);
    if (failed) {
      out.status = BiranVerdict::Status::FailsInequality;
      out.multipliers = tuple;
      out.d = d;
      return out;
    }
  }
  return out;
}

}  // namespace echcap
