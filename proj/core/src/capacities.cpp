#include "echcap/capacities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "echcap/errors.hpp"
#include "overloaded.hpp"

namespace echcap {
namespace {

// a = A/D and b = B/D over a common denominator, so am+bn = (Am+Bn)/D.
struct ScaledWeights {
  std::int64_t A;
  std::int64_t B;
  std::int64_t D;

  ScaledWeights(const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) {
      throw InvalidArgument("weights must be positive, got " + a.to_string() + ", " +
                            b.to_string());
    }
    D = checked_lcm(a.den(), b.den());
    A = checked_mul(a.num(), D / a.den());
    B = checked_mul(b.num(), D / b.den());
  }

  CapacityValue value(std::int64_t scaled) const { return CapacityValue::exact(Rational(scaled, D)); }
};

// Number of (m,n) >= 0 with Am + Bn <= L, stopping once `cap` is reached.
std::int64_t count_below(const ScaledWeights& w, std::int64_t L, std::int64_t cap) {
  std::int64_t total = 0;
  for (std::int64_t m = 0; w.A * m <= L; ++m) {
    total += (L - w.A * m) / w.B + 1;
    if (total >= cap) return total;
  }
  return total;
}

void require_kmax(std::int64_t kmax, std::int64_t least) {
  if (kmax < least) {
    throw InvalidArgument("kmax must be >= " + std::to_string(least) + ", got " +
                          std::to_string(kmax));
  }
}

std::int64_t ball_multiplier(std::int64_t k) {
  // Least d >= 0 with (d^2 + 3d)/2 >= k.
  auto d = static_cast<std::int64_t>(std::floor((std::sqrt(9.0 + 8.0 * static_cast<double>(k)) - 3.0) / 2.0));
  if (d < 0) d = 0;
  while (d > 0 && (d - 1) * (d - 1) + 3 * (d - 1) >= 2 * k) --d;
  while (d * d + 3 * d < 2 * k) ++d;
  return d;
}

// Exact entries over one common denominator, if it fits.
std::optional<std::int64_t> common_denominator(std::span<const CapacityValue> entries,
                                              std::int64_t den) {
  try {
    for (const auto& v : entries) {
      if (!v.is_exact()) return std::nullopt;
      den = checked_lcm(den, v.rational().den());
    }
  } catch (const ArithmeticOverflow&) {
    return std::nullopt;
  }
  return den;
}

}  // namespace

std::vector<CapacityValue> nk_sequence(const Rational& a, const Rational& b, std::int64_t kmax) {
  require_kmax(kmax, 1);
  ScaledWeights w(a, b);
  double ratio = static_cast<double>(std::max(w.A, w.B)) / static_cast<double>(std::min(w.A, w.B));
  auto steps = static_cast<std::int64_t>(std::ceil(std::sqrt(2.0 * static_cast<double>(kmax) * ratio)));
  std::int64_t L = checked_mul(checked_add(w.A, w.B), std::max<std::int64_t>(steps, 1));
  while (count_below(w, L, kmax) < kmax) L = checked_mul(L, 2);

  std::vector<std::int64_t> values;
  for (std::int64_t m = 0; w.A * m <= L; ++m) {
    for (std::int64_t v = w.A * m; v <= L; v += w.B) values.push_back(v);
  }
  std::sort(values.begin(), values.end());
  values.resize(static_cast<std::size_t>(kmax));

  std::vector<CapacityValue> out;
  out.reserve(values.size());
  for (auto v : values) out.push_back(w.value(v));
  return out;
}

TriangleRank nk_via_triangle(const Rational& a, const Rational& b, std::int64_t m,
                             std::int64_t n) {
  if (m < 0 || n < 0) throw InvalidArgument("triangle vertex must be in N^2");
  ScaledWeights w(a, b);
  std::int64_t L = checked_add(checked_mul(w.A, m), checked_mul(w.B, n));
  return {count_below(w, L, std::numeric_limits<std::int64_t>::max()), w.value(L)};
}

CapacitySequence ellipsoid_capacities(const Rational& a, const Rational& b, std::int64_t kmax) {
  require_kmax(kmax, 0);
  return CapacitySequence(IndexOrigin::Distinguished, nk_sequence(a, b, kmax + 1));
}

CapacitySequence ellipsoid_full_capacities(const Rational& a, const Rational& b,
                                           std::int64_t kmax) {
  require_kmax(kmax, 1);
  return CapacitySequence(IndexOrigin::Full, nk_sequence(a, b, kmax));
}

CapacitySequence ball_capacities(const Rational& a, std::int64_t kmax) {
  require_kmax(kmax, 0);
  if (a.sign() <= 0) throw InvalidArgument("ball parameter must be positive");
  std::vector<CapacityValue> out;
  out.reserve(static_cast<std::size_t>(kmax + 1));
  for (std::int64_t k = 0; k <= kmax; ++k) out.push_back(CapacityValue::exact(ball_multiplier(k) * a));
  return CapacitySequence(IndexOrigin::Distinguished, std::move(out));
}

CapacitySequence polydisk_capacities(const Rational& a, const Rational& b, std::int64_t kmax) {
  require_kmax(kmax, 0);
  ScaledWeights w(a, b);
  auto cost = [&](std::int64_t m, std::int64_t target) {
    std::int64_t n = (target + m) / (m + 1) - 1;  // least n with (m+1)(n+1) >= target
    return checked_add(checked_mul(w.A, m), checked_mul(w.B, n));
  };
  std::vector<CapacityValue> out;
  out.reserve(static_cast<std::size_t>(kmax + 1));
  for (std::int64_t k = 0; k <= kmax; ++k) {
    const std::int64_t target = k + 1;
    // Seed near the continuous optimum, then scan every m with Am <= best.
    auto guess = static_cast<std::int64_t>(
        std::sqrt(static_cast<double>(target) * static_cast<double>(w.B) / static_cast<double>(w.A)));
    guess = std::clamp<std::int64_t>(guess - 1, 0, k);
    std::int64_t best = cost(guess, target);
    for (std::int64_t m = 0; m <= k && w.A * m <= best; ++m) best = std::min(best, cost(m, target));
    out.push_back(w.value(best));
  }
  return CapacitySequence(IndexOrigin::Distinguished, std::move(out));
}

CapacitySequence max_plus_convolve(const CapacitySequence& f, const CapacitySequence& g,
                                   std::int64_t kmax) {
  if (f.origin() != IndexOrigin::Distinguished || g.origin() != IndexOrigin::Distinguished) {
    throw MismatchedIndexOrigin("disjoint unions combine distinguished spectra only");
  }
  require_kmax(kmax, 0);
  if (f.kmax() < kmax || g.kmax() < kmax) {
    throw InvalidArgument("convolution inputs must be defined up to kmax");
  }
  const auto n = static_cast<std::size_t>(kmax + 1);
  auto fe = f.entries().first(n), ge = g.entries().first(n);

  if (auto fd = common_denominator(fe, 1)) {
    if (auto gd = common_denominator(ge, *fd)) {
      const std::int64_t den = *gd;
      auto scale = [den](std::span<const CapacityValue> e) {
        std::vector<std::int64_t> s;
        s.reserve(e.size());
        for (const auto& v : e) s.push_back(checked_mul(v.rational().num(), den / v.rational().den()));
        return s;
      };
      try {
        auto fs = scale(fe), gs = scale(ge);
        std::vector<CapacityValue> out;
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
          std::int64_t best = fs[k] + gs[0];
          for (std::size_t i = 0; i <= k; ++i) best = std::max(best, fs[i] + gs[k - i]);
          out.push_back(CapacityValue::exact(Rational(best, den)));
        }
        return CapacitySequence(IndexOrigin::Distinguished, std::move(out));
      } catch (const ArithmeticOverflow&) {
        // fall through to the generic path
      }
    }
  }

  std::vector<CapacityValue> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    CapacityValue best = fe[k] + ge[0];
    for (std::size_t i = 0; i <= k; ++i) best = max(best, fe[i] + ge[k - i]);
    out.push_back(best);
  }
  return CapacitySequence(IndexOrigin::Distinguished, std::move(out));
}

CapacitySequence disjoint_union_capacities(std::span<const CapacitySequence> parts,
                                           std::int64_t kmax) {
  if (parts.empty()) throw InvalidArgument("disjoint union needs at least one part");
  for (const auto& p : parts) {
    if (p.origin() != IndexOrigin::Distinguished) {
      throw MismatchedIndexOrigin("full ECH spectra do not satisfy the disjoint union law");
    }
  }
  CapacitySequence acc = parts.front().truncated(kmax);
  if (acc.kmax() < kmax) throw InvalidArgument("union part not defined up to kmax");
  for (std::size_t i = 1; i < parts.size(); ++i) acc = max_plus_convolve(acc, parts[i], kmax);
  return acc;
}

CapacitySequence capacities(const Domain& domain, std::int64_t kmax, const ToricOptions& toric) {
  require_kmax(kmax, 0);
  return std::visit(
      detail::Overloaded{
          [&](const Ellipsoid& e) { return ellipsoid_capacities(e.a, e.b, kmax); },
          [&](const Ball& b) { return ball_capacities(b.a, kmax); },
          [&](const Polydisk& p) { return polydisk_capacities(p.a, p.b, kmax); },
          [&](const ToricNorm& t) { return toric_capacities(t.norm, kmax, toric); },
          [&](const DisjointUnion& u) {
            std::vector<CapacitySequence> parts;
            parts.reserve(u.parts.size());
            for (const auto& p : u.parts) parts.push_back(capacities(p, kmax, toric));
            return disjoint_union_capacities(parts, kmax);
          },
      },
      domain.variant());
}

DominanceVerdict dominates(const CapacitySequence& lower, const CapacitySequence& upper,
                           DominanceMode mode) {
  if (lower.origin() != upper.origin()) {
    throw MismatchedIndexOrigin("dominance needs sequences with the same index origin");
  }
  const std::int64_t first = lower.first_index();
  const std::int64_t last = std::min(lower.kmax(), upper.kmax());
  for (std::int64_t k = first; k <= last; ++k) {
    const auto& lo = lower.at(k);
    const auto& up = upper.at(k);
    Comparison c = compare(lo, up);
    if (c == Comparison::Tie) {
      throw ApproxTie("cannot decide " + lo.to_string() + " vs " + up.to_string() + " at k=" +
                          std::to_string(k) + " within error bounds",
                      k);
    }
    bool violated = c == Comparison::Greater;
    if (mode == DominanceMode::InteriorStrict && k > first && lo.is_finite() &&
        c == Comparison::Equal) {
      violated = true;
    }
    if (violated) return {false, k, lo, up};
  }
  return {true, last, {}, {}};
}

}  // namespace echcap
