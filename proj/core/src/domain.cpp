#include "echcap/domain.hpp"

#include "echcap/errors.hpp"
#include "overloaded.hpp"

namespace echcap {
namespace {

using detail::Overloaded;

void require_positive(const Rational& r, const char* what) {
  if (r.sign() <= 0) {
    throw InvalidArgument(std::string(what) + " must be positive, got " + r.to_string());
  }
}

}  // namespace

Domain Domain::ellipsoid(const Rational& a, const Rational& b) {
  require_positive(a, "ellipsoid parameter a");
  require_positive(b, "ellipsoid parameter b");
  return Domain(Ellipsoid{a, b});
}

Domain Domain::ball(const Rational& a) {
  require_positive(a, "ball parameter a");
  return Domain(Ball{a});
}

Domain Domain::polydisk(const Rational& a, const Rational& b) {
  require_positive(a, "polydisk parameter a");
  require_positive(b, "polydisk parameter b");
  return Domain(Polydisk{a, b});
}

Domain Domain::toric(Norm norm) { return Domain(ToricNorm{std::move(norm)}); }

Domain Domain::disjoint_union(std::vector<Domain> parts) {
  if (parts.empty()) throw InvalidArgument("disjoint union needs at least one part");
  return Domain(DisjointUnion{std::move(parts)});
}

Domain Domain::scaled(const Rational& lambda) const {
  require_positive(lambda, "scale factor");
  return std::visit(
      Overloaded{
          [&](const Ellipsoid& e) { return ellipsoid(lambda * e.a, lambda * e.b); },
          [&](const Ball& b) { return ball(lambda * b.a); },
          [&](const Polydisk& p) { return polydisk(lambda * p.a, lambda * p.b); },
          [&](const ToricNorm&) -> Domain {
            throw InvalidArgument("toric domains cannot be scaled by parameter");
          },
          [&](const DisjointUnion& u) {
            std::vector<Domain> parts;
            for (const auto& p : u.parts) parts.push_back(p.scaled(lambda));
            return disjoint_union(std::move(parts));
          },
      },
      variant_);
}

std::string Domain::describe() const {
  return std::visit(
      Overloaded{
          [](const Ellipsoid& e) {
            return "ellipsoid(" + e.a.to_string() + "," + e.b.to_string() + ")";
          },
          [](const Ball& b) { return "ball(" + b.a.to_string() + ")"; },
          [](const Polydisk& p) {
            return "polydisk(" + p.a.to_string() + "," + p.b.to_string() + ")";
          },
          [](const ToricNorm& t) { return "toric(" + t.norm.describe() + ")"; },
          [](const DisjointUnion& u) {
            std::string s = "union(";
            for (std::size_t i = 0; i < u.parts.size(); ++i) {
              if (i) s += ";";
              s += u.parts[i].describe();
            }
            return s + ")";
          },
      },
      variant_);
}

}  // namespace echcap
