#pragma once

#include <string>
#include <variant>
#include <vector>

#include "echcap/norm.hpp"
#include "echcap/rational.hpp"

namespace echcap {

class Domain;

/// E(a,b) = {pi|z1|^2/a + pi|z2|^2/b <= 1}.
struct Ellipsoid {
  Rational a;
  Rational b;
};

/// B(a) = E(a,a).
struct Ball {
  Rational a;
};

/// P(a,b) = {pi|z1|^2 <= a, pi|z2|^2 <= b}.
struct Polydisk {
  Rational a;
  Rational b;
};

/// Unit dual-norm ball bundle over the flat 2-torus.
struct ToricNorm {
  Norm norm;
};

struct DisjointUnion {
  std::vector<Domain> parts;
};

/// Four-dimensional model domain. Size parameters are validated positive on
/// construction.
class Domain {
 public:
  using Variant = std::variant<Ellipsoid, Ball, Polydisk, ToricNorm, DisjointUnion>;

  static Domain ellipsoid(const Rational& a, const Rational& b);
  static Domain ball(const Rational& a);
  static Domain polydisk(const Rational& a, const Rational& b);
  static Domain toric(Norm norm);
  static Domain disjoint_union(std::vector<Domain> parts);

  const Variant& variant() const { return variant_; }

  /// Multiplies every size parameter by lambda > 0. Toric domains are not
  /// scalable through this interface and raise InvalidArgument.
  Domain scaled(const Rational& lambda) const;

  /// Textual form accepted by the CLI spec parser.
  std::string describe() const;

 private:
  explicit Domain(Variant v) : variant_(std::move(v)) {}

  Variant variant_;
};

}  // namespace echcap
