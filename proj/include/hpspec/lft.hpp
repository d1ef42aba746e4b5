#pragma once

#include <array>
#include <optional>
#include <string>

#include "hpspec/cayley.hpp"
#include "hpspec/complex_math.hpp"
#include "hpspec/fourier_side.hpp"
#include "hpspec/functions.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

// w -> mu w + w0 with mu > 0; the identity is allowed (conjugators may be trivial).
struct AffineMap {
  double mu = 1.0;
  cplx w0{};

  cplx operator()(cplx w) const { return mu * w + w0; }
  AffineMap inverse() const { return {1.0 / mu, -w0 / mu}; }
  // (*this o inner)(w) = mu (inner(w)) + w0
  AffineMap after(const AffineMap& inner) const { return {mu * inner.mu, mu * inner.w0 + w0}; }
  bool is_identity() const { return mu == 1.0 && w0 == cplx{}; }
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

// A bounded linear fractional self-map of the upper half-plane fixing infinity.
class LFTMap {
 public:
  // Throws NotSelfMap (mu <= 0 or Im w0 < 0) or IdentityMap.
  static LFTMap make(double mu, cplx w0);
  // Reduces (a w + b)/(c w + d). Throws InvalidArgument for ad - bc = 0,
  // NotBounded for c != 0 or a/d not a positive real, NotSelfMap for
  // Im(b/d) < 0, IdentityMap for the identity.
  static LFTMap from_coefficients(cplx a, cplx b, cplx c, cplx d);

  double mu() const noexcept { return affine_.mu; }
  cplx w0() const noexcept { return affine_.w0; }
  const AffineMap& affine() const noexcept { return affine_; }
  const std::optional<std::array<cplx, 4>>& raw() const noexcept { return raw_; }

  cplx operator()(cplx w) const { return affine_(w); }
  ExtendedPoint operator()(ExtendedPoint w) const;
  // The inverse is a self-map only for automorphisms; throws NotSelfMap otherwise.
  LFTMap inverse() const;

  bool is_parabolic() const noexcept { return affine_.mu == 1.0; }
  bool is_automorphism() const noexcept { return affine_.w0.imag() == 0.0; }

 private:
  explicit LFTMap(AffineMap m) : affine_(m) {}
  AffineMap affine_;
  std::optional<std::array<cplx, 4>> raw_;
};

enum class MapKind {
  ParabolicAutomorphism,
  ParabolicNonAutomorphism,
  HyperbolicAutomorphism,
  HyperbolicNonAutomorphism,
};
std::string to_string(MapKind kind);

enum class FixedPointRole { Attractive, Repulsive, Neutral };
std::string to_string(FixedPointRole role);

struct FixedPoint {
  ExtendedPoint point;
  double multiplier = 1.0;   // |tau'| at the point; 1/mu at infinity
  FixedPointRole role = FixedPointRole::Neutral;
};

struct MapClass {
  MapKind kind;
  FixedPoint at_infinity;
  std::optional<FixedPoint> finite;
};

MapClass classify(const LFTMap& map);

// tau'(infinity) = 1/mu
double angular_derivative_infinity(const LFTMap& map);

// tau1(w) = w/mu + i(1-mu)/mu and tau2(w) = mu w + i(1-mu), for mu in (0, 1).
LFTMap tau1(double mu);
LFTMap tau2(double mu);

enum class CanonicalForm { Translation, Dilation, Tau1, Tau2 };
std::string to_string(CanonicalForm form);

struct Conjugation {
  LFTMap canonical;
  AffineMap conjugator;     // map = conjugator o canonical o conjugator^{-1}
  CanonicalForm form;
  double form_mu = 1.0;     // the parameter of the tau1/tau2 family, or the slope
};

Conjugation normalize_conjugation(const LFTMap& map);

// Whether map is tau1(mu)/tau2(mu) for some mu in (0,1), to relative
// tolerance tol on the translation part.
std::optional<double> match_tau1(const LFTMap& map, double tol = 1e-12);
std::optional<double> match_tau2(const LFTMap& map, double tol = 1e-12);

struct FourierOpDescriptor {
  enum class Kind { Multiplication, ScaledDilation };
  Kind kind;
  cplx w0{};        // Multiplication symbol e^{i w0 t}
  double mu = 1.0;  // ScaledDilation f -> (1/mu) f(t/mu)

  cplx symbol(double t) const { return std::exp(I * w0 * t); }
  FourierSideFunction apply(const FourierSideFunction& f) const;
};

// Translations and pure dilations only; throws NotCanonical otherwise.
FourierOpDescriptor fourier_descriptor(const LFTMap& map, const SpaceParams& space);

// F o tau, exact in the closed-form family.
ClosedFormFunction apply_composition(const AffineMap& map, const ClosedFormFunction& F);
inline ClosedFormFunction apply_composition(const LFTMap& map, const ClosedFormFunction& F) {
  return apply_composition(map.affine(), F);
}

struct AdjointDescriptor {
  double scalar;
  LFTMap map;
};

// C_{tau2}^* = mu^{-(a+2)} C_{tau1} on Hardy/Bergman spaces. Throws WrongForm
// unless map is tau2(mu), InvalidSpace for Dirichlet.
AdjointDescriptor adjoint_descriptor(const LFTMap& map, const SpaceParams& space);

}  // namespace hpspec
