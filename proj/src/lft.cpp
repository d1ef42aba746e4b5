#include "hpspec/lft.hpp"

#include "hpspec/error.hpp"

namespace hpspec {

LFTMap LFTMap::make(double mu, cplx w0) {
  if (!std::isfinite(mu) || !std::isfinite(w0.real()) || !std::isfinite(w0.imag())) {
    throw Error(ErrorCode::InvalidArgument, "map parameters must be finite");
  }
  if (!(mu > 0.0)) throw Error(ErrorCode::NotSelfMap, "slope mu must be positive");
  if (w0.imag() < 0.0) throw Error(ErrorCode::NotSelfMap, "Im w0 < 0 moves points out of the half-plane");
  if (mu == 1.0 && w0 == cplx{}) throw Error(ErrorCode::IdentityMap, "mu = 1 and w0 = 0");
  return LFTMap(AffineMap{mu, w0});
}

LFTMap LFTMap::from_coefficients(cplx a, cplx b, cplx c, cplx d) {
  if (a * d - b * c == cplx{}) throw Error(ErrorCode::InvalidArgument, "ad - bc = 0");
  if (c != cplx{}) throw Error(ErrorCode::NotBounded, "c != 0: the map does not fix infinity");
  const cplx slope = a / d;
  if (slope.imag() != 0.0 || !(slope.real() > 0.0)) {
    throw Error(ErrorCode::NotBounded, "slope a/d is not a positive real");
  }
  LFTMap m = make(slope.real(), b / d);
  m.raw_ = std::array<cplx, 4>{a, b, c, d};
  return m;
}

ExtendedPoint LFTMap::operator()(ExtendedPoint w) const {
  if (w.infinite) return w;
  return ExtendedPoint::finite(affine_(w.value));
}

LFTMap LFTMap::inverse() const {
  const AffineMap inv = affine_.inverse();
  return make(inv.mu, inv.w0.imag() == 0.0 ? cplx{inv.w0.real(), 0.0} : inv.w0);
}

std::string to_string(MapKind kind) {
  switch (kind) {
    case MapKind::ParabolicAutomorphism: return "ParabolicAutomorphism";
    case MapKind::ParabolicNonAutomorphism: return "ParabolicNonAutomorphism";
    case MapKind::HyperbolicAutomorphism: return "HyperbolicAutomorphism";
    case MapKind::HyperbolicNonAutomorphism: return "HyperbolicNonAutomorphism";
  }
  return "Unknown";
}

std::string to_string(FixedPointRole role) {
  switch (role) {
    case FixedPointRole::Attractive: return "attractive";
    case FixedPointRole::Repulsive: return "repulsive";
    case FixedPointRole::Neutral: return "neutral";
  }
  return "unknown";
}

std::string to_string(CanonicalForm form) {
  switch (form) {
    case CanonicalForm::Translation: return "translation";
    case CanonicalForm::Dilation: return "dilation";
    case CanonicalForm::Tau1: return "tau1";
    case CanonicalForm::Tau2: return "tau2";
  }
  return "unknown";
}

MapClass classify(const LFTMap& map) {
  const double mu = map.mu();
  MapClass out;
  out.at_infinity.point = ExtendedPoint::infinity();
  out.at_infinity.multiplier = 1.0 / mu;
  if (map.is_parabolic()) {
    out.kind = map.is_automorphism() ? MapKind::ParabolicAutomorphism : MapKind::ParabolicNonAutomorphism;
    out.at_infinity.role = FixedPointRole::Neutral;
    return out;
  }
  out.kind = map.is_automorphism() ? MapKind::HyperbolicAutomorphism : MapKind::HyperbolicNonAutomorphism;
  // tau'(p) = mu at the finite point, 1/mu at infinity
  const bool finite_attracts = mu < 1.0;
  out.at_infinity.role = finite_attracts ? FixedPointRole::Repulsive : FixedPointRole::Attractive;
  cplx p = map.w0() / (1.0 - mu);
  if (map.is_automorphism()) p = {p.real(), 0.0};
  out.finite = FixedPoint{ExtendedPoint::finite(p), mu,
                          finite_attracts ? FixedPointRole::Attractive : FixedPointRole::Repulsive};
  return out;
}

double angular_derivative_infinity(const LFTMap& map) { return 1.0 / map.mu(); }

LFTMap tau1(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "tau1 needs mu in (0, 1)");
  return LFTMap::make(1.0 / mu, {0.0, (1.0 - mu) / mu});
}

LFTMap tau2(double mu) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "tau2 needs mu in (0, 1)");
  return LFTMap::make(mu, {0.0, 1.0 - mu});
}

namespace {

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

std::optional<double> match_tau1(const LFTMap& map, double tol) {
  if (!(map.mu() > 1.0)) return std::nullopt;
  const double m = 1.0 / map.mu();
  if (close(map.w0().real(), 0.0, tol) && close(map.w0().imag(), (1.0 - m) / m, tol)) return m;
  return std::nullopt;
}

std::optional<double> match_tau2(const LFTMap& map, double tol) {
  const double m = map.mu();
  if (!(m < 1.0)) return std::nullopt;
  if (close(map.w0().real(), 0.0, tol) && close(map.w0().imag(), 1.0 - m, tol)) return m;
  return std::nullopt;
}

Conjugation normalize_conjugation(const LFTMap& map) {
  const double mu = map.mu();
  const cplx w0 = map.w0();
  if (map.is_parabolic()) return {map, AffineMap{}, CanonicalForm::Translation, 1.0};
  if (map.is_automorphism()) {
    // g(w) = w + w0/(1 - mu)
    return {LFTMap::make(mu, 0.0), AffineMap{1.0, w0.real() / (1.0 - mu)}, CanonicalForm::Dilation, mu};
  }
  if (mu > 1.0) {
    // g1(w) = mu'(1-mu')^{-1}((Im w0) w - Re w0), mu' = 1/mu, so mu'/(1-mu') = 1/(mu-1)
    const double m = 1.0 / mu;
    const double s = 1.0 / (mu - 1.0);
    return {tau1(m), AffineMap{s * w0.imag(), -s * w0.real()}, CanonicalForm::Tau1, m};
  }
  // g2(w) = (1-mu)^{-1}((Im w0) w + Re w0)
  const double s = 1.0 / (1.0 - mu);
  return {tau2(mu), AffineMap{s * w0.imag(), s * w0.real()}, CanonicalForm::Tau2, mu};
}

FourierSideFunction FourierOpDescriptor::apply(const FourierSideFunction& f) const {
  return kind == Kind::Multiplication ? f.multiplied_by_exponential(w0) : f.dilated(mu);
}

FourierOpDescriptor fourier_descriptor(const LFTMap& map, const SpaceParams&) {
  if (map.is_parabolic()) return {FourierOpDescriptor::Kind::Multiplication, map.w0(), 1.0};
  if (map.w0() == cplx{}) return {FourierOpDescriptor::Kind::ScaledDilation, cplx{}, map.mu()};
  throw Error(ErrorCode::NotCanonical, "only translations and pure dilations have a Fourier descriptor");
}

ClosedFormFunction apply_composition(const AffineMap& map, const ClosedFormFunction& F) {
  std::vector<HalfPlaneTerm> out;
  out.reserve(F.terms().size());
  for (const auto& term : F.terms()) {
    if (const auto* p = std::get_if<InversePowerTerm>(&term)) {
      // (mu w + w0 + sigma)^{-s} = mu^{-s} (w + (w0 + sigma)/mu)^{-s}
      out.emplace_back(InversePowerTerm{p->coeff * std::pow(map.mu, -p->exponent),
                                        (map.w0 + p->shift) / map.mu, p->exponent});
    } else {
      const FourierSideFunction f({std::get<FourierImageTerm>(term).density});
      for (const auto& t : f.multiplied_by_exponential(map.w0).dilated(map.mu).terms()) {
        out.emplace_back(FourierImageTerm{t});
      }
    }
  }
  return ClosedFormFunction(std::move(out));
}

AdjointDescriptor adjoint_descriptor(const LFTMap& map, const SpaceParams& space) {
  if (!space.has_kernel()) throw Error(ErrorCode::InvalidSpace, "adjoint relation needs a kernel space");
  const auto m = match_tau2(map);
  if (!m) throw Error(ErrorCode::WrongForm, "map is not of the form mu w + i(1 - mu)");
  return {std::pow(*m, -space.kernel_exponent()), tau1(*m)};
}

}  // namespace hpspec
