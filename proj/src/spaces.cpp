#include "hpspec/spaces.hpp"

#include <cmath>
#include <cstdio>

#include "hpspec/error.hpp"

namespace hpspec {

std::string to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Hardy: return "hardy";
    case SpaceKind::Bergman: return "bergman";
    case SpaceKind::Dirichlet: return "dirichlet";
  }
  return "unknown";
}

SpaceParams SpaceParams::bergman(double alpha) { return make(SpaceKind::Bergman, alpha); }

SpaceParams SpaceParams::dirichlet(double alpha) { return make(SpaceKind::Dirichlet, alpha); }

SpaceParams SpaceParams::make(SpaceKind kind, double alpha) {
  if (!std::isfinite(alpha)) throw Error(ErrorCode::InvalidSpace, "alpha must be finite");
  switch (kind) {
    case SpaceKind::Hardy:
      if (alpha != -1.0) throw Error(ErrorCode::InvalidSpace, "the Hardy space has alpha = -1");
      break;
    case SpaceKind::Bergman:
    case SpaceKind::Dirichlet:
      if (!(alpha > -1.0)) {
        throw Error(ErrorCode::InvalidSpace, to_string(kind) + " spaces require alpha > -1");
      }
      break;
  }
  return SpaceParams(kind, alpha);
}

double SpaceParams::fourier_weight_exponent() const noexcept {
  return kind_ == SpaceKind::Dirichlet ? alpha_ - 1.0 : alpha_ + 1.0;
}

std::string SpaceParams::name() const {
  if (kind_ == SpaceKind::Hardy) return "H^2";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(alpha=%g)", kind_ == SpaceKind::Bergman ? "A^2" : "D^2", alpha_);
  return buf;
}

NormalizationConstants normalization_constants(const SpaceParams& space, ConstantSet set) {
  if (space.kind() == SpaceKind::Dirichlet) {
    throw Error(ErrorCode::InvalidSpace, "no J/kernel constants for Dirichlet spaces");
  }
  if (space.kind() == SpaceKind::Hardy) {
    const double sp = std::sqrt(kPi);
    return {cplx{1.0 / sp, 0.0}, cplx{0.0, 2.0 * sp}, cplx{0.0, 1.0 / (2.0 * kPi)}, 2.0 * kPi, 1.0};
  }
  const double a = space.alpha();
  const double b = fourier_norm_constant(space, set);
  const cplx c = std::pow(2.0, a + 1.0);
  if (set == ConstantSet::Printed) {
    return {c, cplx{0.0, 2.0}, cplx{0.0, (a + 1.0) * std::pow(2.0, a)}, b, a + 1.0};
  }
  const double nu = (a + 1.0) / kPi;
  const cplx d = 2.0 * ipow(a + 2.0);
  // k = nu c / conj(d)
  const cplx k = nu * c / std::conj(d);
  return {c, d, k, b, nu};
}

double fourier_norm_constant(const SpaceParams& space, ConstantSet set) {
  const double a = space.alpha();
  switch (space.kind()) {
    case SpaceKind::Hardy: return 2.0 * kPi;
    case SpaceKind::Bergman: return std::pow(2.0, -a) * kPi * std::tgamma(a + 1.0);
    case SpaceKind::Dirichlet: {
      const double printed = std::tgamma(a + 1.0) * std::pow(2.0, -a);
      return set == ConstantSet::Printed ? printed : kPi * printed;
    }
  }
  return 0.0;
}

}  // namespace hpspec
