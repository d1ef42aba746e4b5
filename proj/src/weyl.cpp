#include "hpspec/weyl.hpp"

#include <algorithm>

#include "hpspec/error.hpp"
#include "hpspec/fourier_side.hpp"
#include "hpspec/functions.hpp"
#include "hpspec/kernels.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/quadrature.hpp"

namespace hpspec {

namespace {

void check_parabolic(cplx w0, double t0, int n) {
  if (!(t0 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "t0 must be >= 0");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (w0.imag() < 0.0) throw Error(ErrorCode::InvalidArgument, "Im w0 must be >= 0");
}

double eigen_exponent_base(const SpaceParams& space) {
  return space.kind() == SpaceKind::Dirichlet ? space.alpha() : space.kernel_exponent();
}

}  // namespace

double weyl_ratio_parabolic(const SpaceParams& space, cplx w0, double t0, int n) {
  check_parabolic(w0, t0, n);
  const double beta = space.fourier_weight_exponent();
  const double lo = 1.0 / (n + 1.0);
  const double hi = 1.0 / n;
  const double scale = std::exp(-2.0 * w0.imag() * t0);
  // |e^{i w0 t} - e^{i w0 t0}|^2 = e^{-2 Im w0 t0} |expm1(i w0 (t - t0))|^2, s = t - t0
  const auto& rule = quad::gauss_legendre(32);
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double s = mid + half * rule.nodes[k];
    const double w = rule.weights[k] * std::pow(t0 + s, -beta);
    num += w * std::norm(expm1(I * w0 * s));
    den += w;
  }
  return std::sqrt(scale * num / den);
}

double weyl_sup_bound_parabolic(cplx w0, double t0, int n) {
  check_parabolic(w0, t0, n);
  const double lo = 1.0 / (n + 1.0);
  const double hi = 1.0 / n;
  const double scale = std::exp(-w0.imag() * t0);
  double best = 0.0;
  constexpr int kSamples = 256;
  for (int k = 0; k <= kSamples; ++k) {
    const double s = lo + (hi - lo) * k / kSamples;
    best = std::max(best, std::abs(expm1(I * w0 * s)));
  }
  return scale * best;
}

double weyl_ratio_hyperbolic(const SpaceParams& space, double mu, double, int n) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1)");
  const double log_inv_mu = -std::log(mu);
  if (!(n > log_inv_mu)) {
    throw Error(ErrorCode::WindowViolation, "need n > ln(1/mu) for nested supports");
  }
  // |g|^2 x^{-beta} = x^{-1}, so every weighted integral of |g|^2 over [A, B]
  // is ln B - ln A. Work in u = ln x - ln a_n: g_n lives on [0, n] (since
  // ln a_{n-1} - ln a_n = n) and (1/mu) g_n(x/mu) = lambda g on [ln mu, n + ln mu].
  // On the overlap the two agree exactly; elsewhere the difference is +-lambda g.
  const double log_mu = std::log(mu);
  const double norm_g = n;
  const double image_lo = log_mu;
  const double image_hi = n + log_mu;
  const double overlap = std::max(0.0, std::min(norm_g, image_hi) - std::max(0.0, image_lo));
  const double lambda2 = std::pow(mu, -eigen_exponent_base(space));
  const double diff = lambda2 * ((image_hi - image_lo) - overlap) + lambda2 * (norm_g - overlap);
  return std::sqrt(diff / norm_g);
}

double weyl_ratio_hyperbolic_closed_form(const SpaceParams& space, double mu, int n) {
  const double lambda2 = std::pow(mu, -eigen_exponent_base(space));
  return std::sqrt(-2.0 * lambda2 * std::log(mu) / n);
}

double weyl_ratio_hyperbolic_direct(const SpaceParams& space, double mu, double phase, int n) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1)");
  if (!(n > -std::log(mu))) throw Error(ErrorCode::WindowViolation, "need n > ln(1/mu)");
  const double beta = space.fourier_weight_exponent();
  const double a_n = std::exp(-0.5 * n * (n + 1.0));
  const double a_prev = std::exp(-0.5 * (n - 1.0) * n);
  if (!(a_n > 0.0)) throw Error(ErrorCode::InvalidArgument, "a_n underflows; use the log-space ratio");
  const double base = eigen_exponent_base(space);
  const double weight = std::pow(mu, -0.5 * base);
  const auto g = weight * FourierSideFunction::log_oscillation(0.5 * (beta - 1.0), phase, mu, a_n, a_prev);
  const cplx lambda = weight * std::exp(I * phase);
  const auto diff = g.dilated(mu) + (-lambda) * g;
  const double num = weighted_inner(diff, diff, beta).value.real();
  const double den = weighted_inner(g, g, beta).value.real();
  return std::sqrt(std::max(0.0, num) / den);
}

EigenResidual eigen_residual(const SpaceParams& space, double mu, double p, double q) {
  if (!(mu > 0.0 && mu < 1.0)) throw Error(ErrorCode::InvalidArgument, "mu must lie in (0, 1)");
  const double base = eigen_exponent_base(space);
  if (!(p > -0.5 * base)) {
    throw Error(ErrorCode::MembershipViolation, "p must exceed -(a+2)/2 for (1-z)^{p+iq} to be in the space");
  }
  const cplx s{p, q};
  ClosedFormFunction F;
  if (space.has_kernel()) {
    F = apply_J(space, DiscFunction::power_at_one(s));
  } else {
    F = ClosedFormFunction::inverse_power(ppow(2.0 * I, s), I, base + s);
  }
  const LFTMap t1 = tau1(mu);
  EigenResidual out;
  out.eigenvalue = ppow(cplx{mu, 0.0}, base + s);
  for (int a = 0; a < 10; ++a) {
    for (int b = 0; b < 10; ++b) {
      const cplx w{-3.0 + 6.0 * a / 9.0, 0.05 * std::pow(100.0, b / 9.0)};
      const cplx fw = F(w);
      const double r = std::abs(F(t1(w)) - out.eigenvalue * fw) / std::abs(fw);
      out.residual = std::max(out.residual, r);
    }
  }
  return out;
}

}  // namespace hpspec
