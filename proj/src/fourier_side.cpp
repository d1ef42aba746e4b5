#include "hpspec/fourier_side.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "hpspec/error.hpp"

namespace hpspec {

cplx FourierSideTerm::operator()(double t) const {
  if (t < lo || t > hi) return {};
  if (t == 0.0) return power == cplx{} ? coeff : cplx{};
  return coeff * std::exp(power * std::log(t) + rate * t);
}

FourierSideFunction::FourierSideFunction(std::vector<FourierSideTerm> terms)
    : terms_(std::move(terms)) {
  for (const auto& term : terms_) {
    if (!(term.lo >= 0.0) || !(term.lo < term.hi)) {
      throw Error(ErrorCode::InvalidArgument, "Fourier-side term needs 0 <= lo < hi");
    }
    if (term.rate.real() > 0.0) {
      throw Error(ErrorCode::InvalidArgument, "Fourier-side term needs Re rate <= 0");
    }
  }
}

FourierSideFunction FourierSideFunction::indicator(double a, double b) {
  if (!(a >= 0.0) || !(a < b) || !std::isfinite(b)) {
    throw Error(ErrorCode::InvalidArgument, "indicator needs 0 <= a < b < inf");
  }
  return FourierSideFunction({FourierSideTerm{{1.0, 0.0}, {}, {}, a, b}});
}

FourierSideFunction FourierSideFunction::power_exp(double p, cplx rate) {
  return FourierSideFunction({FourierSideTerm{{1.0, 0.0}, {p, 0.0}, rate, 0.0, kInf}});
}

FourierSideFunction FourierSideFunction::log_oscillation(double exponent, double phase, double mu,
                                                         double a, double b) {
  if (!(mu > 0.0) || mu == 1.0) {
    throw Error(ErrorCode::InvalidArgument, "log_oscillation needs mu > 0, mu != 1");
  }
  if (!(a > 0.0) || !(a < b)) {
    throw Error(ErrorCode::InvalidArgument, "log_oscillation needs 0 < a < b");
  }
  const cplx power{exponent, -phase / std::log(mu)};
  return FourierSideFunction({FourierSideTerm{{1.0, 0.0}, power, {}, a, b}});
}

FourierSideFunction FourierSideFunction::sampled(const LogGrid& grid, std::span<const cplx> values) {
  if (values.size() != grid.size()) {
    throw Error(ErrorCode::InvalidArgument, "sampled: one value per bin required");
  }
  std::vector<FourierSideTerm> terms;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (values[j] == cplx{}) continue;
    terms.push_back({values[j], {}, {}, grid.bin_lo(j), grid.bin_hi(j)});
  }
  return FourierSideFunction(std::move(terms));
}

cplx FourierSideFunction::operator()(double t) const {
  cplx sum{};
  for (const auto& term : terms_) sum += term(t);
  return sum;
}

FourierSideFunction& FourierSideFunction::operator+=(const FourierSideFunction& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

FourierSideFunction& FourierSideFunction::operator*=(cplx s) {
  for (auto& term : terms_) term.coeff *= s;
  return *this;
}

FourierSideFunction FourierSideFunction::multiplied_by_exponential(cplx w0) const {
  if (w0.imag() < 0.0) {
    throw Error(ErrorCode::InvalidArgument, "multiplier e^{i w0 t} needs Im w0 >= 0");
  }
  FourierSideFunction out = *this;
  for (auto& term : out.terms_) term.rate += I * w0;
  return out;
}

FourierSideFunction FourierSideFunction::dilated(double mu) const {
  if (!(mu > 0.0)) throw Error(ErrorCode::InvalidArgument, "dilation needs mu > 0");
  FourierSideFunction out = *this;
  const double log_mu = std::log(mu);
  for (auto& term : out.terms_) {
    term.coeff *= std::exp(-(1.0 + term.power) * log_mu);
    term.rate /= mu;
    term.lo *= mu;
    term.hi *= mu;
  }
  return out;
}

bool FourierSideFunction::in_weighted_l2(double beta) const {
  for (const auto& term : terms_) {
    if (term.coeff == cplx{}) continue;
    const double q = 2.0 * term.power.real() - beta;
    if (term.lo == 0.0 && !(q > -1.0)) return false;
    if (std::isinf(term.hi)) {
      if (term.rate.real() == 0.0 && !(q < -1.0)) return false;
    }
  }
  return true;
}

namespace {

quad::Estimate<cplx> integrate_numerically(cplx P, cplx C, double lo, double hi) {
  auto integrand = [P, C](double t) { return std::exp(P * std::log(t) + C * t); };
  quad::Options opt;
  opt.rel_tol = 1e-13;
  opt.abs_tol = 1e-300;
  auto est = quad::half_line(integrand, lo, hi, opt);
  if (!est.converged && est.error > 1e-8 * std::abs(est.value)) {
    throw Error(ErrorCode::NonConvergent, "half-line quadrature did not converge");
  }
  return est;
}

cplx real_closed_form(double p, double c, double lo, double hi) {
  if (c == 0.0) {
    if (p == -1.0) return std::log(hi / lo);
    const double a = p + 1.0;
    const double top = std::isinf(hi) ? 0.0 : std::pow(hi, a);
    const double bottom = lo == 0.0 ? 0.0 : std::pow(lo, a);
    return (top - bottom) / a;
  }
  // c < 0, p > -1
  const double k = -c;
  const double a = p + 1.0;
  double diff;
  if (k * lo >= a) {
    const double upper_hi = std::isinf(hi) ? 0.0 : boost::math::tgamma(a, k * hi);
    diff = boost::math::tgamma(a, k * lo) - upper_hi;
  } else {
    const double lower_hi = std::isinf(hi) ? boost::math::tgamma(a) : boost::math::tgamma_lower(a, k * hi);
    const double lower_lo = lo == 0.0 ? 0.0 : boost::math::tgamma_lower(a, k * lo);
    diff = lower_hi - lower_lo;
  }
  return std::pow(k, -a) * diff;
}

}  // namespace

quad::Estimate<cplx> power_exp_integral(cplx P, cplx C, double lo, double hi) {
  if (!(lo < hi)) return {};
  if (lo == 0.0 && !(P.real() > -1.0)) {
    throw Error(ErrorCode::NonConvergent, "integrand not integrable at t = 0");
  }
  if (std::isinf(hi) && (C.real() > 0.0 || (C.real() == 0.0 && !(P.real() < -1.0)))) {
    throw Error(ErrorCode::NonConvergent, "integrand not integrable at infinity");
  }
  if (P == cplx{} && C != cplx{}) {
    const cplx head = std::exp(C * lo);
    if (std::isinf(hi)) return {-head / C, 0.0};
    return {head * expm1(C * (hi - lo)) / C, 0.0};
  }
  if (P.imag() == 0.0 && C.imag() == 0.0 && (C.real() == 0.0 || P.real() > -1.0)) {
    return {real_closed_form(P.real(), C.real(), lo, hi), 0.0};
  }
  if (P.imag() == 0.0 && P.real() > -1.0 && lo == 0.0 && std::isinf(hi) && C.real() < 0.0) {
    const double a = P.real() + 1.0;
    return {std::tgamma(a) * ppow(-C, -a), 0.0};
  }
  return integrate_numerically(P, C, lo, hi);
}

quad::Estimate<cplx> synthesize(const FourierSideFunction& f, cplx w) {
  if (!(w.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "synthesize needs Im w > 0");
  quad::Estimate<cplx> out;
  for (const auto& term : f.terms()) {
    if (term.coeff == cplx{}) continue;
    auto part = power_exp_integral(term.power, term.rate + I * w, term.lo, term.hi);
    out.value += term.coeff * part.value;
    out.error += std::abs(term.coeff) * part.error;
  }
  return out;
}

quad::Estimate<cplx> weighted_inner(const FourierSideFunction& f, const FourierSideFunction& g,
                                    double beta) {
  quad::Estimate<cplx> out;
  for (const auto& a : f.terms()) {
    for (const auto& b : g.terms()) {
      const double lo = std::max(a.lo, b.lo);
      const double hi = std::min(a.hi, b.hi);
      if (!(lo < hi)) continue;
      const cplx scale = a.coeff * std::conj(b.coeff);
      if (scale == cplx{}) continue;
      auto part = power_exp_integral(a.power + std::conj(b.power) - beta,
                                     a.rate + std::conj(b.rate), lo, hi);
      out.value += scale * part.value;
      out.error += std::abs(scale) * part.error;
    }
  }
  return out;
}

double norm_fourier_side(const SpaceParams& space, const FourierSideFunction& f, ConstantSet set) {
  const double beta = space.fourier_weight_exponent();
  if (!f.in_weighted_l2(beta)) {
    throw Error(ErrorCode::NotInSpace, "density is not in the weighted L^2 space of " + space.name());
  }
  const double b = fourier_norm_constant(space, set);
  const double sq = b * weighted_inner(f, f, beta).value.real();
  return std::sqrt(std::max(sq, 0.0));
}

FourierSideFunction kernel_density(const SpaceParams& space, cplx w0) {
  if (!(w0.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "kernel point needs Im w0 > 0");
  const auto constants = normalization_constants(space);
  const double s = space.kernel_exponent();
  const cplx kappa = constants.k / (std::tgamma(s) * ipow(s));
  return FourierSideFunction({FourierSideTerm{kappa, {s - 1.0, 0.0}, -I * std::conj(w0), 0.0, kInf}});
}

}  // namespace hpspec
