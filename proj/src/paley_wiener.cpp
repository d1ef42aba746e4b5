#include "hpspec/paley_wiener.hpp"

#include <algorithm>
#include <cstdio>

#include "hpspec/error.hpp"
#include "hpspec/kernels.hpp"

namespace hpspec {

ClosedFormFunction density_to_function(const FourierSideFunction& f) {
  std::vector<HalfPlaneTerm> terms;
  for (const auto& t : f.terms()) {
    const bool whole_line = t.lo == 0.0 && std::isinf(t.hi);
    if (whole_line && t.power.imag() == 0.0) {
      const double p = t.power.real();
      if (!(p > -1.0) || !(t.rate.real() < 0.0)) {
        throw Error(ErrorCode::NonConvergent, "density is not integrable against e^{iwt}");
      }
      const cplx coeff = t.coeff * std::tgamma(p + 1.0) * ipow(p + 1.0);
      terms.emplace_back(InversePowerTerm{coeff, -I * t.rate, p + 1.0});
    } else {
      terms.emplace_back(FourierImageTerm{t});
    }
  }
  return ClosedFormFunction(std::move(terms));
}

std::vector<ExactPair> exact_pairs(const SpaceParams& space) {
  std::vector<ExactPair> pairs;
  auto add_density = [&](std::string name, const FourierSideFunction& f) {
    pairs.push_back({std::move(name), f, density_to_function(f)});
  };
  // t^p is square integrable against t^{-beta} at the origin iff p > (beta - 1)/2
  const double p0 = std::max(0.5 * (space.fourier_weight_exponent() - 1.0), -1.0);
  char buf[96];

  if (space.has_kernel()) {
    for (cplx w0 : {cplx{0.0, 1.0}, cplx{0.5, 2.0}, cplx{-1.0, 0.5}}) {
      std::snprintf(buf, sizeof buf, "kernel(%g%+gi)", w0.real(), w0.imag());
      pairs.push_back({buf, kernel_density(space, w0), kernel_function(space, w0)});
    }
  } else {
    add_density("t^(p0+0.2) e^(-t)", FourierSideFunction::power_exp(p0 + 0.2, -1.0));
    add_density("t^(p0+0.9) e^(-(1-2i)t)", FourierSideFunction::power_exp(p0 + 0.9, {-1.0, 2.0}));
    add_density("t^(p0+3) e^(-2t)", FourierSideFunction::power_exp(p0 + 3.0, -2.0));
  }
  add_density("t^(p0+0.5) e^(-t)", FourierSideFunction::power_exp(p0 + 0.5, -1.0));
  add_density("t^(p0+1) e^(-(1+i)t)", FourierSideFunction::power_exp(p0 + 1.0, {-1.0, -1.0}));
  add_density("t^(p0+0.25) e^(-(0.5-3i)t)", FourierSideFunction::power_exp(p0 + 0.25, {-0.5, 3.0}));
  add_density("t^(p0+2) e^(-3t)", FourierSideFunction::power_exp(p0 + 2.0, -3.0));
  add_density("t^(p0+1.5) e^(-0.7t)", FourierSideFunction::power_exp(p0 + 1.5, -0.7));
  add_density("t^(p0+0.5) e^(-t) + 0.5i t^(p0+1) e^(-(2-i)t)",
              FourierSideFunction::power_exp(p0 + 0.5, -1.0) +
                  cplx{0.0, 0.5} * FourierSideFunction::power_exp(p0 + 1.0, {-2.0, 1.0}));
  add_density("3-term sum",
              FourierSideFunction::power_exp(p0 + 0.75, {-1.5, 0.5}) +
                  cplx{-0.3, 0.0} * FourierSideFunction::power_exp(p0 + 1.25, -1.0) +
                  cplx{0.2, -0.4} * FourierSideFunction::power_exp(p0 + 2.5, {-2.0, -2.0}));
  return pairs;
}

IsometryReport pw_isometry_check(const SpaceParams& space, const ExactPair& pair,
                                 const InnerProductOptions& opt) {
  IsometryReport r;
  r.lhs = norm_fourier_side(space, pair.density);
  r.rhs = norm_numeric(space, pair.function, opt);
  r.relative_error = std::abs(r.lhs - r.rhs) / std::max(std::abs(r.lhs), 1e-300);
  return r;
}

}  // namespace hpspec
