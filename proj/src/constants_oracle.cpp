#include "hpspec/constants_oracle.hpp"

#include "hpspec/error.hpp"
#include "hpspec/inner_product.hpp"
#include "hpspec/kernels.hpp"

namespace hpspec {

namespace {

ConstantSetReport run_set(const SpaceParams& space, ConstantSet set, const ConstantsOracleOptions& opt) {
  ConstantSetReport r;
  r.set = set;
  r.constants = normalization_constants(space, set);
  const double s0 = space.kernel_exponent();

  const auto F = ClosedFormFunction::inverse_power(1.0, I, s0) +
                 ClosedFormFunction::inverse_power(cplx{0.5, -0.25}, cplx{1.0, 1.5}, s0 + 0.5);
  r.reproducing_pass = true;
  for (cplx w0 : {cplx{0.0, 2.0}, cplx{0.7, 0.8}}) {
    const auto K = kernel_function(space, w0, set);
    const cplx computed = inner_product_numeric(space, F, K).value;
    const cplx expected = F(w0);
    const double err = rel_diff(computed, expected);
    r.reproducing.push_back({w0, expected, computed, err});
    r.reproducing_pass = r.reproducing_pass && err <= opt.reproducing_tol;
  }

  r.positivity_pass = true;
  for (cplx w0 : {cplx{0.0, 1.0}, cplx{0.0, 2.0}, cplx{1.0, 1.0}, cplx{-2.0, 0.5}}) {
    const cplx kd = kernel_halfplane(space, w0, w0, set);
    r.diagonals.push_back(kd);
    r.positivity_pass = r.positivity_pass && kd.real() > 0.0 &&
                        std::abs(kd.imag()) <= opt.positivity_tol * std::abs(kd);
  }

  r.cd = r.constants.c * r.constants.d;
  r.cd_target = ppow(2.0 * I, s0);
  r.round_trip_pass = rel_diff(r.cd, r.cd_target) <= opt.round_trip_tol;
  return r;
}

}  // namespace

ConstantsReport verify_constants(const SpaceParams& space, const ConstantsOracleOptions& opt) {
  if (!space.has_kernel()) throw Error(ErrorCode::InvalidSpace, "constants oracle needs a kernel space");
  return {space, run_set(space, ConstantSet::Corrected, opt), run_set(space, ConstantSet::Printed, opt)};
}

}  // namespace hpspec
