#include "hpspec/kernels.hpp"

#include "hpspec/cayley.hpp"
#include "hpspec/error.hpp"

namespace hpspec {

namespace {

void require_kernel_space(const SpaceParams& space) {
  if (!space.has_kernel()) throw Error(ErrorCode::InvalidSpace, "no reproducing kernel for Dirichlet spaces");
}

bool same_exponent(cplx a, cplx b) { return std::abs(a - b) <= 1e-13 * (1.0 + std::abs(b)); }

}  // namespace

cplx kernel_halfplane(const SpaceParams& space, cplx w0, cplx w, ConstantSet set) {
  require_kernel_space(space);
  if (!(w0.imag() > 0.0) || !(w.imag() > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "kernel points must lie in the open upper half-plane");
  }
  const auto k = normalization_constants(space, set).k;
  return k * ppow(w - std::conj(w0), -space.kernel_exponent());
}

cplx kernel_disc(const SpaceParams& space, cplx z0, cplx z, ConstantSet set) {
  require_kernel_space(space);
  if (!(std::abs(z0) < 1.0) || !(std::abs(z) < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "kernel points must lie in the open disc");
  }
  const double nu = normalization_constants(space, set).nu;
  return nu * ppow(1.0 - std::conj(z0) * z, -space.kernel_exponent());
}

ClosedFormFunction kernel_function(const SpaceParams& space, cplx w0, ConstantSet set) {
  require_kernel_space(space);
  if (!(w0.imag() > 0.0)) throw Error(ErrorCode::InvalidArgument, "kernel point must have Im w0 > 0");
  const auto k = normalization_constants(space, set).k;
  return ClosedFormFunction::inverse_power(k, -std::conj(w0), space.kernel_exponent());
}

DiscFunction disc_kernel_function(const SpaceParams& space, cplx z0, ConstantSet set) {
  require_kernel_space(space);
  if (!(std::abs(z0) < 1.0)) throw Error(ErrorCode::InvalidArgument, "kernel point must satisfy |z0| < 1");
  const double nu = normalization_constants(space, set).nu;
  return DiscFunction({DiscTerm{nu, std::conj(z0), -space.kernel_exponent()}});
}

ClosedFormFunction apply_J(const SpaceParams& space, const DiscFunction& f, ConstantSet set) {
  require_kernel_space(space);
  const auto K = normalization_constants(space, set);
  const double s0 = space.kernel_exponent();
  std::vector<HalfPlaneTerm> out;
  for (const auto& t : f.terms()) {
    if (t.exponent == cplx{} || t.center == cplx{}) {
      // constant: c (w + i)^{-(a+2)}
      out.emplace_back(InversePowerTerm{t.coeff * K.c, I, s0});
    } else if (t.center == cplx{1.0, 0.0}) {
      // (1 - h^{-1}(w))^s = (2i)^s (w + i)^{-s}
      out.emplace_back(InversePowerTerm{t.coeff * K.c * ppow(2.0 * I, t.exponent), I, s0 + t.exponent});
    } else if (same_exponent(t.exponent, -s0) && std::abs(t.center) < 1.0) {
      // (1 - a h^{-1}(w))^{-(a+2)} (w + i)^{-(a+2)} = (1 - a)^{-(a+2)} (w + sigma)^{-(a+2)}
      const cplx a = t.center;
      const cplx sigma = I * (1.0 + a) / (1.0 - a);
      out.emplace_back(InversePowerTerm{t.coeff * K.c * ppow(1.0 - a, -s0), sigma, s0});
    } else {
      throw Error(ErrorCode::OutsideFamily, "disc term has no closed-form image under J");
    }
  }
  return ClosedFormFunction(std::move(out));
}

DiscFunction apply_J_inv(const SpaceParams& space, const ClosedFormFunction& F, ConstantSet set) {
  require_kernel_space(space);
  const auto K = normalization_constants(space, set);
  const double s0 = space.kernel_exponent();
  std::vector<DiscTerm> out;
  for (const auto& term : F.terms()) {
    const auto* p = std::get_if<InversePowerTerm>(&term);
    if (p == nullptr) throw Error(ErrorCode::OutsideFamily, "Fourier images have no closed-form preimage under J");
    if (p->shift == I) {
      // (h(z) + i)^{-s} = (2i)^{-s} (1 - z)^s
      out.push_back({p->coeff * K.d * ppow(2.0 * I, -p->exponent), 1.0, p->exponent - s0});
    } else if (same_exponent(p->exponent, s0)) {
      // h(z) + sigma = (sigma + i)(1 - a z)/(1 - z) with a = (sigma - i)/(sigma + i)
      const cplx a = (p->shift - I) / (p->shift + I);
      out.push_back({p->coeff * K.d * ppow(p->shift + I, -s0), a, -s0});
    } else {
      throw Error(ErrorCode::OutsideFamily, "half-plane term has no closed-form preimage under J");
    }
  }
  return DiscFunction(std::move(out));
}

cplx apply_J_pointwise(const SpaceParams& space, const DiscFunction& f, cplx w, ConstantSet set) {
  require_kernel_space(space);
  const auto K = normalization_constants(space, set);
  return f(cayley_h_inv(w)) * K.c * ppow(w + I, -space.kernel_exponent());
}

cplx apply_J_inv_pointwise(const SpaceParams& space, const ClosedFormFunction& F, cplx z,
                           ConstantSet set) {
  require_kernel_space(space);
  const auto K = normalization_constants(space, set);
  const auto w = cayley_h(z);
  if (w.infinite) throw Error(ErrorCode::InvalidArgument, "z = 1 is not in the disc");
  return F(w.value) * K.d * ppow(1.0 - z, -space.kernel_exponent());
}

}  // namespace hpspec
