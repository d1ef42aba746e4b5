#pragma once

// Reproducing kernels and the isometry J between the disc spaces and the
// half-plane spaces:
//   (Jf)(w)      = f(h^{-1}(w)) c (w + i)^{-(a+2)}
//   (J^{-1}F)(z) = F(h(z)) d (1 - z)^{-(a+2)}

#include "hpspec/functions.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

// k (w - conj(w0))^{-(a+2)}; Hardy/Bergman only, Im w0 > 0 and Im w > 0.
cplx kernel_halfplane(const SpaceParams& space, cplx w0, cplx w,
                      ConstantSet set = ConstantSet::Corrected);

// nu (1 - conj(z0) z)^{-(a+2)}; Hardy/Bergman only, |z0| < 1 and |z| < 1.
cplx kernel_disc(const SpaceParams& space, cplx z0, cplx z,
                 ConstantSet set = ConstantSet::Corrected);

// K_{w0} as an inverse power with shift -conj(w0).
ClosedFormFunction kernel_function(const SpaceParams& space, cplx w0,
                                   ConstantSet set = ConstantSet::Corrected);
DiscFunction disc_kernel_function(const SpaceParams& space, cplx z0,
                                  ConstantSet set = ConstantSet::Corrected);

// Symbolic J and J^{-1}. Supported terms: (1 - z)^s and kernel-type powers
// (1 - a z)^{-(a+2)} on the disc side; (w + i)^{-s} and (w + sigma)^{-(a+2)}
// on the half-plane side. Anything else throws OutsideFamily.
ClosedFormFunction apply_J(const SpaceParams& space, const DiscFunction& f,
                           ConstantSet set = ConstantSet::Corrected);
DiscFunction apply_J_inv(const SpaceParams& space, const ClosedFormFunction& F,
                         ConstantSet set = ConstantSet::Corrected);

// Pointwise definitions, for checking the symbolic forms.
cplx apply_J_pointwise(const SpaceParams& space, const DiscFunction& f, cplx w,
                       ConstantSet set = ConstantSet::Corrected);
cplx apply_J_inv_pointwise(const SpaceParams& space, const ClosedFormFunction& F, cplx z,
                           ConstantSet set = ConstantSet::Corrected);

}  // namespace hpspec
