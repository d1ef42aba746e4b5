#pragma once

// Brute-force inner products by quadrature, used as an independent oracle for
// the closed forms. Half-plane norms:
//   Hardy     <F, G> = lim_{y->0} int F(x+iy) conj(G(x+iy)) dx
//   Bergman   <F, G> = int_0^inf int_R F conj(G) y^a dx dy
//   Dirichlet <F, G> = Bergman inner product of F' and G'
// Disc norms use d theta / 2 pi (Hardy) and (1-|z|^2)^a dA (Bergman).

#include "hpspec/functions.hpp"
#include "hpspec/quadrature.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

struct InnerProductOptions {
  double rel_tol = 1e-9;
};

// Throws NonConvergent when F is not in the space by the symbolic test:
// an inverse power needs Re s > (a+2)/2 (Re s > a/2 for Dirichlet), a
// Fourier image needs its density in the weighted L^2 space.
void require_convergent(const SpaceParams& space, const ClosedFormFunction& F);
void require_convergent(const SpaceParams& space, const DiscFunction& f);

quad::Estimate<cplx> inner_product_numeric(const SpaceParams& space, const ClosedFormFunction& F,
                                           const ClosedFormFunction& G,
                                           const InnerProductOptions& opt = {});

double norm_numeric(const SpaceParams& space, const ClosedFormFunction& F,
                    const InnerProductOptions& opt = {});

// Hardy/Bergman disc spaces.
quad::Estimate<cplx> disc_inner_product_numeric(const SpaceParams& space, const DiscFunction& f,
                                                const DiscFunction& g,
                                                const InnerProductOptions& opt = {});

double disc_norm_numeric(const SpaceParams& space, const DiscFunction& f,
                         const InnerProductOptions& opt = {});

}  // namespace hpspec
