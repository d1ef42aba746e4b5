#pragma once

// Weyl-sequence ratios ||(T - lambda) g_n|| / ||g_n|| for the Fourier-side
// operators, and eigenfunction residuals for tau1.

#include "hpspec/complex_math.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

// Multiplication by e^{i w0 t} with lambda = e^{i w0 t0} and
// g_n = chi_[t0 + 1/(n+1), t0 + 1/n].
double weyl_ratio_parabolic(const SpaceParams& space, cplx w0, double t0, int n);

// sup over the same bin of |e^{i w0 t} - e^{i w0 t0}|.
double weyl_sup_bound_parabolic(cplx w0, double t0, int n);

// Dilation (1/mu) f(t/mu), mu in (0, 1), lambda = |lambda| e^{i phase},
// g_n = x^{(beta-1)/2} e^{-i phase log_mu x} on [a_n, a_{n-1}] with a_0 = 1,
// a_n = e^{-n} a_{n-1}. The integrals are logarithms and are evaluated in log
// space, since a_n underflows long before n = 100. Throws WindowViolation for
// n <= ln(1/mu), where the supports of g_n and its image are not nested.
double weyl_ratio_hyperbolic(const SpaceParams& space, double mu, double phase, int n);

// sqrt(-2 |lambda|^2 ln(mu) / n)
double weyl_ratio_hyperbolic_closed_form(const SpaceParams& space, double mu, int n);

// The same ratio from the density representation of g_n; usable while a_n is
// representable (n up to about 30).
double weyl_ratio_hyperbolic_direct(const SpaceParams& space, double mu, double phase, int n);

struct EigenResidual {
  double residual = 0.0;   // max over the lattice of |F(tau1 w) - lambda F(w)| / |F(w)|
  cplx eigenvalue{};       // mu^{a+2+p+iq} (mu^{a+p+iq} on Dirichlet)
};

// F = J((1 - z)^{p+iq}) = (2i)^{p+iq} c (w + i)^{-(a+2+p+iq)} on Hardy/Bergman;
// (2i)^{p+iq} (w + i)^{-(a+p+iq)} on Dirichlet. Throws MembershipViolation
// unless p > -(a+2)/2 (p > -a/2 on Dirichlet).
EigenResidual eigen_residual(const SpaceParams& space, double mu, double p, double q);

}  // namespace hpspec
