#pragma once

// Half-line densities f : (0, inf) -> C, the Fourier-side model of the
// Hardy, Bergman and Dirichlet spaces of the upper half-plane:
//   F(w) = int_0^inf f(t) e^{iwt} dt,   ||F||^2 = b int_0^inf |f(t)|^2 t^{-beta} dt.

#include <limits>
#include <span>
#include <vector>

#include "hpspec/complex_math.hpp"
#include "hpspec/log_grid.hpp"
#include "hpspec/quadrature.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// coeff * t^power * exp(rate t) on [lo, hi], zero elsewhere.
struct FourierSideTerm {
  cplx coeff{1.0, 0.0};
  cplx power{};
  cplx rate{};
  double lo = 0.0;
  double hi = kInf;

  cplx operator()(double t) const;
  friend bool operator==(const FourierSideTerm&, const FourierSideTerm&) = default;
};

class FourierSideFunction {
 public:
  FourierSideFunction() = default;
  explicit FourierSideFunction(std::vector<FourierSideTerm> terms);

  // chi_[a, b]; a = 0 is accepted as the limit case.
  static FourierSideFunction indicator(double a, double b);
  // t^p e^{rate t} on the whole half-line; Re rate <= 0.
  static FourierSideFunction power_exp(double p, cplx rate);
  // t^exponent exp(-i phase log_mu t) on [a, b]: a complex power of t.
  static FourierSideFunction log_oscillation(double exponent, double phase, double mu, double a,
                                             double b);
  // Piecewise constant on the bins of a log grid.
  static FourierSideFunction sampled(const LogGrid& grid, std::span<const cplx> values);

  const std::vector<FourierSideTerm>& terms() const noexcept { return terms_; }
  cplx operator()(double t) const;

  FourierSideFunction& operator+=(const FourierSideFunction& other);
  FourierSideFunction& operator*=(cplx s);
  friend FourierSideFunction operator+(FourierSideFunction a, const FourierSideFunction& b) {
    return a += b;
  }
  friend FourierSideFunction operator*(cplx s, FourierSideFunction f) { return f *= s; }

  // t -> e^{i w0 t} f(t)
  FourierSideFunction multiplied_by_exponential(cplx w0) const;
  // t -> (1/mu) f(t / mu)
  FourierSideFunction dilated(double mu) const;

  // Whether int |f|^2 t^{-beta} dt is finite, decided per term.
  bool in_weighted_l2(double beta) const;

 private:
  std::vector<FourierSideTerm> terms_;
};

// int_lo^hi t^P e^{C t} dt: closed forms where they exist, quadrature otherwise.
quad::Estimate<cplx> power_exp_integral(cplx P, cplx C, double lo, double hi);

// F(w) = int_0^inf f(t) e^{iwt} dt for Im w > 0. Throws NonConvergent when a
// term is not integrable at the origin.
quad::Estimate<cplx> synthesize(const FourierSideFunction& f, cplx w);

// int f conj(g) t^{-beta} dt
quad::Estimate<cplx> weighted_inner(const FourierSideFunction& f, const FourierSideFunction& g,
                                    double beta);

// ||f|| in L^2_beta with beta = space.fourier_weight_exponent(), including the
// constant b. Throws NotInSpace when the membership test fails.
double norm_fourier_side(const SpaceParams& space, const FourierSideFunction& f,
                         ConstantSet set = ConstantSet::Corrected);

// Density of the reproducing kernel K_{w0}: kappa t^{a+1} e^{-i conj(w0) t},
// kappa fixed by matching the synthesis to the kernel constant k.
FourierSideFunction kernel_density(const SpaceParams& space, cplx w0);

}  // namespace hpspec
