#pragma once

#include <string>

#include "hpspec/complex_math.hpp"

namespace hpspec {

enum class SpaceKind { Hardy, Bergman, Dirichlet };

std::string to_string(SpaceKind kind);

// A function space on the upper half-plane. Hardy is carried as the weight
// alpha = -1 limit of the Bergman scale.
class SpaceParams {
 public:
  static SpaceParams hardy() { return SpaceParams(SpaceKind::Hardy, -1.0); }
  static SpaceParams bergman(double alpha);
  static SpaceParams dirichlet(double alpha);
  // Validating constructor; throws Error{InvalidSpace}.
  static SpaceParams make(SpaceKind kind, double alpha);

  SpaceKind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }

  // beta such that the space is L^2(t^{-beta} dt) on the Fourier side:
  // alpha + 1 for Hardy/Bergman, alpha - 1 for Dirichlet.
  double fourier_weight_exponent() const noexcept;

  // alpha + 2: the kernel exponent and the exponent of the weight factor in J.
  double kernel_exponent() const noexcept { return alpha_ + 2.0; }

  bool has_kernel() const noexcept { return kind_ != SpaceKind::Dirichlet; }

  std::string name() const;

  friend bool operator==(const SpaceParams&, const SpaceParams&) = default;

 private:
  SpaceParams(SpaceKind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  SpaceKind kind_;
  double alpha_;
};

// Which set of normalization constants to use. Printed are the values
// c = 2^{a+1}, d = 2i, k = i(a+1)2^a, nu = a+1 for a > -1; Corrected are
// the values that make J^{-1} J = id and the kernels reproducing for the
// unnormalized area measure on the disc. Both sets agree for Hardy.
enum class ConstantSet { Corrected, Printed };

struct NormalizationConstants {
  cplx c;     // J weight:      (Jf)(w) = f(h^{-1}(w)) c (w+i)^{-(a+2)}
  cplx d;     // J^{-1} weight: (J^{-1}F)(z) = F(h(z)) d (1-z)^{-(a+2)}
  cplx k;     // half-plane kernel K_{w0}(w) = k (w - conj(w0))^{-(a+2)}
  double b;   // Fourier-side norm constant ||F||^2 = b int |f|^2 t^{-beta} dt
  double nu;  // disc kernel g_{z0}(z) = nu (1 - conj(z0) z)^{-(a+2)}
};

// Hardy/Bergman only; throws Error{InvalidSpace} for Dirichlet.
NormalizationConstants normalization_constants(const SpaceParams& space,
                                               ConstantSet set = ConstantSet::Corrected);

// Fourier-side norm constant b for every space kind. For Dirichlet the
// corrected value is pi Gamma(a+1) 2^{-a}, the printed one Gamma(a+1) 2^{-a}.
double fourier_norm_constant(const SpaceParams& space, ConstantSet set = ConstantSet::Corrected);

}  // namespace hpspec
