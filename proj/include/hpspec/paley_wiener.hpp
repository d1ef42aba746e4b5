#pragma once

#include <string>
#include <vector>

#include "hpspec/fourier_side.hpp"
#include "hpspec/functions.hpp"
#include "hpspec/inner_product.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

// Closed-form synthesis: a full-half-line term t^p e^{ct} (real p > -1,
// Re c < 0) becomes Gamma(p+1) i^{p+1} (w - ic)^{-(p+1)}; other terms are kept
// as Fourier images.
ClosedFormFunction density_to_function(const FourierSideFunction& f);

struct ExactPair {
  std::string name;
  FourierSideFunction density;
  ClosedFormFunction function;
};

// Built-in density/function pairs for the space: kernel pairs (Hardy and
// Bergman) and power-exponential pairs, all members of the space.
std::vector<ExactPair> exact_pairs(const SpaceParams& space);

struct IsometryReport {
  double lhs = 0.0;             // Fourier-side norm
  double rhs = 0.0;             // half-plane norm by quadrature
  double relative_error = 0.0;
};

IsometryReport pw_isometry_check(const SpaceParams& space, const ExactPair& pair,
                                 const InnerProductOptions& opt = {});

}  // namespace hpspec
