#pragma once

#include <string>
#include <vector>

#include "hpspec/complex_math.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

struct ReproducingCase {
  cplx w0;
  cplx expected;   // F(w0)
  cplx computed;   // <F, K_{w0}> by quadrature
  double relative_error;
};

struct ConstantSetReport {
  ConstantSet set;
  NormalizationConstants constants;
  std::vector<ReproducingCase> reproducing;
  bool reproducing_pass = false;
  std::vector<cplx> diagonals;   // K_{w0}(w0) on the test points
  bool positivity_pass = false;
  cplx cd{};                     // c d
  cplx cd_target{};              // (2i)^{a+2}
  bool round_trip_pass = false;

  bool all_pass() const { return reproducing_pass && positivity_pass && round_trip_pass; }
};

struct ConstantsReport {
  SpaceParams space;
  ConstantSetReport corrected;
  ConstantSetReport printed;
};

struct ConstantsOracleOptions {
  double reproducing_tol = 1e-5;
  double positivity_tol = 1e-12;   // |Im K| <= tol |K|
  double round_trip_tol = 1e-12;
};

// Runs the reproducing, positivity and J round-trip oracles for both constant
// sets. Hardy/Bergman only.
ConstantsReport verify_constants(const SpaceParams& space, const ConstantsOracleOptions& opt = {});

}  // namespace hpspec
