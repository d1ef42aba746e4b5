#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hpspec/spaces.hpp"

namespace hpspec {

struct CheckResult {
  std::string suite;
  std::string name;
  double value = 0.0;       // the measured quantity (an error, a margin, a count)
  double tolerance = 0.0;
  bool passed = false;
  bool skipped = false;
  std::string detail;
};

struct VerifyTolerances {
  double reproducing = 1e-5;
  double isometry = 1e-5;
  double scaled_isometry = 1e-4;
  double j_isometry = 1e-4;
  double norm = 1e-10;
  double weyl_hyperbolic = 1e-12;
  double weyl_parabolic_final = 0.02;
  double eigen_residual = 1e-12;
  double adjoint = 1e-5;
  double set_identity = 1e-9;
  double radius = 1e-12;
};

struct VerifyOptions {
  SpaceParams space = SpaceParams::bergman(0.0);
  std::uint64_t seed = 20260601;
  VerifyTolerances tol;
};

// constants, reproducing, isometry, parabolic, hyperbolic, nonauto, dirichlet, radius
const std::vector<std::string>& suite_names();

// Runs one suite, or every suite for "all". Throws InvalidArgument for an
// unknown suite name.
std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& opt);

}  // namespace hpspec
