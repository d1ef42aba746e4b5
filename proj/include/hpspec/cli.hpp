#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hpspec/complex_math.hpp"
#include "hpspec/spaces.hpp"
#include "hpspec/verify.hpp"

namespace hpspec {

enum class Command { Classify, Spectrum, Verify, Pseudospec, Transform };

struct GridOverrides {
  std::optional<double> t_min;
  std::optional<double> ratio;
  std::optional<std::size_t> size;
};

struct Rectangle {
  double re_min = -2.0, re_max = 2.0, im_min = -2.0, im_max = 2.0;
  std::size_t nx = 41, ny = 41;
};

struct JobConfig {
  Command command = Command::Classify;
  SpaceKind kind = SpaceKind::Hardy;
  std::optional<double> alpha;
  bool space_given = false;
  std::optional<double> mu;
  std::optional<cplx> w0;
  std::optional<std::array<cplx, 4>> coefficients;
  GridOverrides grid;
  Rectangle rect;
  std::optional<std::string> output;
  std::string suite = "all";
  std::uint64_t seed = 20260601;
  VerifyTolerances tol;
  std::size_t samples = 64;
  bool essential = false;
  // transform
  std::optional<cplx> at;
  std::vector<cplx> kernels;
  std::vector<double> power_exp;   // p, Re c, Im c triples
  std::vector<cplx> disc_powers;

  SpaceParams space() const;
};

// "a+bi" with optional signs: "2", "-1.5", "2i", "-i", "1+1i", "3-0.5i", "1e-3+2e1i".
cplx parse_complex(const std::string& text);

// Thrown by parse_args for --help; carries the usage text.
struct HelpRequested {
  std::string text;
};

// Throws Error{ParseError} for unparseable input.
JobConfig parse_args(int argc, const char* const* argv);

// Executes a parsed job. Returns 0 on success, 1 when a verification fails and
// 2 for configuration errors raised while running.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

// parse_args + run with the exit-code convention; --help prints usage and exits 0.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hpspec
