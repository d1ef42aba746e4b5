#pragma once

#include <string>
#include <vector>

#include "hpspec/complex_math.hpp"
#include "hpspec/lft.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

// Closed-form description of a spectrum.
//   Circle{r}               |lambda| = r
//   ClosedDisc{r}           |lambda| <= r
//   ParabolicArcClosure{w0} closure of {e^{i w0 t} : t >= 0}; the unit circle
//                           when Im w0 = 0, a spiral joined to 0 otherwise.
class SpectralSet {
 public:
  enum class Kind { Circle, ClosedDisc, ParabolicArcClosure };

  static SpectralSet circle(double radius);
  static SpectralSet closed_disc(double radius);
  static SpectralSet parabolic_arc_closure(cplx w0);

  Kind kind() const noexcept { return kind_; }
  double radius() const noexcept { return radius_; }  // 1 for the parabolic sets
  cplx w0() const noexcept { return w0_; }

  double max_modulus() const noexcept { return radius_; }
  // s * set; parabolic sets only for s = 1.
  SpectralSet scaled(double s) const;

  friend bool operator==(const SpectralSet&, const SpectralSet&) = default;

 private:
  SpectralSet(Kind kind, double radius, cplx w0) : kind_(kind), radius_(radius), w0_(w0) {}
  Kind kind_;
  double radius_;
  cplx w0_;
};

std::string to_string(SpectralSet::Kind kind);

// The spectrum of C_tau. The essential spectrum coincides with it in every
// case covered, so the flag does not change the result.
SpectralSet spectrum(const SpaceParams& space, const LFTMap& map, bool essential = false);

// (1/mu)^{(a+2)/2} on Hardy/Bergman, mu (1/mu)^{(a+2)/2} on Dirichlet.
double spectral_radius(const SpaceParams& space, const LFTMap& map);

bool contains(const SpectralSet& set, cplx lambda, double tol);

// Euclidean distance from lambda to the set.
double distance(const SpectralSet& set, cplx lambda);

// n points of the set: uniform angles on circles; boundary circle, centre and a
// radial spiral for discs; a parameter grid up to e^{-Im w0 t} < 1e-12 plus 0
// for parabolic spirals.
std::vector<cplx> sample_set(const SpectralSet& set, std::size_t n);

}  // namespace hpspec
