#pragma once

// Closed-form members of the test-function family. Half-plane functions are
// finite sums of inverse powers coeff (w + shift)^{-s} with Im shift > 0 and of
// Fourier images of half-line densities; disc functions are finite sums of
// coeff (1 - a z)^s with |a| <= 1. Powers use the principal branch; every
// base w + shift lies in the upper half-plane and every base 1 - a z in the
// right half-plane, so no evaluation touches the cut.

#include <variant>
#include <vector>

#include "hpspec/complex_math.hpp"
#include "hpspec/fourier_side.hpp"

namespace hpspec {

struct InversePowerTerm {
  cplx coeff{1.0, 0.0};
  cplx shift{0.0, 1.0};
  cplx exponent{1.0, 0.0};

  cplx operator()(cplx w) const { return coeff * ppow(w + shift, -exponent); }
  friend bool operator==(const InversePowerTerm&, const InversePowerTerm&) = default;
};

struct FourierImageTerm {
  FourierSideTerm density;
  friend bool operator==(const FourierImageTerm&, const FourierImageTerm&) = default;
};

using HalfPlaneTerm = std::variant<InversePowerTerm, FourierImageTerm>;

class ClosedFormFunction {
 public:
  ClosedFormFunction() = default;
  explicit ClosedFormFunction(std::vector<HalfPlaneTerm> terms);

  static ClosedFormFunction inverse_power(cplx coeff, cplx shift, cplx exponent);
  static ClosedFormFunction fourier_image(const FourierSideFunction& density);

  const std::vector<HalfPlaneTerm>& terms() const noexcept { return terms_; }

  // Exact pointwise value; Fourier images use the closed-form synthesis.
  cplx operator()(cplx w) const;

  ClosedFormFunction derivative() const;

  // Smallest Im(shift) over inverse-power terms (1 if there are none): the
  // distance from the real line to the nearest singularity.
  double singularity_margin() const;

  ClosedFormFunction& operator+=(const ClosedFormFunction& other);
  ClosedFormFunction& operator*=(cplx s);
  friend ClosedFormFunction operator+(ClosedFormFunction a, const ClosedFormFunction& b) {
    return a += b;
  }
  friend ClosedFormFunction operator*(cplx s, ClosedFormFunction f) { return f *= s; }

 private:
  std::vector<HalfPlaneTerm> terms_;
};

struct DiscTerm {
  cplx coeff{1.0, 0.0};
  cplx center{1.0, 0.0};   // a in (1 - a z)^s
  cplx exponent{};

  cplx operator()(cplx z) const;
  // value at z = (1 - delta) e^{i theta}, accurate when z is close to 1
  cplx at_polar(double delta, double theta) const;
  friend bool operator==(const DiscTerm&, const DiscTerm&) = default;
};

class DiscFunction {
 public:
  DiscFunction() = default;
  explicit DiscFunction(std::vector<DiscTerm> terms);

  static DiscFunction constant(cplx value);
  // (1 - z)^s
  static DiscFunction power_at_one(cplx s, cplx coeff = 1.0);
  // z^n expanded in powers of (1 - z)
  static DiscFunction monomial(int n);

  const std::vector<DiscTerm>& terms() const noexcept { return terms_; }
  cplx operator()(cplx z) const;
  cplx at_polar(double delta, double theta) const;

  DiscFunction& operator+=(const DiscFunction& other);
  DiscFunction& operator*=(cplx s);
  friend DiscFunction operator+(DiscFunction a, const DiscFunction& b) { return a += b; }
  friend DiscFunction operator*(cplx s, DiscFunction f) { return f *= s; }

 private:
  std::vector<DiscTerm> terms_;
};

}  // namespace hpspec
