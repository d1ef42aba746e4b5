#pragma once

#include "hpspec/complex_math.hpp"

namespace hpspec {

// A point of the extended plane; infinity is a first-class value.
struct ExtendedPoint {
  cplx value{};
  bool infinite = false;

  static ExtendedPoint infinity() { return {cplx{}, true}; }
  static ExtendedPoint finite(cplx z) { return {z, false}; }

  friend bool operator==(const ExtendedPoint&, const ExtendedPoint&) = default;
};

// h(z) = i (1 + z) / (1 - z): the unit disc onto the upper half-plane, 1 to infinity.
ExtendedPoint cayley_h(cplx z);

// h^{-1}(w) = (w - i) / (w + i); infinity maps to 1. Throws for w = -i.
cplx cayley_h_inv(ExtendedPoint w);
inline cplx cayley_h_inv(cplx w) { return cayley_h_inv(ExtendedPoint::finite(w)); }

}  // namespace hpspec
