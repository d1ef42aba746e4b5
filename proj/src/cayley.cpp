#include "hpspec/cayley.hpp"

#include "hpspec/error.hpp"

namespace hpspec {

ExtendedPoint cayley_h(cplx z) {
  if (z == cplx{1.0, 0.0}) return ExtendedPoint::infinity();
  return ExtendedPoint::finite(I * (1.0 + z) / (1.0 - z));
}

cplx cayley_h_inv(ExtendedPoint w) {
  if (w.infinite) return {1.0, 0.0};
  if (w.value == -I) throw Error(ErrorCode::InvalidArgument, "h^{-1} has a pole at -i");
  return (w.value - I) / (w.value + I);
}

}  // namespace hpspec
