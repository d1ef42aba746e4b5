#pragma once

// Finite sections of the Fourier-side operators in the orthonormal basis
// e_j = chi_j / ||chi_j|| of L^2(t^{-beta} dt), chi_j the indicator of bin j
// of a log grid.

#include <string>
#include <vector>

#include <Eigen/SparseCore>

#include "hpspec/lft.hpp"
#include "hpspec/log_grid.hpp"
#include "hpspec/spaces.hpp"

namespace hpspec {

using SparseMatrix = Eigen::SparseMatrix<cplx>;

struct TruncatedOperator {
  SparseMatrix matrix;
  std::string provenance;
  bool diagonal = false;

  std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
  std::vector<cplx> diagonal_entries() const;
};

// Weight of the dilation f -> (1/mu) f(t/mu) between normalized indicators:
// mu^{-(a+2)/2} on Hardy/Bergman, mu^{-a/2} on Dirichlet.
double dilation_weight(const SpaceParams& space, double mu);

// Multiplication: d_j = int_bin e^{i w0 t} t^{-beta} dt / int_bin t^{-beta} dt.
// ScaledDilation: weight at (j - m, j) for mu < 1 and (j + m, j) for mu > 1.
// Throws GridMismatch unless the grid carries m with r^m = max(mu, 1/mu).
TruncatedOperator build_truncation(const FourierOpDescriptor& desc, const SpaceParams& space,
                                   const LogGrid& grid);

// Bin average of e^{i w0 t} against t^{-beta} over [a, b].
cplx symbol_bin_average(cplx w0, double beta, double a, double b);

// sup over the bin of |e^{i w0 t} - e^{i w0 s}|, bounded by
// min(2, |w0| (b - a)) e^{-Im w0 a}.
double oscillation_bound(cplx w0, double a, double b);
std::vector<double> oscillation_bounds(cplx w0, const LogGrid& grid);

struct NormOptions {
  double rel_tol = 1e-10;
  int max_iterations = 20000;
};

// Largest singular value by power iteration on A^H A from a fixed start vector.
double operator_norm_estimate(const TruncatedOperator& op, const NormOptions& opt = {});

// Smallest singular value of op - lambda I for each lambda: exact for diagonal
// operators, sparse LU with inverse iteration on (A - lambda)^H (A - lambda)
// otherwise. A singular factorization reports 0.
std::vector<double> min_singular_grid(const TruncatedOperator& op, const std::vector<cplx>& lambdas,
                                      const NormOptions& opt = {});

}  // namespace hpspec
