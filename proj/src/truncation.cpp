#include "hpspec/truncation.hpp"

#include <algorithm>
#include <Eigen/SparseLU>

#include "hpspec/error.hpp"
#include "hpspec/quadrature.hpp"

namespace hpspec {

using Vector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

std::vector<cplx> TruncatedOperator::diagonal_entries() const {
  std::vector<cplx> d(size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j] = matrix.coeff(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j));
  }
  return d;
}

double dilation_weight(const SpaceParams& space, double mu) {
  const double half = space.kind() == SpaceKind::Dirichlet ? 0.5 * space.alpha()
                                                           : 0.5 * space.kernel_exponent();
  return std::pow(mu, -half);
}

cplx symbol_bin_average(cplx w0, double beta, double a, double b) {
  const cplx z = I * w0;
  if (beta == 0.0) {
    // (e^{z b} - e^{z a}) / (z (b - a))
    return std::exp(z * a) * expm1(z * (b - a)) / (z * (b - a));
  }
  // composite Gauss-Legendre, panels fine enough to resolve the oscillation
  const auto& rule = quad::gauss_legendre(24);
  const int panels = 1 + static_cast<int>(std::ceil(std::abs(w0) * (b - a) / 0.5));
  const double h = (b - a) / panels;
  cplx num{};
  double den = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double t = mid + 0.5 * h * rule.nodes[k];
      const double w = rule.weights[k] * std::pow(t, -beta);
      num += w * std::exp(z * t);
      den += w;
    }
  }
  return num / den;
}

double oscillation_bound(cplx w0, double a, double b) {
  return std::min(2.0, std::abs(w0) * (b - a)) * std::exp(-w0.imag() * a);
}

std::vector<double> oscillation_bounds(cplx w0, const LogGrid& grid) {
  std::vector<double> out(grid.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = oscillation_bound(w0, grid.bin_lo(j), grid.bin_hi(j));
  return out;
}

TruncatedOperator build_truncation(const FourierOpDescriptor& desc, const SpaceParams& space,
                                   const LogGrid& grid) {
  const auto n = static_cast<Eigen::Index>(grid.size());
  TruncatedOperator op;
  op.matrix.resize(n, n);
  std::vector<Eigen::Triplet<cplx>> triplets;
  if (desc.kind == FourierOpDescriptor::Kind::Multiplication) {
    const double beta = space.fourier_weight_exponent();
    triplets.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto u = static_cast<std::size_t>(j);
      triplets.emplace_back(j, j, symbol_bin_average(desc.w0, beta, grid.bin_lo(u), grid.bin_hi(u)));
    }
    op.diagonal = true;
    op.provenance = "multiplication by exp(i w0 t), w0 = " + std::to_string(desc.w0.real()) + " + " +
                    std::to_string(desc.w0.imag()) + "i, on " + space.name();
  } else {
    const double mu = desc.mu;
    const auto m = grid.shift();
    const double span = std::abs(std::log(mu));
    if (!m || std::abs(*m * grid.log_ratio() - span) > 1e-12 * std::max(span, 1.0)) {
      throw Error(ErrorCode::GridMismatch, "grid ratio r does not satisfy r^m = 1/mu");
    }
    const double weight = dilation_weight(space, mu);
    const Eigen::Index shift = *m;
    for (Eigen::Index j = 0; j < n; ++j) {
      // (1/mu) chi_j(t/mu) is supported on mu * bin j = bin j -+ m
      const Eigen::Index row = mu < 1.0 ? j - shift : j + shift;
      if (row >= 0 && row < n) triplets.emplace_back(row, j, weight);
    }
    op.provenance = "scaled dilation (1/mu) f(t/mu), mu = " + std::to_string(mu) + ", m = " +
                    std::to_string(*m) + ", on " + space.name();
  }
  op.matrix.setFromTriplets(triplets.begin(), triplets.end());
  op.matrix.makeCompressed();
  return op;
}

double operator_norm_estimate(const TruncatedOperator& op, const NormOptions& opt) {
  if (op.size() == 0 || op.matrix.nonZeros() == 0) return 0.0;
  if (op.diagonal) {
    double best = 0.0;
    for (const auto& d : op.diagonal_entries()) best = std::max(best, std::abs(d));
    return best;
  }
  const auto n = op.matrix.cols();
  Vector x(n);
  // deterministic start with components in every direction
  for (Eigen::Index j = 0; j < n; ++j) x[j] = cplx{1.0, 0.5 * std::sin(1.0 + static_cast<double>(j))};
  x.normalize();
  const SparseMatrix adj = op.matrix.adjoint();
  double sigma2 = 0.0;
  for (int it = 0; it < opt.max_iterations; ++it) {
    Vector y = adj * (op.matrix * x);
    const double next = std::real(x.dot(y));  // x^H A^H A x
    const double ny = y.norm();
    if (ny == 0.0) return 0.0;
    x = y / ny;
    if (it > 0 && std::abs(next - sigma2) <= opt.rel_tol * next) {
      sigma2 = next;
      break;
    }
    sigma2 = next;
  }
  // final Rayleigh quotient on the converged vector
  const double rq = (op.matrix * x).squaredNorm();
  return std::sqrt(std::max(rq, sigma2));
}

std::vector<double> min_singular_grid(const TruncatedOperator& op, const std::vector<cplx>& lambdas,
                                      const NormOptions& opt) {
  std::vector<double> out(lambdas.size(), 0.0);
  if (op.size() == 0) return out;
  if (op.diagonal) {
    const auto d = op.diagonal_entries();
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& v : d) best = std::min(best, std::abs(v - lambdas[i]));
      out[i] = best;
    }
    return out;
  }
  const auto n = op.matrix.rows();
  SparseMatrix identity(n, n);
  identity.setIdentity();
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    SparseMatrix b = op.matrix - lambdas[i] * identity;
    b.makeCompressed();
    Eigen::SparseLU<SparseMatrix> lu;
    lu.compute(b);
    if (lu.info() != Eigen::Success) {
      out[i] = 0.0;
      continue;
    }
    Vector x(n);
    for (Eigen::Index j = 0; j < n; ++j) x[j] = cplx{1.0, 0.25 * std::cos(2.0 + static_cast<double>(j))};
    x.normalize();
    double inv_sigma2 = 0.0;
    bool singular = false;
    for (int it = 0; it < opt.max_iterations; ++it) {
      // y = (B^H B)^{-1} x = B^{-1} B^{-H} x
      Vector z = lu.adjoint().solve(x);
      Vector y = lu.solve(z);
      const double ny = y.norm();
      if (!std::isfinite(ny)) {
        singular = true;
        break;
      }
      const double next = std::real(x.dot(y));
      x = y / ny;
      if (it > 0 && std::abs(next - inv_sigma2) <= opt.rel_tol * next) {
        inv_sigma2 = next;
        break;
      }
      inv_sigma2 = next;
    }
    if (singular || !(inv_sigma2 > 0.0)) {
      out[i] = 0.0;
    } else {
      // sigma_min = ||B x|| for the converged right singular vector
      out[i] = std::min((b * x).norm(), 1.0 / std::sqrt(inv_sigma2));
    }
  }
  return out;
}

}  // namespace hpspec
