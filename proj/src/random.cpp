#include "asymcont/random.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace asymcont {

Rng make_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

CMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

DensityMatrix random_density(int dim_a, int dim_b, Rng& rng) {
  const int d = dim_a * dim_b;
  CMatrix g = ginibre(d, d, rng);
  CMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix(dim_a, dim_b, std::move(m));
}

PureState random_pure(int dim_a, int dim_b, Rng& rng) {
  CMatrix g = ginibre(dim_a * dim_b, 1, rng);
  return PureState::normalized(dim_a, dim_b, g.col(0));
}

CMatrix random_unitary(int d, Rng& rng) {
  CMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ() * CMatrix::Identity(d, d);
  CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < d; ++i) {
    const Complex diag = r(i, i);
    const double mag = std::abs(diag);
    if (mag > 0.0) q.col(i) *= diag / mag;
  }
  return q;
}

PureState random_product_pure(int dim_a, int dim_b, Rng& rng) {
  CVector a = ginibre(dim_a, 1, rng).col(0).normalized();
  CVector b = ginibre(dim_b, 1, rng).col(0).normalized();
  CVector ab = Eigen::kroneckerProduct(a, b).eval();
  return PureState::normalized(dim_a, dim_b, std::move(ab));
}

DensityMatrix random_separable(int dim_a, int dim_b, int terms, Rng& rng) {
  if (terms < 1) throw DomainError("random_separable: need at least one term");
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> weights(terms);
  double total = 0.0;
  for (double& w : weights) total += (w = expo(rng));
  const int d = dim_a * dim_b;
  CMatrix m = CMatrix::Zero(d, d);
  for (int t = 0; t < terms; ++t) {
    const PureState psi = random_product_pure(dim_a, dim_b, rng);
    m += (weights[t] / total) * psi.amplitudes() * psi.amplitudes().adjoint();
  }
  return DensityMatrix(dim_a, dim_b, std::move(m));
}

}  // namespace asymcont
