#pragma once

// Seeded generators and independent reference computations for the tests.
// Nothing here calls into the measure or mixing code under test; oracles use
// explicit index loops, general (non-Hermitian) eigensolvers and lgamma.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "asymcont/linalg.hpp"

namespace testing {

using asymcont::CMatrix;
using asymcont::Complex;
using asymcont::CVector;
using asymcont::DensityMatrix;
using asymcont::PureState;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  Complex gaussian() {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(engine_), n(engine_)};
  }

  CVector vector(int d) {
    CVector v(d);
    for (int i = 0; i < d; ++i) v(i) = gaussian();
    return v / v.norm();
  }

  /// Rank-`rank` state G G^dagger / tr with G of size d x rank.
  DensityMatrix density(int da, int db, int rank = 0) {
    const int d = da * db;
    const int k = rank > 0 ? rank : d;
    CMatrix g(d, k);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < k; ++j) g(i, j) = gaussian();
    CMatrix m = g * g.adjoint();
    m /= m.trace().real();
    return DensityMatrix(da, db, m);
  }

  PureState pure(int da, int db) { return PureState(da, db, vector(da * db)); }

  PureState product(int da, int db) {
    const CVector a = vector(da), b = vector(db);
    CVector v(da * db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) v(i * db + j) = a(i) * b(j);
    return PureState(da, db, v / v.norm());
  }

  DensityMatrix separable(int da, int db, int terms) {
    const int d = da * db;
    CMatrix m = CMatrix::Zero(d, d);
    double total = 0.0;
    for (int t = 0; t < terms; ++t) {
      const double w = uniform(0.05, 1.0);
      const CVector v = product(da, db).amplitudes();
      m += w * v * v.adjoint();
      total += w;
    }
    return DensityMatrix(da, db, m / total);
  }

  /// Unitary by Gram-Schmidt on Gaussian columns.
  CMatrix unitary(int d) {
    CMatrix u(d, d);
    for (int j = 0; j < d; ++j) {
      CVector v(d);
      for (int i = 0; i < d; ++i) v(i) = gaussian();
      for (int k = 0; k < j; ++k) v -= u.col(k).dot(v) * u.col(k);
      u.col(j) = v / v.norm();
    }
    return u;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (long i = 0; i < a.rows(); ++i)
    for (long j = 0; j < a.cols(); ++j)
      for (long k = 0; k < b.rows(); ++k)
        for (long l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// (U_A (x) U_B) rho (U_A (x) U_B)^dagger.
inline DensityMatrix local_rotate(const DensityMatrix& rho, const CMatrix& ua, const CMatrix& ub) {
  const CMatrix u = kron(ua, ub);
  return DensityMatrix(rho.dim_a(), rho.dim_b(), u * rho.matrix() * u.adjoint());
}

/// Product of per-copy factors in the grouped (A1..An B1..Bn) ordering,
/// evaluated entry by entry.
inline CMatrix grouped_product(const std::vector<CMatrix>& factors, int da, int db) {
  const int n = static_cast<int>(factors.size());
  long side_a = 1, side_b = 1;
  for (int c = 0; c < n; ++c) {
    side_a *= da;
    side_b *= db;
  }
  const long side = side_a * side_b;
  auto local = [&](long index, int copy) {
    long ia = index / side_b, ib = index % side_b;
    for (int c = n - 1; c > copy; --c) {
      ia /= da;
      ib /= db;
    }
    return (ia % da) * db + (ib % db);
  };
  CMatrix out(side, side);
  for (long i = 0; i < side; ++i)
    for (long j = 0; j < side; ++j) {
      Complex v = 1.0;
      for (int c = 0; c < n; ++c) v *= factors[c](local(i, c), local(j, c));
      out(i, j) = v;
    }
  return out;
}

inline CMatrix partial_transpose_oracle(const CMatrix& m, int da, int db) {
  CMatrix out(m.rows(), m.cols());
  for (int a = 0; a < da; ++a)
    for (int b = 0; b < db; ++b)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2) out(a * db + b, a2 * db + b2) = m(a * db + b2, a2 * db + b);
  return out;
}

inline CMatrix reduced_a_oracle(const CMatrix& m, int da, int db) {
  CMatrix out = CMatrix::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int a2 = 0; a2 < da; ++a2)
      for (int b = 0; b < db; ++b) out(a, a2) += m(a * db + b, a2 * db + b);
  return out;
}

inline double trace_norm_oracle(const CMatrix& m) {
  Eigen::JacobiSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

inline double trace_distance_oracle(const CMatrix& a, const CMatrix& b) {
  return 0.5 * trace_norm_oracle(a - b);
}

inline double log_negativity_oracle(const DensityMatrix& rho) {
  return std::log2(trace_norm_oracle(partial_transpose_oracle(rho.matrix(), rho.dim_a(), rho.dim_b())));
}

inline double entropy_bits(const std::vector<double>& probs) {
  double h = 0.0;
  for (double p : probs)
    if (p > 1e-300) h -= p * std::log2(p);
  return h;
}

inline double binary_entropy_oracle(double x) { return entropy_bits({x, 1.0 - x}); }

/// Entropy of the reduced state, spectrum from a general eigensolver.
inline double entanglement_entropy_oracle(const PureState& psi) {
  const CVector& v = psi.amplitudes();
  const CMatrix rho_a = reduced_a_oracle(v * v.adjoint(), psi.dim_a(), psi.dim_b());
  Eigen::ComplexEigenSolver<CMatrix> es(rho_a);
  std::vector<double> eig;
  for (long i = 0; i < es.eigenvalues().size(); ++i) eig.push_back(std::max(0.0, es.eigenvalues()(i).real()));
  return entropy_bits(eig);
}

/// Concurrence from the eigenvalues of the non-Hermitian product rho rho~.
inline double concurrence_oracle(const DensityMatrix& rho) {
  CMatrix yy = CMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const CMatrix tilde = yy * rho.matrix().conjugate() * yy;
  Eigen::ComplexEigenSolver<CMatrix> es(rho.matrix() * tilde);
  std::vector<double> l;
  for (int i = 0; i < 4; ++i) l.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i).real())));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

inline double eof_oracle(double concurrence) {
  return binary_entropy_oracle(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - concurrence * concurrence))));
}

inline double log_choose(long n, long k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

inline double binomial_pmf_oracle(int n, int l, double p) {
  if (p == 0.0) return l == 0 ? 1.0 : 0.0;
  if (p == 1.0) return l == n ? 1.0 : 0.0;
  return std::exp(log_choose(n, l) + l * std::log(p) + (n - l) * std::log(1.0 - p));
}

/// Binomial mass outside [lo, hi], summed directly.
inline double tail_oracle(int n, double p, int lo, int hi) {
  double t = 0.0;
  for (int l = 0; l <= n; ++l)
    if (l < lo || l > hi) t += binomial_pmf_oracle(n, l, p);
  return t;
}

/// Concentration yield per copy by enumerating types for two or three
/// Schmidt squares.
inline double concentration_oracle(const std::vector<double>& lam, long n) {
  double total = 0.0;
  if (lam.size() == 2) {
    for (long k = 0; k <= n; ++k) {
      const double lc = log_choose(n, k);
      total += std::exp(lc + (n - k) * std::log(lam[0]) + k * std::log(lam[1])) * lc / std::log(2.0);
    }
  } else {
    for (long k1 = 0; k1 <= n; ++k1)
      for (long k2 = 0; k1 + k2 <= n; ++k2) {
        const long k0 = n - k1 - k2;
        const double lc = std::lgamma(n + 1.0) - std::lgamma(k0 + 1.0) - std::lgamma(k1 + 1.0) -
                          std::lgamma(k2 + 1.0);
        const double lp = k0 * std::log(lam[0]) + k1 * std::log(lam[1]) + k2 * std::log(lam[2]);
        total += std::exp(lc + lp) * lc / std::log(2.0);
      }
  }
  return total / n;
}

inline double min_eigenvalue_oracle(const CMatrix& m) {
  Eigen::ComplexEigenSolver<CMatrix> es(m);
  double lo = es.eigenvalues()(0).real();
  for (long i = 1; i < es.eigenvalues().size(); ++i) lo = std::min(lo, es.eigenvalues()(i).real());
  return lo;
}

// Smallest half-width >= w whose window around n p holds at least one integer.
inline double nonempty_half_width(int n, double p, double w) {
  const double np = n * p;
  return std::max(w, std::abs(np - std::round(np)) + 1e-9);
}

}  // namespace testing
