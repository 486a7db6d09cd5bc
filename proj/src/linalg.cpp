#include "asymcont/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

namespace asymcont {

namespace {

CMatrix hermitian_part(const CMatrix& m) { return (m + m.adjoint()) * 0.5; }

bool is_hermitian(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void require_same_dims(const DensityMatrix& a, const DensityMatrix& b, const char* op) {
  if (a.dim_a() != b.dim_a() || a.dim_b() != b.dim_b()) {
    throw DimensionMismatch(std::string(op) + ": states have dimensions " +
                            std::to_string(a.dim_a()) + "x" + std::to_string(a.dim_b()) +
                            " and " + std::to_string(b.dim_a()) + "x" +
                            std::to_string(b.dim_b()));
  }
}

}  // namespace

std::string Diagnostics::describe() const {
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "shape %s, hermiticity defect %.3g, trace defect %.3g, min eigenvalue %.3g",
                shape_ok ? "ok" : "bad", hermiticity_defect, trace_defect, min_eigenvalue);
  return buf;
}

Diagnostics validate(int dim_a, int dim_b, const CMatrix& entries, const Tolerances& tol) {
  Diagnostics d;
  const long side = static_cast<long>(dim_a) * dim_b;
  d.shape_ok = dim_a > 0 && dim_b > 0 && entries.rows() == side && entries.cols() == side;
  if (!d.shape_ok) {
    d.pass = false;
    return d;
  }
  d.hermiticity_defect = (entries - entries.adjoint()).cwiseAbs().maxCoeff();
  d.trace_defect = std::abs(entries.trace() - Complex(1.0, 0.0));
  d.min_eigenvalue = hermitian_eigenvalues(entries).minCoeff();
  d.pass = d.hermiticity_defect <= tol.hermiticity && d.trace_defect <= tol.trace &&
           d.min_eigenvalue >= tol.psd_floor;
  return d;
}

DensityMatrix::DensityMatrix(int dim_a, int dim_b, CMatrix entries, const Tolerances& tol)
    : dim_a_(dim_a), dim_b_(dim_b) {
  Diagnostics d = validate(dim_a, dim_b, entries, tol);
  if (!d.pass) throw InvalidState("not a valid density matrix", d);
  entries_ = hermitian_part(entries);
}

DensityMatrix DensityMatrix::unchecked(int dim_a, int dim_b, CMatrix entries) {
  DensityMatrix rho;
  rho.dim_a_ = dim_a;
  rho.dim_b_ = dim_b;
  rho.entries_ = std::move(entries);
  return rho;
}

PureState::PureState(int dim_a, int dim_b, CVector amplitudes)
    : dim_a_(dim_a), dim_b_(dim_b), amplitudes_(std::move(amplitudes)) {
  if (dim_a <= 0 || dim_b <= 0 || amplitudes_.size() != static_cast<long>(dim_a) * dim_b) {
    throw DimensionMismatch("pure state amplitude count does not match dimensions");
  }
  if (std::abs(amplitudes_.norm() - 1.0) > 1e-12) {
    throw DomainError("pure state is not normalized (norm " +
                      std::to_string(amplitudes_.norm()) + ")");
  }
}

PureState PureState::normalized(int dim_a, int dim_b, CVector amplitudes) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw DomainError("cannot normalize a zero vector");
  amplitudes /= n;
  return PureState(dim_a, dim_b, std::move(amplitudes));
}

DensityMatrix PureState::projector() const {
  return DensityMatrix(dim_a_, dim_b_, amplitudes_ * amplitudes_.adjoint());
}

SchmidtForm::SchmidtForm(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  double total = 0.0;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] < 0.0) throw DomainError("negative Schmidt coefficient");
    if (i > 0 && coefficients_[i] > coefficients_[i - 1]) {
      throw DomainError("Schmidt coefficients must be non-increasing");
    }
    total += coefficients_[i] * coefficients_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("Schmidt squares do not sum to 1");
}

std::vector<double> SchmidtForm::squares() const {
  std::vector<double> out(coefficients_.size());
  std::transform(coefficients_.begin(), coefficients_.end(), out.begin(),
                 [](double c) { return c * c; });
  return out;
}

RVector hermitian_eigenvalues(const CMatrix& m) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(hermitian_part(m), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

std::size_t checked_power_side(std::size_t side, int n, std::size_t cap) {
  if (n < 1) throw DomainError("tensor power requires n >= 1");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > cap / side) throw SizeLimitError(total * side, cap);
    total *= side;
  }
  if (total > cap) throw SizeLimitError(total, cap);
  return total;
}

CMatrix regroup_copies(const CMatrix& interleaved, std::span<const int> dims_a,
                       std::span<const int> dims_b) {
  const std::size_t copies = dims_a.size();
  if (dims_b.size() != copies) throw DimensionMismatch("regroup: dimension lists differ");
  long side_a = 1, side_b = 1;
  for (std::size_t c = 0; c < copies; ++c) {
    side_a *= dims_a[c];
    side_b *= dims_b[c];
  }
  const long side = side_a * side_b;
  if (interleaved.rows() != side || interleaved.cols() != side) {
    throw DimensionMismatch("regroup: matrix side does not match dimensions");
  }

  // perm[interleaved index] = grouped index
  std::vector<long> perm(side);
  std::vector<int> digits_a(copies), digits_b(copies);
  for (long idx = 0; idx < side; ++idx) {
    long rest = idx;
    for (std::size_t c = copies; c-- > 0;) {
      digits_b[c] = static_cast<int>(rest % dims_b[c]);
      rest /= dims_b[c];
      digits_a[c] = static_cast<int>(rest % dims_a[c]);
      rest /= dims_a[c];
    }
    long ia = 0, ib = 0;
    for (std::size_t c = 0; c < copies; ++c) {
      ia = ia * dims_a[c] + digits_a[c];
      ib = ib * dims_b[c] + digits_b[c];
    }
    perm[idx] = ia * side_b + ib;
  }

  CMatrix out(side, side);
  for (long j = 0; j < side; ++j) {
    for (long i = 0; i < side; ++i) out(perm[i], perm[j]) = interleaved(i, j);
  }
  return out;
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b, std::size_t cap) {
  const std::size_t side = static_cast<std::size_t>(a.dim()) * b.dim();
  if (side > cap) throw SizeLimitError(side, cap);
  CMatrix kron = Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval();
  const int da[] = {a.dim_a(), b.dim_a()};
  const int db[] = {a.dim_b(), b.dim_b()};
  return DensityMatrix(a.dim_a() * b.dim_a(), a.dim_b() * b.dim_b(),
                       regroup_copies(kron, da, db));
}

DensityMatrix tensor_power(const DensityMatrix& rho, int n, std::size_t cap) {
  checked_power_side(static_cast<std::size_t>(rho.dim()), n, cap);
  if (n == 1) return rho;
  CMatrix acc = rho.matrix();
  for (int i = 1; i < n; ++i) acc = Eigen::kroneckerProduct(acc, rho.matrix()).eval();
  std::vector<int> da(n, rho.dim_a()), db(n, rho.dim_b());
  int side_a = 1, side_b = 1;
  for (int i = 0; i < n; ++i) {
    side_a *= rho.dim_a();
    side_b *= rho.dim_b();
  }
  // Kronecker powers of a validated state are valid by construction, so validation is skipped.
  return DensityMatrix::unchecked(side_a, side_b, hermitian_part(regroup_copies(acc, da, db)));
}

CMatrix partial_trace(const DensityMatrix& rho, Party traced) {
  const int da = rho.dim_a(), db = rho.dim_b();
  const CMatrix& m = rho.matrix();
  if (traced == Party::B) {
    CMatrix out = CMatrix::Zero(da, da);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < db; ++k) out(i, j) += m(i * db + k, j * db + k);
    return out;
  }
  CMatrix out = CMatrix::Zero(db, db);
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < db; ++j)
      for (int k = 0; k < da; ++k) out(i, j) += m(k * db + i, k * db + j);
  return out;
}

CMatrix partial_transpose(const DensityMatrix& rho) {
  const int da = rho.dim_a(), db = rho.dim_b();
  const CMatrix& m = rho.matrix();
  CMatrix out(m.rows(), m.cols());
  for (int a1 = 0; a1 < da; ++a1)
    for (int b1 = 0; b1 < db; ++b1)
      for (int a2 = 0; a2 < da; ++a2)
        for (int b2 = 0; b2 < db; ++b2)
          out(a1 * db + b1, a2 * db + b2) = m(a1 * db + b2, a2 * db + b1);
  return out;
}

double trace_norm(const CMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("trace_norm: matrix is not square");
  if (m.size() == 0) return 0.0;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (is_hermitian(m, 1e-12 * scale)) {
    return hermitian_eigenvalues(m).cwiseAbs().sum();
  }
  Eigen::BDCSVD<CMatrix> svd(m);
  return svd.singularValues().sum();
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  require_same_dims(rho, sigma, "trace_distance");
  return std::clamp(0.5 * trace_norm(rho.matrix() - sigma.matrix()), 0.0, 1.0);
}

DensityMatrix mix(const DensityMatrix& rho, const DensityMatrix& sigma, double p) {
  require_same_dims(rho, sigma, "mix");
  if (!(p >= -1.0 && p <= 1.0)) throw DomainError("mix: p must lie in [-1, 1]");
  CMatrix m = (1.0 - p) * rho.matrix() + p * sigma.matrix();
  return DensityMatrix(rho.dim_a(), rho.dim_b(), std::move(m));
}

SchmidtForm schmidt_decompose(const PureState& psi) {
  const int da = psi.dim_a(), db = psi.dim_b();
  CMatrix amp(da, db);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) amp(i, j) = psi.amplitudes()(i * db + j);
  Eigen::JacobiSVD<CMatrix> svd(amp);
  const RVector& s = svd.singularValues();
  std::vector<double> coeffs(s.data(), s.data() + s.size());
  std::sort(coeffs.begin(), coeffs.end(), std::greater<>());
  // Renormalize away the last-ulp drift of the SVD.
  const double total = std::sqrt(std::inner_product(coeffs.begin(), coeffs.end(),
                                                    coeffs.begin(), 0.0));
  for (double& c : coeffs) c /= total;
  return SchmidtForm(std::move(coeffs));
}

}  // namespace asymcont
