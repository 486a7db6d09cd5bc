#include "asymcont/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "asymcont/states.hpp"

namespace asymcont {

namespace {

constexpr double kPsdFloor = -1e-9;

void require_two_qubits(const DensityMatrix& rho, const char* op) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    throw DimensionMismatch(std::string(op) + " requires a 2x2 system");
  }
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

std::string_view to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::exact:
      return "exact";
    case BoundKind::lower_bound:
      return "lower_bound";
    case BoundKind::upper_bound:
      return "upper_bound";
  }
  return "unknown";
}

BellDiagonalProbs::BellDiagonalProbs(std::array<double, 4> probs) : probs_(probs) {
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw DomainError("Bell-diagonal probabilities must be non-negative");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw DomainError("Bell-diagonal probabilities must sum to 1");
  }
}

double shannon_entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) h += plogp(p);
  return h;
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("binary_entropy: x must lie in [0, 1]");
  return plogp(x) + plogp(1.0 - x);
}

double von_neumann_entropy(const CMatrix& rho) {
  const RVector ev = hermitian_eigenvalues(rho);
  double h = 0.0;
  for (double l : ev) {
    if (l < kPsdFloor) throw DomainError("von_neumann_entropy: negative eigenvalue");
    h += plogp(std::max(l, 0.0));
  }
  return h;
}

MeasureValue entropy_of_entanglement(const PureState& psi) {
  const std::vector<double> sq = schmidt_decompose(psi).squares();
  return {shannon_entropy(sq), BoundKind::exact, "entropy_of_entanglement"};
}

PptResult is_ppt(const DensityMatrix& rho) {
  const double margin = hermitian_eigenvalues(partial_transpose(rho)).minCoeff();
  return {margin >= kPsdFloor, margin};
}

MeasureValue log_negativity(const DensityMatrix& rho) {
  const RVector ev = hermitian_eigenvalues(partial_transpose(rho));
  MeasureValue out{0.0, BoundKind::exact, "log_negativity"};
  if (ev.minCoeff() >= kPsdFloor) return out;
  out.value = std::max(0.0, std::log2(ev.cwiseAbs().sum()));
  return out;
}

double concurrence_2x2(const DensityMatrix& rho) {
  require_two_qubits(rho, "concurrence_2x2");
  CMatrix yy = CMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  // With rho = W W^dag, the square roots of the eigenvalues of rho yy conj(rho) yy are the
  // singular values of W^T yy W.
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
  const RVector root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const CMatrix w = es.eigenvectors() * root.asDiagonal();
  const RVector sv = Eigen::JacobiSVD<CMatrix>(w.transpose() * yy * w).singularValues();

  std::array<double, 4> s{};
  for (int i = 0; i < 4; ++i) s[i] = sv(i);
  std::sort(s.begin(), s.end(), std::greater<>());
  return std::clamp(s[0] - s[1] - s[2] - s[3], 0.0, 1.0);
}

double eof_from_concurrence(double concurrence) {
  if (!(concurrence >= 0.0 && concurrence <= 1.0)) {
    throw DomainError("eof_from_concurrence: concurrence must lie in [0, 1]");
  }
  // (1 - sqrt(1 - C^2)) / 2 written as C^2 / (2 (1 + sqrt(1 - C^2))) to avoid cancellation.
  const double c2 = concurrence * concurrence;
  const double x = c2 / (2.0 * (1.0 + std::sqrt(1.0 - c2)));
  return binary_entropy(x);
}

MeasureValue eof_2x2(const DensityMatrix& rho) {
  return {eof_from_concurrence(concurrence_2x2(rho)), BoundKind::exact, "eof_2x2"};
}

MeasureValue hashing_yield(const BellDiagonalProbs& probs) {
  const double h = shannon_entropy(probs.values());
  return {std::max(0.0, 1.0 - h), BoundKind::lower_bound, "hashing_yield"};
}

BellDiagonalProbs twirl_to_bell_diagonal(const DensityMatrix& rho) {
  require_two_qubits(rho, "twirl_to_bell_diagonal");
  std::array<double, 4> probs{};
  double total = 0.0;
  for (int i = 0; i < 4; ++i) {
    const CVector b = bell_state(static_cast<Bell>(i)).amplitudes();
    double w = (b.adjoint() * rho.matrix() * b)(0, 0).real();
    if (w < 0.0) {
      if (w < kPsdFloor) throw DomainError("twirl_to_bell_diagonal: negative Bell weight");
      w = 0.0;
    }
    probs[i] = w;
    total += w;
  }
  for (double& p : probs) p /= total;
  return BellDiagonalProbs(probs);
}

MeasureValue ed_lower(const DensityMatrix& rho) {
  if (rho.dim_a() != 2 || rho.dim_b() != 2) {
    return {0.0, BoundKind::lower_bound, "vacuous"};
  }
  // Local Bell relabelings permute the weights, and the hashing yield is
  // permutation invariant, so a single evaluation is the maximum.
  MeasureValue v = hashing_yield(twirl_to_bell_diagonal(rho));
  v.method = "hashing_after_twirl";
  return v;
}

MeasureValue ec_upper(const DensityMatrix& rho, const EofSearchOptions& options) {
  if (rho.dim_a() == 2 && rho.dim_b() == 2) {
    return {eof_2x2(rho).value, BoundKind::upper_bound, "eof_2x2"};
  }
  MeasureValue v = eof_upper_general(rho, options);
  v.kind = BoundKind::upper_bound;
  return v;
}

}  // namespace asymcont
