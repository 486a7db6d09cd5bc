// Upper bound on the entanglement of formation by decomposition search.
//
// Every ensemble {q_i, psi_i} with rho = sum_i q_i |psi_i><psi_i| has the form
// sqrt(q_i) psi_i = sum_j U_ij sqrt(lambda_j) e_j, where (lambda_j, e_j) is the
// eigendecomposition of rho and U is a k x rank isometry. The search keeps the
// unnormalized vectors as the columns of a d x k matrix and applies Givens
// rotations to pairs of columns, which keeps U an isometry and touches only two
// terms of the objective per move.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "asymcont/measures.hpp"
#include "asymcont/random.hpp"

namespace asymcont {

namespace {

constexpr double kRankTolerance = 1e-12;
constexpr double kInitialStep = 0.3;
constexpr double kMinStep = 1e-7;
constexpr double kMaxStep = std::numbers::pi / 4.0;

double weighted_entropy(const RVector& mu) {
  const double total = mu.sum();
  if (total <= 0.0) return 0.0;
  double h = 0.0;
  for (double m : mu) {
    if (m > 0.0) h -= m * std::log2(m / total);
  }
  return h;
}

/// ||v||^2 * E(v / ||v||) for an unnormalized bipartite vector.
class TermCost {
 public:
  TermCost(int dim_a, int dim_b) : dim_a_(dim_a), dim_b_(dim_b) {}

  double operator()(const Complex* v) const {
    // Column-major (dim_b x dim_a) view: element (b, a) = v[a * dim_b + b].
    Eigen::Map<const CMatrix> m(v, dim_b_, dim_a_);
    const CMatrix gram = dim_a_ <= dim_b_ ? CMatrix(m.adjoint() * m) : CMatrix(m * m.adjoint());
    if (gram.rows() == 1) return 0.0;
    if (gram.rows() == 2) return two_level(gram);
    Eigen::SelfAdjointEigenSolver<CMatrix> es(gram, Eigen::EigenvaluesOnly);
    return weighted_entropy(es.eigenvalues().cwiseMax(0.0));
  }

 private:
  static double two_level(const CMatrix& g) {
    const double a = g(0, 0).real();
    const double d = g(1, 1).real();
    const double det = a * d - std::norm(g(0, 1));
    const double half = 0.5 * (a + d);
    const double disc = std::sqrt(std::max(0.0, half * half - det));
    const double hi = half + disc;
    if (hi <= 0.0) return 0.0;
    RVector mu(2);
    mu << hi, std::max(0.0, det / hi);
    return weighted_entropy(mu);
  }

  int dim_a_;
  int dim_b_;
};

class DecompositionSearch {
 public:
  DecompositionSearch(const DensityMatrix& rho, int k)
      : cost_(rho.dim_a(), rho.dim_b()), d_(rho.dim()), k_(k) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(rho.matrix());
    for (int j = 0; j < d_; ++j) {
      const double l = es.eigenvalues()(j);
      if (l > kRankTolerance) {
        weights_.push_back(std::sqrt(l));
        vectors_.push_back(es.eigenvectors().col(j));
      }
    }
    if (k_ < rank()) {
      throw DomainError("eof_upper_general: decomposition size " + std::to_string(k_) +
                        " is below rank " + std::to_string(rank()));
    }
  }

  int rank() const { return static_cast<int>(weights_.size()); }

  /// Eigen-ensemble padded with zero vectors.
  void start_spectral() {
    cols_ = CMatrix::Zero(d_, k_);
    for (int j = 0; j < rank(); ++j) cols_.col(j) = weights_[j] * vectors_[j];
    reset_costs();
  }

  /// Ensemble from the first `rank` columns of a Haar unitary.
  void start_random(Rng& rng) {
    const CMatrix u = random_unitary(k_, rng);
    cols_ = CMatrix::Zero(d_, k_);
    for (int i = 0; i < k_; ++i)
      for (int j = 0; j < rank(); ++j) cols_.col(i) += u(i, j) * weights_[j] * vectors_[j];
    reset_costs();
  }

  double total() const {
    double t = 0.0;
    for (double c : costs_) t += c;
    return t;
  }

  /// One pass of pattern-search Givens moves over all column pairs.
  /// Returns false once every step has collapsed below kMinStep.
  bool sweep() {
    bool active = false;
    for (int i = 0; i < k_; ++i) {
      for (int j = i + 1; j < k_; ++j) {
        if (norms_[i] == 0.0 && norms_[j] == 0.0) continue;
        double& step = steps_(i, j);
        if (step < kMinStep) continue;
        active = true;
        if (try_pair(i, j, step)) {
          step = std::min(2.0 * step, kMaxStep);
        } else {
          step *= 0.5;
        }
      }
    }
    return active;
  }

 private:
  void reset_costs() {
    costs_.assign(k_, 0.0);
    norms_.assign(k_, 0.0);
    for (int i = 0; i < k_; ++i) refresh(i);
    steps_ = Eigen::MatrixXd::Constant(k_, k_, kInitialStep);
  }

  void refresh(int i) {
    norms_[i] = cols_.col(i).squaredNorm();
    costs_[i] = norms_[i] > 0.0 ? cost_(cols_.col(i).data()) : 0.0;
  }

  bool try_pair(int i, int j, double step) {
    static constexpr double kPhases[] = {0.0, std::numbers::pi / 2.0};
    const double before = costs_[i] + costs_[j];
    for (double phase : kPhases) {
      for (double sign : {1.0, -1.0}) {
        const double theta = sign * step;
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex e = std::polar(1.0, phase);
        cand_i_ = c * cols_.col(i) - e * s * cols_.col(j);
        cand_j_ = std::conj(e) * s * cols_.col(i) + c * cols_.col(j);
        const double ci = cand_i_.squaredNorm() > 0.0 ? cost_(cand_i_.data()) : 0.0;
        const double cj = cand_j_.squaredNorm() > 0.0 ? cost_(cand_j_.data()) : 0.0;
        if (ci + cj < before - 1e-15) {
          cols_.col(i) = cand_i_;
          cols_.col(j) = cand_j_;
          refresh(i);
          refresh(j);
          return true;
        }
      }
    }
    return false;
  }

  TermCost cost_;
  int d_;
  int k_;
  std::vector<double> weights_;
  std::vector<CVector> vectors_;
  CMatrix cols_;
  std::vector<double> costs_;
  std::vector<double> norms_;
  Eigen::MatrixXd steps_;
  CVector cand_i_;
  CVector cand_j_;
};

}  // namespace

MeasureValue eof_upper_general(const DensityMatrix& rho, const EofSearchOptions& options) {
  const int k =
      options.decomposition_size > 0 ? options.decomposition_size : rho.dim() * rho.dim();
  if (options.budget < 0) throw DomainError("eof_upper_general: budget must be >= 0");

  DecompositionSearch search(rho, k);
  search.start_spectral();
  double best = search.total();

  Rng rng = make_rng(options.seed);
  for (int it = 0; it < options.budget; ++it) {
    if (!search.sweep()) search.start_random(rng);
    best = std::min(best, search.total());
  }
  return {std::max(0.0, best), BoundKind::upper_bound, "eof_upper_general"};
}

}  // namespace asymcont
