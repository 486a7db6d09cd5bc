#pragma once

// Dense complex linear algebra on small bipartite systems.
//
// Basis ordering is fixed: a vector index is i_A * dim_b + i_B (A-major,
// row-major). Multi-copy states keep all A factors together and all B
// factors together, so that the A|B cut is preserved under tensoring.

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "asymcont/errors.hpp"

namespace asymcont {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr std::size_t kDefaultSizeCap = 4096;

struct Tolerances {
  double hermiticity = 1e-10;
  double trace = 1e-10;
  double psd_floor = -1e-9;
};

inline constexpr Tolerances kDefaultTolerances{};

/// Outcome of checking a candidate density matrix.
struct Diagnostics {
  bool shape_ok = true;
  double hermiticity_defect = 0.0;  // max |M - M^dagger| elementwise
  double trace_defect = 0.0;        // |tr M - 1|
  double min_eigenvalue = 0.0;      // of (M + M^dagger) / 2
  bool pass = true;

  std::string describe() const;
};

Diagnostics validate(int dim_a, int dim_b, const CMatrix& entries,
                     const Tolerances& tol = kDefaultTolerances);

class InvalidState : public Error {
 public:
  InvalidState(const std::string& what, Diagnostics diag)
      : Error(what + ": " + diag.describe()), diagnostics_(diag) {}

  const Diagnostics& diagnostics() const noexcept { return diagnostics_; }
  double min_eigenvalue() const noexcept { return diagnostics_.min_eigenvalue; }

 private:
  Diagnostics diagnostics_;
};

/// A bipartite mixed state with explicit local dimensions.
///
/// Construction validates Hermiticity, unit trace and positivity and stores the
/// Hermitian part of the input. `unchecked` skips validation and is meant only
/// for diagnostic loading of files that fail those checks.
class DensityMatrix {
 public:
  DensityMatrix(int dim_a, int dim_b, CMatrix entries,
                const Tolerances& tol = kDefaultTolerances);

  static DensityMatrix unchecked(int dim_a, int dim_b, CMatrix entries);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  int dim() const noexcept { return dim_a_ * dim_b_; }
  const CMatrix& matrix() const noexcept { return entries_; }

 private:
  DensityMatrix() = default;

  int dim_a_ = 1;
  int dim_b_ = 1;
  CMatrix entries_;
};

class PureState {
 public:
  /// Requires | ||amplitudes|| - 1 | <= 1e-12.
  PureState(int dim_a, int dim_b, CVector amplitudes);

  /// Normalizes `amplitudes` first; throws on a zero vector.
  static PureState normalized(int dim_a, int dim_b, CVector amplitudes);

  int dim_a() const noexcept { return dim_a_; }
  int dim_b() const noexcept { return dim_b_; }
  const CVector& amplitudes() const noexcept { return amplitudes_; }

  DensityMatrix projector() const;

 private:
  int dim_a_;
  int dim_b_;
  CVector amplitudes_;
};

/// Schmidt coefficients, non-increasing, squares summing to one.
class SchmidtForm {
 public:
  explicit SchmidtForm(std::vector<double> coefficients);

  const std::vector<double>& coefficients() const noexcept { return coefficients_; }
  std::vector<double> squares() const;

 private:
  std::vector<double> coefficients_;
};

enum class Party { A, B };

/// Eigenvalues (ascending) of the Hermitian part of `m`.
RVector hermitian_eigenvalues(const CMatrix& m);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b,
                     std::size_t cap = kDefaultSizeCap);
DensityMatrix tensor_power(const DensityMatrix& rho, int n,
                           std::size_t cap = kDefaultSizeCap);

/// Reorders a Kronecker product taken copy by copy (A1 B1 A2 B2 ...) into the
/// grouped ordering (A1 A2 ... B1 B2 ...).
CMatrix regroup_copies(const CMatrix& interleaved, std::span<const int> dims_a,
                       std::span<const int> dims_b);

/// Reduced state after tracing out `traced`.
CMatrix partial_trace(const DensityMatrix& rho, Party traced);

/// Transpose on the B indices only.
CMatrix partial_transpose(const DensityMatrix& rho);

/// Sum of singular values.
double trace_norm(const CMatrix& m);

/// T(rho, sigma) = tr|rho - sigma| / 2, clamped to [0, 1].
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// (1 - p) rho + p sigma for p in [-1, 1]. Throws InvalidState (carrying the
/// minimum eigenvalue) when the combination leaves the state space.
DensityMatrix mix(const DensityMatrix& rho, const DensityMatrix& sigma, double p);

SchmidtForm schmidt_decompose(const PureState& psi);

/// Side length of a tensor power, or throws SizeLimitError if above `cap`.
std::size_t checked_power_side(std::size_t side, int n, std::size_t cap);

}  // namespace asymcont
