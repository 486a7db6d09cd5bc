#pragma once

// Computable entanglement quantities, in ebits (base-2 logarithms).
//
// Distillable entanglement and entanglement cost are not computable; they are
// replaced by surrogates that are tagged with the direction in which they bound
// the true quantity, so a lower bound is never mistaken for an exact value.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "asymcont/linalg.hpp"

namespace asymcont {

enum class BoundKind { exact, lower_bound, upper_bound };

std::string_view to_string(BoundKind kind);

struct MeasureValue {
  double value = 0.0;
  BoundKind kind = BoundKind::exact;
  std::string method;
};

/// Bell-basis weights (Phi+, Phi-, Psi+, Psi-) of a two-qubit state.
class BellDiagonalProbs {
 public:
  explicit BellDiagonalProbs(std::array<double, 4> probs);

  const std::array<double, 4>& values() const noexcept { return probs_; }
  double operator[](std::size_t i) const { return probs_[i]; }
  double fidelity() const noexcept { return probs_[0]; }

 private:
  std::array<double, 4> probs_;
};

/// Shannon entropy in bits, 0 log 0 := 0.
double shannon_entropy(std::span<const double> probs);

double binary_entropy(double x);

/// Base-2 entropy of the spectrum of a PSD unit-trace matrix. Eigenvalues in
/// [-1e-9, 0) are clamped to zero; anything more negative throws DomainError.
double von_neumann_entropy(const CMatrix& rho);

MeasureValue entropy_of_entanglement(const PureState& psi);

struct PptResult {
  bool ppt = true;
  double margin = 0.0;  // minimum eigenvalue of the partial transpose
};

PptResult is_ppt(const DensityMatrix& rho);

/// log2 || rho^Gamma ||_1. Exactly zero for PPT states; an upper bound on E_d.
MeasureValue log_negativity(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit state.
double concurrence_2x2(const DensityMatrix& rho);

/// h2((1 + sqrt(1 - C^2)) / 2).
double eof_from_concurrence(double concurrence);

/// Closed-form two-qubit entanglement of formation (an upper bound on E_c).
MeasureValue eof_2x2(const DensityMatrix& rho);

struct EofSearchOptions {
  int decomposition_size = 0;  // 0 selects (dim_a * dim_b)^2
  int budget = 200;            // optimizer sweeps
  std::uint64_t seed = 0;
};

/// Upper bound on the entanglement of formation found by searching pure-state
/// decompositions. Deterministic in (seed, budget) and non-increasing in budget.
MeasureValue eof_upper_general(const DensityMatrix& rho, const EofSearchOptions& options = {});

/// max(0, 1 - H(probs)): yield of the one-way hashing protocol.
MeasureValue hashing_yield(const BellDiagonalProbs& probs);

/// Bell-basis diagonal of a two-qubit state (what the Bell-diagonal twirl keeps).
BellDiagonalProbs twirl_to_bell_diagonal(const DensityMatrix& rho);

/// Certified lower bound on E_d: hashing after twirling for 2x2, else 0.
MeasureValue ed_lower(const DensityMatrix& rho);

/// Upper bound on E_c: eof_2x2 for 2x2, else eof_upper_general.
MeasureValue ec_upper(const DensityMatrix& rho, const EofSearchOptions& options = {});

}  // namespace asymcont
