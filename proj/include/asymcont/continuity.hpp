#pragma once

// Balls of distillable states and the numerically checkable consequences of
// continuity inside them.
//
// Around a center rho with trace-distance radius epsilon, let E_d(B) be the
// minimum of distillable entanglement over the ball and E_c(B) the maximum of
// the entanglement cost. With r = E_d(B) / E_c(B) and the loss factor
// kappa(p) = p / (p + r / (1 - r)), every asymptotic measure obeys
//   |E(rho) - E(rho')| <= delta / epsilon * T(rho, rho'),
//   delta = E_c(B) (1 - r) / r.
// The true extrema are not computable; they are replaced by sampled extrema of
// the certified surrogates ed_lower / ec_upper.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asymcont/linalg.hpp"
#include "asymcont/measures.hpp"

namespace asymcont {

class BallNotCertified : public Error {
 public:
  /// `index` is the offending sample, or -1 for the center itself.
  BallNotCertified(long index, const std::string& what) : Error(what), index_(index) {}
  long index() const noexcept { return index_; }

 private:
  long index_;
};

class OutsideBall : public DomainError {
 public:
  using DomainError::DomainError;
};

struct Surrogates {
  std::function<MeasureValue(const DensityMatrix&)> ed_lower;
  std::function<MeasureValue(const DensityMatrix&)> ec_upper;

  static Surrogates defaults();
};

struct BallSpec {
  DensityMatrix center;
  double epsilon;
  int sample_count;
  std::uint64_t seed;
  int surface_count = 4;  // extra points with T(center, x) = epsilon exactly
};

struct BallPoint {
  DensityMatrix state;
  double distance;  // T(center, state)
  bool on_surface;
};

/// Interior samples first (index < sample_count), then surface points.
/// Each point is (1 - t) center + t G, G a Ginibre state, with t chosen so the
/// distance is u * epsilon, u uniform on (0, 1] (u = 1 for surface points).
std::vector<BallPoint> sample_ball(const BallSpec& spec);

/// The state (1 - t) center + t direction at trace distance `distance` from
/// center. Throws DomainError if that needs t outside [0, 1].
DensityMatrix point_at_distance(const DensityMatrix& center, const DensityMatrix& direction,
                                double distance);

struct BallConstants {
  double ed_min_lower = 0.0;
  double ec_max_upper = 0.0;
  double r = 1.0;
  double delta = 0.0;
  bool reversible = false;    // r == 1: zero gap, kappa == 0
  bool conservative = false;  // extrema widened by fitted Lipschitz constants
  double ed_lipschitz = 0.0;  // sampled max |ed(x) - ed(center)| / T
  double ec_lipschitz = 0.0;
  std::size_t evaluated = 0;  // states evaluated, center included
  std::string provenance;     // e.g. "sampled: hashing_after_twirl / eof_2x2"
};

BallConstants ball_constants(const DensityMatrix& center, double epsilon,
                             std::span<const BallPoint> points,
                             const Surrogates& surrogates = Surrogates::defaults(),
                             bool conservative = false);

BallConstants ball_constants(const BallSpec& spec,
                             const Surrogates& surrogates = Surrogates::defaults(),
                             bool conservative = false);

/// p / (p + r / (1 - r)); 0 when r == 1.
double kappa(double p, double r);

/// delta / epsilon * T(center, other). Throws OutsideBall if T > epsilon.
double lipschitz_bound(const DensityMatrix& center, const DensityMatrix& other,
                       const BallConstants& constants, double epsilon);

struct CorridorRow {
  double p = 0.0;
  double kappa = 0.0;
  double distance = 0.0;  // T(rho, rho_p)
  double ed_center = 0.0;
  double ec_center = 0.0;
  double ed_rho_p = 0.0;
  double ec_rho_p = 0.0;
  double forth_margin = 0.0;  // ec(rho_p) + slack - (1 - kappa) ed(rho)
  double back_margin = 0.0;   // ec(rho) + slack - (1 - kappa) ed(rho_p)
  double lipschitz_bound = 0.0;
  bool lipschitz_consistent = true;  // surrogate corridors compatible with the bound
  bool back_state_exists = true;     // rho_{p-1} = mix(rho, sigma, p - 1) is a state
  bool pass = false;                 // both margins >= 0
};

struct CorridorReport {
  std::vector<CorridorRow> rows;
  std::size_t violations = 0;
  std::size_t back_skipped = 0;
  bool pass = false;
};

CorridorReport corridor_consistency_check(const DensityMatrix& center,
                                          const DensityMatrix& sigma_surface,
                                          const BallConstants& constants,
                                          std::span<const double> p_grid,
                                          const Surrogates& surrogates = Surrogates::defaults(),
                                          double slack = 1e-9);

using StateFamily = std::function<DensityMatrix(double)>;

struct BorderRow2x2 {
  double param = 0.0;
  double eof = 0.0;
  double log_neg = 0.0;
  double ppt_margin = 0.0;
  double concurrence = 0.0;
};

std::vector<BorderRow2x2> border_scan_2x2(const StateFamily& family,
                                          std::span<const double> grid);

struct BorderRow2xN {
  double param = 0.0;
  double log_neg = 0.0;
  double ppt_margin = 0.0;
  std::optional<double> eof_upper;
};

/// Requires dim_a == 2. eof_upper is filled when `eof` is given.
std::vector<BorderRow2xN> border_scan_2xN(const StateFamily& family,
                                          std::span<const double> grid,
                                          std::optional<EofSearchOptions> eof = {});

}  // namespace asymcont
