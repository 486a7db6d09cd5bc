#pragma once

// Finite-n rate bookkeeping for the asymptotic conversions: pure-state
// concentration, conversion between mixed states, the near-Phi+ hashing yield
// and the catalytic chain.

#include <span>
#include <string>
#include <vector>

#include "asymcont/linalg.hpp"
#include "asymcont/measures.hpp"

namespace asymcont {

class UndefinedRate : public Error {
 public:
  using Error::Error;
};

struct YieldPoint {
  long n = 0;
  double yield_per_copy = 0.0;
};

struct YieldCurve {
  std::string protocol;
  double asymptote = 0.0;
  std::vector<YieldPoint> points;  // strictly increasing n
};

/// Expected ebits per copy of the type-measurement concentration protocol on n
/// copies of a pure state with Schmidt squares `schmidt_squares`:
///   (1/n) sum_k Multinomial(n, lambda)(k) log2 (n choose k).
/// Computed as (ln n! - sum_i E[ln K_i!]) / (n ln 2) with K_i ~ Binomial(n, lambda_i).
double concentration_yield(std::span<const double> schmidt_squares, long n);

YieldCurve concentration_curve(std::span<const double> schmidt_squares,
                               std::span<const long> ns);

struct ConversionRate {
  double rate = 0.0;
  BoundKind kind = BoundKind::lower_bound;
  MeasureValue distillable;  // numerator: ed_lower(rho)
  MeasureValue cost;         // denominator: ec_upper(sigma)
};

/// Certified achievable rate ed_lower(rho) / ec_upper(sigma) for rho -> sigma.
/// Throws UndefinedRate when either factor vanishes.
ConversionRate conversion_rate(const DensityMatrix& rho, const DensityMatrix& sigma);

struct EtaRow {
  double epsilon = 0.0;
  double yield = 0.0;  // certified lower bound on 1 - eta(epsilon)
};

struct EtaScan {
  std::vector<EtaRow> rows;   // in input order
  double lipschitz = 0.0;     // max |dy / d epsilon| over neighbours in epsilon
  double max_adjacent_jump = 0.0;
};

/// Hashing yield of the twirl of (1 - eps) |Phi+><Phi+| + eps xi for each eps.
EtaScan eta_continuity_scan(const DensityMatrix& xi, std::span<const double> eps_grid);

struct CatalyticRate {
  double delta = 0.0;
  double ec_sigma = 0.0;
  double ed_rho_p = 0.0;
  double p = 0.0;       // (delta / ec_sigma) / (1 + delta / ec_sigma)
  double k = 0.0;       // 1 / ec_sigma - 1 / ed_rho_p
  double factor = 1.0;  // 1 + delta * k
};

CatalyticRate catalytic_rate(double delta, double ec_sigma, double ed_rho_p);

}  // namespace asymcont
