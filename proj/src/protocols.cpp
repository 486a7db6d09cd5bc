#include "asymcont/protocols.hpp"

#include <algorithm>
#include <cmath>

#include "asymcont/states.hpp"

namespace asymcont {

namespace {

/// E[ln K!] for K ~ Binomial(n, q), with ln k! from `lf`.
double expected_log_factorial(const std::vector<double>& lf, long n, double q) {
  if (q >= 1.0) return lf[n];
  const double lq = std::log(q), l1q = std::log1p(-q);
  double mass = 0.0, acc = 0.0;
  for (long k = 0; k <= n; ++k) {
    const double w = std::exp(lf[n] - lf[k] - lf[n - k] + k * lq + (n - k) * l1q);
    mass += w;
    acc += w * lf[k];
  }
  return acc / mass;
}

std::vector<double> checked_distribution(std::span<const double> probs) {
  if (probs.empty()) throw DomainError("distribution is empty");
  double total = 0.0;
  std::vector<double> out;
  for (double p : probs) {
    if (!(p >= 0.0)) throw DomainError("distribution has a negative entry");
    total += p;
    if (p > 0.0) out.push_back(p);
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("distribution does not sum to 1");
  for (double& p : out) p /= total;
  return out;
}

}  // namespace

double concentration_yield(std::span<const double> schmidt_squares, long n) {
  std::vector<double> probs = checked_distribution(schmidt_squares);
  if (n < 1) throw DomainError("concentration_yield: n must be >= 1");
  if (probs.size() == 1) return 0.0;
  // E[ln multinomial(K)] = ln n! - sum_i E[ln K_i!], and each K_i is
  // Binomial(n, lambda_i) on its own.
  std::vector<double> lf(static_cast<std::size_t>(n) + 1, 0.0);
  for (long k = 1; k <= n; ++k) lf[k] = lf[k - 1] + std::log(static_cast<double>(k));
  double nats = lf[n];
  for (double q : probs) nats -= expected_log_factorial(lf, n, q);
  return std::max(0.0, nats / std::log(2.0) / static_cast<double>(n));
}

YieldCurve concentration_curve(std::span<const double> schmidt_squares,
                               std::span<const long> ns) {
  YieldCurve curve;
  curve.protocol = "concentration";
  curve.asymptote = shannon_entropy(checked_distribution(schmidt_squares));
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (i > 0 && ns[i] <= ns[i - 1]) {
      throw DomainError("concentration_curve: n values must be strictly increasing");
    }
    curve.points.push_back({ns[i], concentration_yield(schmidt_squares, ns[i])});
  }
  return curve;
}

ConversionRate conversion_rate(const DensityMatrix& rho, const DensityMatrix& sigma) {
  ConversionRate out;
  out.distillable = ed_lower(rho);
  if (out.distillable.value <= 0.0) {
    throw UndefinedRate("conversion_rate: ed_lower(rho) = 0, rho is not certified distillable");
  }
  out.cost = ec_upper(sigma);
  if (out.cost.value <= 0.0) {
    throw UndefinedRate("conversion_rate: ec_upper(sigma) = 0, target carries no entanglement");
  }
  out.rate = out.distillable.value / out.cost.value;
  return out;
}

EtaScan eta_continuity_scan(const DensityMatrix& xi, std::span<const double> eps_grid) {
  if (xi.dim_a() != 2 || xi.dim_b() != 2) {
    throw DimensionMismatch("eta_continuity_scan requires a 2x2 noise state");
  }
  const DensityMatrix target = phi_plus().projector();
  EtaScan scan;
  for (double eps : eps_grid) {
    if (!(eps >= 0.0 && eps <= 1.0)) throw DomainError("epsilon must lie in [0, 1]");
    const DensityMatrix noisy = mix(target, xi, eps);
    scan.rows.push_back({eps, hashing_yield(twirl_to_bell_diagonal(noisy)).value});
  }
  std::vector<EtaRow> sorted = scan.rows;
  std::sort(sorted.begin(), sorted.end(),
            [](const EtaRow& a, const EtaRow& b) { return a.epsilon < b.epsilon; });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double jump = std::abs(sorted[i].yield - sorted[i - 1].yield);
    const double gap = sorted[i].epsilon - sorted[i - 1].epsilon;
    scan.max_adjacent_jump = std::max(scan.max_adjacent_jump, jump);
    if (gap > 0.0) scan.lipschitz = std::max(scan.lipschitz, jump / gap);
  }
  return scan;
}

CatalyticRate catalytic_rate(double delta, double ec_sigma, double ed_rho_p) {
  if (!(delta > 0.0) || !(ec_sigma > 0.0) || !(ed_rho_p > 0.0)) {
    throw DomainError("catalytic_rate: delta, ec_sigma and ed_rho_p must be positive");
  }
  CatalyticRate out{delta, ec_sigma, ed_rho_p};
  const double x = delta / ec_sigma;
  out.p = x / (1.0 + x);
  out.k = 1.0 / ec_sigma - 1.0 / ed_rho_p;
  out.factor = 1.0 + delta * out.k;
  return out;
}

}  // namespace asymcont
