#include "asymcont/mixing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <unsupported/Eigen/KroneckerProduct>

namespace asymcont {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

/// log k! for k <= n.
class LogFactorials {
 public:
  explicit LogFactorials(int n) : table_(static_cast<std::size_t>(n) + 1, 0.0) {
    for (int k = 2; k <= n; ++k) table_[k] = table_[k - 1] + std::log(static_cast<double>(k));
  }
  double operator()(int k) const { return table_[k]; }

 private:
  std::vector<double> table_;
};

double log_pmf(const LogFactorials& lf, int n, int l, double p) {
  if (l < 0 || l > n) return kNegInf;
  if (p == 0.0) return l == 0 ? 0.0 : kNegInf;
  if (p == 1.0) return l == n ? 0.0 : kNegInf;
  return lf(n) - lf(l) - lf(n - l) + l * std::log(p) + (n - l) * std::log1p(-p);
}

double log_sum_exp(const std::vector<double>& logs) {
  double m = kNegInf;
  for (double x : logs) m = std::max(m, x);
  if (m == kNegInf) return kNegInf;
  double s = 0.0;
  for (double x : logs) s += std::exp(x - m);
  return m + std::log(s);
}

// Accumulates pmf terms walking from `start` by `step` in log space. The pmf is log-concave, so
// once a term is smaller than its predecessor the rest are bounded by term * count and the walk
// stops when that bound drops below 1e-18 of the running sum.
double log_tail_walk(const LogFactorials& lf, int n, double p, int start, int step) {
  double acc = kNegInf, previous = kNegInf;
  for (int l = start; l >= 0 && l <= n; l += step) {
    const double t = log_pmf(lf, n, l, p);
    if (t != kNegInf) {
      acc = acc == kNegInf ? t : std::max(acc, t) + std::log1p(std::exp(-std::abs(acc - t)));
    }
    const int left = step > 0 ? n - l : l;
    if (t < previous && t + std::log(static_cast<double>(left) + 1.0) < acc - 41.5) break;
    previous = t;
  }
  return acc;
}

double tail_mass_with(const LogFactorials& lf, int n, double p, Window w) {
  const double lower = log_tail_walk(lf, n, p, w.lo - 1, -1);
  const double upper = log_tail_walk(lf, n, p, w.hi + 1, +1);
  return std::clamp(std::exp(lower) + std::exp(upper), 0.0, 1.0);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("p must lie in [0, 1]");
}

Window window_for(int n, double p, double w) {
  const double center = n * p;
  // Shave a few ulps so that exact integers are not lost to rounding of n*p.
  const double eps = 1e-12 * std::max(1.0, center);
  Window win;
  win.lo = std::max(0, static_cast<int>(std::ceil(center - w - eps)));
  win.hi = std::min(n, static_cast<int>(std::floor(center + w + eps)));
  return win;
}

}  // namespace

double default_half_width(int n) { return std::pow(static_cast<double>(n), 2.0 / 3.0); }

double hoeffding_bound(int n, double half_width) {
  return 2.0 * std::exp(-2.0 * half_width * half_width / n);
}

double log_binomial_pmf(int n, int l, double p) {
  check_probability(p);
  if (n < 0) throw DomainError("n must be non-negative");
  return log_pmf(LogFactorials(n), n, l, p);
}

double binomial_tail_mass(int n, double p, Window window) {
  check_probability(p);
  return tail_mass_with(LogFactorials(n), n, p, window);
}

BinomialWindow binomial_window(int n, double p, std::optional<double> half_width) {
  check_probability(p);
  if (n < 1) throw DomainError("binomial_window: n must be >= 1");
  const double w = half_width.value_or(default_half_width(n));
  if (!(w >= 0.0)) throw DomainError("binomial_window: half-width must be >= 0");
  BinomialWindow out;
  out.window = window_for(n, p, w);
  if (out.window.lo > out.window.hi) throw DomainError("binomial_window: empty window");
  out.tail_mass = binomial_tail_mass(n, p, out.window);
  return out;
}

MixtureSpec make_mixture_spec(DensityMatrix rho, DensityMatrix sigma, double p, int n,
                              std::optional<double> half_width) {
  const Window w = binomial_window(n, p, half_width).window;
  MixtureSpec spec{std::move(rho), std::move(sigma), p, n, w};
  check_spec(spec);
  return spec;
}

void check_spec(const MixtureSpec& spec) {
  check_probability(spec.p);
  if (spec.n < 1) throw DomainError("mixture spec: n must be >= 1");
  if (spec.rho.dim_a() != spec.sigma.dim_a() || spec.rho.dim_b() != spec.sigma.dim_b()) {
    throw DimensionMismatch("mixture spec: rho and sigma differ in dimensions");
  }
  if (spec.window.lo < 0 || spec.window.hi > spec.n || spec.window.lo > spec.window.hi) {
    throw DomainError("mixture spec: window must be a non-empty subset of [0, n]");
  }
}

namespace {

/// Pattern-averaged block in copy-major order (copy 1, copy 2, ...), before regrouping.
CMatrix copy_major_block(const DensityMatrix& rho, const DensityMatrix& sigma, int n, int l) {
  CMatrix sum;
  long patterns = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != l) continue;
    CMatrix acc = (mask & 1u) ? sigma.matrix() : rho.matrix();
    for (int c = 1; c < n; ++c) {
      const CMatrix& f = (mask >> c) & 1u ? sigma.matrix() : rho.matrix();
      acc = Eigen::kroneckerProduct(acc, f).eval();
    }
    if (sum.size() == 0) {
      sum = std::move(acc);
    } else {
      sum += acc;
    }
    ++patterns;
  }
  return sum / static_cast<double>(patterns);
}

DensityMatrix grouped_state(const DensityMatrix& rho, int n, const CMatrix& copy_major) {
  std::vector<int> da(n, rho.dim_a()), db(n, rho.dim_b());
  int side_a = 1, side_b = 1;
  for (int c = 0; c < n; ++c) {
    side_a *= rho.dim_a();
    side_b *= rho.dim_b();
  }
  return DensityMatrix(side_a, side_b, regroup_copies(copy_major, da, db));
}

}  // namespace

DensityMatrix symmetric_block(const DensityMatrix& rho, const DensityMatrix& sigma, int n,
                              int l, std::size_t cap) {
  if (rho.dim_a() != sigma.dim_a() || rho.dim_b() != sigma.dim_b()) {
    throw DimensionMismatch("symmetric_block: rho and sigma differ in dimensions");
  }
  if (l < 0 || l > n) throw DomainError("symmetric_block: l must lie in [0, n]");
  if (n > 30) throw DomainError("symmetric_block: n too large for pattern enumeration");
  checked_power_side(static_cast<std::size_t>(rho.dim()), n, cap);
  return grouped_state(rho, n, copy_major_block(rho, sigma, n, l));
}

TruncatedMixture build_truncated_mixture(const MixtureSpec& spec, std::size_t cap) {
  check_spec(spec);
  checked_power_side(static_cast<std::size_t>(spec.rho.dim()), spec.n, cap);
  if (spec.n > 30) throw DomainError("build_truncated_mixture: n too large for pattern enumeration");

  const LogFactorials lf(spec.n);
  std::vector<double> logs;
  for (int l = spec.window.lo; l <= spec.window.hi; ++l) {
    logs.push_back(log_pmf(lf, spec.n, l, spec.p));
  }
  const double log_kept = log_sum_exp(logs);
  if (log_kept == kNegInf) throw DomainError("mixture window carries no probability (t = 1)");

  // Regrouping is a fixed permutation, so blocks are summed copy-major and validated once.
  CMatrix pi;
  for (int l = spec.window.lo; l <= spec.window.hi; ++l) {
    const double weight = std::exp(logs[l - spec.window.lo] - log_kept);
    if (weight == 0.0) continue;
    CMatrix block = copy_major_block(spec.rho, spec.sigma, spec.n, l);
    if (pi.size() == 0) {
      pi = weight * block;
    } else {
      pi += weight * block;
    }
  }
  return TruncatedMixture{grouped_state(spec.rho, spec.n, pi),
                          tail_mass_with(lf, spec.n, spec.p, spec.window), spec.window,
                          CopyCount{spec.n - spec.window.lo, spec.window.hi}};
}

MixingCheck verify_mixing_bound(const MixtureSpec& spec, std::size_t cap, double slack) {
  const TruncatedMixture tm = build_truncated_mixture(spec, cap);
  const DensityMatrix exact = tensor_power(mix(spec.rho, spec.sigma, spec.p), spec.n, cap);
  MixingCheck out;
  out.trace_distance = trace_distance(exact, tm.pi);
  out.tail_mass = tm.tail_mass;
  out.pass = out.trace_distance <= out.tail_mass + slack;
  return out;
}

std::vector<TailRow> tail_mass_scan(double p, std::span<const int> ns) {
  check_probability(p);
  int n_max = 1;
  for (int n : ns) {
    if (n < 1) throw DomainError("tail_mass_scan: n must be >= 1");
    n_max = std::max(n_max, n);
  }
  const LogFactorials lf(n_max);
  std::vector<TailRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    const double w = default_half_width(n);
    TailRow row;
    row.n = n;
    row.window = window_for(n, p, w);
    row.tail_mass = tail_mass_with(lf, n, p, row.window);
    row.hoeffding = hoeffding_bound(n, w);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace asymcont
