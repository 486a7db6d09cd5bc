#pragma once

// Finite-n asymptotic mixing: replace rho_p^{(x) n}, rho_p = (1-p) rho + p sigma,
// by a binomially weighted mixture of permutation-symmetrized products
// rho^{(x) n-l} (x) sigma^{(x) l}, keeping only l inside a window around np.
// The discarded binomial tail t bounds the trace distance to the exact power.

#include <optional>
#include <span>
#include <vector>

#include "asymcont/linalg.hpp"

namespace asymcont {

struct Window {
  int lo = 0;
  int hi = 0;  // inclusive
};

struct BinomialWindow {
  Window window;
  double tail_mass = 0.0;  // Binomial(n, p) mass outside the window
};

/// Default half-width n^{2/3}.
double default_half_width(int n);

/// 2 exp(-2 w^2 / n): Hoeffding bound on P(|X - np| > w) for X ~ Binomial(n, p).
double hoeffding_bound(int n, double half_width);

/// log Binomial(n, p)(l); -inf for impossible outcomes.
double log_binomial_pmf(int n, int l, double p);

/// Binomial(n, p) mass outside `window`, summed term by term in log space.
double binomial_tail_mass(int n, double p, Window window);

/// [max(0, ceil(np - w)), min(n, floor(np + w))] and its tail mass.
BinomialWindow binomial_window(int n, double p, std::optional<double> half_width = {});

struct MixtureSpec {
  DensityMatrix rho;
  DensityMatrix sigma;
  double p;
  int n;
  Window window;
};

/// Spec whose window comes from binomial_window(n, p, half_width).
MixtureSpec make_mixture_spec(DensityMatrix rho, DensityMatrix sigma, double p, int n,
                              std::optional<double> half_width = {});

/// Throws DomainError / DimensionMismatch when the spec is malformed.
void check_spec(const MixtureSpec& spec);

/// Copies of each input consumed by a construction.
struct CopyCount {
  int rho = 0;
  int sigma = 0;
};

struct TruncatedMixture {
  DensityMatrix pi;
  double tail_mass;
  Window window;
  CopyCount copies;  // at most (n - lo) copies of rho and hi copies of sigma
};

/// Equal-weight average over all C(n, l) placements of l sigma factors among n.
DensityMatrix symmetric_block(const DensityMatrix& rho, const DensityMatrix& sigma, int n,
                              int l, std::size_t cap = kDefaultSizeCap);

TruncatedMixture build_truncated_mixture(const MixtureSpec& spec,
                                         std::size_t cap = kDefaultSizeCap);

struct MixingCheck {
  double trace_distance = 0.0;  // T(rho_p^{(x) n}, Pi)
  double tail_mass = 0.0;
  bool pass = false;  // trace_distance <= tail_mass + slack
};

MixingCheck verify_mixing_bound(const MixtureSpec& spec, std::size_t cap = kDefaultSizeCap,
                                double slack = 1e-9);

struct TailRow {
  int n = 0;
  Window window;
  double tail_mass = 0.0;
  double hoeffding = 0.0;
};

/// Scalar-only tail masses with the default window.
std::vector<TailRow> tail_mass_scan(double p, std::span<const int> ns);

}  // namespace asymcont
