#include "asymcont/continuity.hpp"

#include <algorithm>
#include <cmath>

#include "asymcont/random.hpp"

namespace asymcont {

namespace {

constexpr int kMaxRetries = 64;

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon must lie in (0, 1]");
}

}  // namespace

Surrogates Surrogates::defaults() {
  return {[](const DensityMatrix& rho) { return asymcont::ed_lower(rho); },
          [](const DensityMatrix& rho) { return asymcont::ec_upper(rho); }};
}

DensityMatrix point_at_distance(const DensityMatrix& center, const DensityMatrix& direction,
                                double distance) {
  const double full = trace_distance(center, direction);
  if (distance == 0.0) return center;
  if (full <= 1e-12) throw DomainError("direction coincides with the center");
  const double t = distance / full;
  if (t > 1.0) throw DomainError("direction too close to the center to reach the distance");
  return mix(center, direction, t);
}

std::vector<BallPoint> sample_ball(const BallSpec& spec) {
  check_epsilon(spec.epsilon);
  if (spec.sample_count < 1) throw DomainError("sample_count must be >= 1");
  if (spec.surface_count < 0) throw DomainError("surface_count must be >= 0");

  const int total = spec.sample_count + spec.surface_count;
  std::vector<BallPoint> points;
  points.reserve(total);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (int i = 0; i < total; ++i) {
    const bool surface = i >= spec.sample_count;
    Rng rng = make_rng(spec.seed, static_cast<std::uint64_t>(i));
    bool done = false;
    for (int attempt = 0; attempt < kMaxRetries && !done; ++attempt) {
      const double u = surface ? 1.0 : 1.0 - uniform(rng);  // (0, 1]
      const DensityMatrix direction = random_density(spec.center.dim_a(), spec.center.dim_b(), rng);
      const double full = trace_distance(spec.center, direction);
      const double target = u * spec.epsilon;
      if (full <= 1e-12 || target > full) continue;
      DensityMatrix state = mix(spec.center, direction, target / full);
      const double d = trace_distance(spec.center, state);
      points.push_back({std::move(state), d, surface});
      done = true;
    }
    if (!done) {
      throw DomainError("sample_ball: no admissible direction after " +
                        std::to_string(kMaxRetries) + " draws for sample " + std::to_string(i));
    }
  }
  return points;
}

BallConstants ball_constants(const DensityMatrix& center, double epsilon,
                             std::span<const BallPoint> points, const Surrogates& surrogates,
                             bool conservative) {
  check_epsilon(epsilon);
  const MeasureValue ed_c = surrogates.ed_lower(center);
  const MeasureValue ec_c = surrogates.ec_upper(center);
  if (ed_c.value <= 0.0) {
    throw BallNotCertified(-1, "ball center is not certified distillable (ed_lower = 0)");
  }

  BallConstants out;
  out.ed_min_lower = ed_c.value;
  out.ec_max_upper = ec_c.value;
  out.evaluated = 1;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double ed = surrogates.ed_lower(points[i].state).value;
    if (ed <= 0.0) {
      throw BallNotCertified(static_cast<long>(i),
                             "sample " + std::to_string(i) +
                                 " has ed_lower = 0: the ball leaves the certified-distillable "
                                 "region, shrink epsilon");
    }
    const double ec = surrogates.ec_upper(points[i].state).value;
    out.ed_min_lower = std::min(out.ed_min_lower, ed);
    out.ec_max_upper = std::max(out.ec_max_upper, ec);
    if (points[i].distance > 0.0) {
      out.ed_lipschitz = std::max(out.ed_lipschitz, std::abs(ed - ed_c.value) / points[i].distance);
      out.ec_lipschitz = std::max(out.ec_lipschitz, std::abs(ec - ec_c.value) / points[i].distance);
    }
    ++out.evaluated;
  }

  if (conservative) {
    out.conservative = true;
    out.ed_min_lower = std::min(out.ed_min_lower, ed_c.value - out.ed_lipschitz * epsilon);
    out.ec_max_upper = std::max(out.ec_max_upper, ec_c.value + out.ec_lipschitz * epsilon);
    if (out.ed_min_lower <= 0.0) {
      throw BallNotCertified(-1, "conservative widening drives ed_lower to 0; shrink epsilon");
    }
  }

  if (out.ed_min_lower > out.ec_max_upper) {
    throw Error("surrogate corridor inverted: min ed_lower exceeds max ec_upper");
  }
  out.r = out.ed_min_lower / out.ec_max_upper;
  if (out.r >= 1.0) {
    out.r = 1.0;
    out.delta = 0.0;
    out.reversible = true;
  } else {
    out.delta = out.ec_max_upper * (1.0 - out.r) / out.r;
  }
  out.provenance = std::string(conservative ? "sampled+lipschitz" : "sampled") + ": " +
                   ed_c.method + " / " + ec_c.method;
  return out;
}

BallConstants ball_constants(const BallSpec& spec, const Surrogates& surrogates,
                             bool conservative) {
  const std::vector<BallPoint> points = sample_ball(spec);
  return ball_constants(spec.center, spec.epsilon, points, surrogates, conservative);
}

double kappa(double p, double r) {
  if (!(r > 0.0 && r <= 1.0)) throw DomainError("kappa: r must lie in (0, 1]");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("kappa: p must lie in [0, 1]");
  if (r == 1.0 || p == 0.0) return 0.0;
  if (p == 1.0) return 1.0 - r;
  // p / (p + r/(1-r)) rearranged to avoid dividing by 1 - r.
  return p * (1.0 - r) / (p * (1.0 - r) + r);
}

double lipschitz_bound(const DensityMatrix& center, const DensityMatrix& other,
                       const BallConstants& constants, double epsilon) {
  check_epsilon(epsilon);
  const double t = trace_distance(center, other);
  if (t > epsilon + 1e-9) {
    throw OutsideBall("state lies outside the ball (T = " + std::to_string(t) + ")");
  }
  return constants.delta / epsilon * t;
}

CorridorReport corridor_consistency_check(const DensityMatrix& center,
                                          const DensityMatrix& sigma_surface,
                                          const BallConstants& constants,
                                          std::span<const double> p_grid,
                                          const Surrogates& surrogates, double slack) {
  const double epsilon = trace_distance(center, sigma_surface);
  const double ed_c = surrogates.ed_lower(center).value;
  const double ec_c = surrogates.ec_upper(center).value;

  CorridorReport report;
  for (double p : p_grid) {
    CorridorRow row;
    row.p = p;
    row.kappa = kappa(p, constants.r);
    const DensityMatrix rho_p = mix(center, sigma_surface, p);
    row.distance = trace_distance(center, rho_p);
    row.ed_center = ed_c;
    row.ec_center = ec_c;
    row.ed_rho_p = surrogates.ed_lower(rho_p).value;
    row.ec_rho_p = surrogates.ec_upper(rho_p).value;

    const double keep = 1.0 - row.kappa;
    row.forth_margin = row.ec_rho_p + slack - keep * row.ed_center;
    row.back_margin = row.ec_center + slack - keep * row.ed_rho_p;
    row.pass = row.forth_margin >= 0.0 && row.back_margin >= 0.0;

    if (epsilon > 0.0) {
      row.lipschitz_bound = constants.delta / epsilon * row.distance;
      // Any measure E lies in [ed, ec] at both states, so the smallest possible
      // |E(rho) - E(rho_p)| must not exceed the bound.
      const double forced_gap =
          std::max({0.0, row.ed_rho_p - row.ec_center, row.ed_center - row.ec_rho_p});
      row.lipschitz_consistent = forced_gap <= row.lipschitz_bound + slack;
    }

    try {
      (void)mix(center, sigma_surface, p - 1.0);
    } catch (const InvalidState&) {
      row.back_state_exists = false;
      ++report.back_skipped;
    }

    if (!row.pass) ++report.violations;
    report.rows.push_back(row);
  }
  report.pass = report.violations == 0;
  return report;
}

std::vector<BorderRow2x2> border_scan_2x2(const StateFamily& family,
                                          std::span<const double> grid) {
  std::vector<BorderRow2x2> rows;
  rows.reserve(grid.size());
  for (double x : grid) {
    const DensityMatrix rho = family(x);
    if (rho.dim_a() != 2 || rho.dim_b() != 2) {
      throw DimensionMismatch("border_scan_2x2: family produced a non-2x2 state");
    }
    BorderRow2x2 row;
    row.param = x;
    row.concurrence = concurrence_2x2(rho);
    row.eof = eof_from_concurrence(row.concurrence);
    row.log_neg = log_negativity(rho).value;
    row.ppt_margin = is_ppt(rho).margin;
    rows.push_back(row);
  }
  return rows;
}

std::vector<BorderRow2xN> border_scan_2xN(const StateFamily& family,
                                          std::span<const double> grid,
                                          std::optional<EofSearchOptions> eof) {
  std::vector<BorderRow2xN> rows;
  rows.reserve(grid.size());
  for (double x : grid) {
    const DensityMatrix rho = family(x);
    if (rho.dim_a() != 2) throw DimensionMismatch("border_scan_2xN: party A must be a qubit");
    BorderRow2xN row;
    row.param = x;
    row.log_neg = log_negativity(rho).value;
    row.ppt_margin = is_ppt(rho).margin;
    if (eof) row.eof_upper = eof_upper_general(rho, *eof).value;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace asymcont
