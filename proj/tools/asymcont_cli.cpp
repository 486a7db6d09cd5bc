// asymcont: command-line experiments on entanglement measures, asymptotic
// mixing and continuity corridors.
//
// Exit codes: 0 pass, 1 check failed, 2 input/usage error, 3 size cap exceeded,
// 4 ball not certified distillable.

#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "asymcont/continuity.hpp"
#include "asymcont/io.hpp"
#include "asymcont/measures.hpp"
#include "asymcont/mixing.hpp"
#include "asymcont/protocols.hpp"
#include "asymcont/random.hpp"
#include "asymcont/states.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace asymcont;

namespace {

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kInput = 2, kCap = 3, kCertification = 4 };

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t cap = kDefaultSizeCap;
  double tolerance = 1e-9;
  std::string format = "json";
  std::string out;
  std::string invocation;
};

std::vector<std::string> audit_lines(const RunConfig& cfg) {
  return {"invocation: " + cfg.invocation, "seed: " + std::to_string(cfg.seed)};
}

json with_audit(json doc, const RunConfig& cfg) {
  doc["invocation"] = cfg.invocation;
  doc["seed"] = cfg.seed;
  return doc;
}

void emit(const std::string& text, const RunConfig& cfg) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_file_atomic(cfg.out, text);
  }
}

/// A flat record rendered as JSON or as a one-row CSV.
void emit_record(const json& record, const RunConfig& cfg) {
  if (cfg.format == "csv") {
    std::ostringstream out;
    for (const auto& line : audit_lines(cfg)) out << "# " << line << '\n';
    std::string header, row;
    for (auto it = record.begin(); it != record.end(); ++it) {
      header += (header.empty() ? "" : ",") + it.key();
      std::string cell = it->is_string() ? it->get<std::string>() : it->dump();
      row += (row.empty() && it == record.begin() ? "" : ",") + cell;
    }
    out << header << '\n' << row << '\n';
    emit(out.str(), cfg);
  } else {
    emit(with_audit(record, cfg).dump(2) + "\n", cfg);
  }
}

void emit_table(const Table& table, const RunConfig& cfg,
                const std::vector<std::string>& extra_comments = {}, json extra = json::object()) {
  if (cfg.format == "json") {
    json doc = std::move(extra);
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    emit(with_audit(std::move(doc), cfg).dump(2) + "\n", cfg);
  } else {
    std::vector<std::string> comments = audit_lines(cfg);
    comments.insert(comments.end(), extra_comments.begin(), extra_comments.end());
    emit(to_csv(table, comments), cfg);
  }
}

std::vector<double> linspace(double lo, double hi, int points) {
  std::vector<double> out;
  if (points == 1) return {lo};
  for (int i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * i / (points - 1));
  return out;
}

std::vector<double> logspace(double lo, double hi, int points) {
  std::vector<double> out;
  for (double e : linspace(std::log10(lo), std::log10(hi), points)) out.push_back(std::pow(10.0, e));
  return out;
}

// ---------------------------------------------------------------- measure

struct MeasureArgs {
  std::string state_file;
  std::string name;
  bool force = false;
  int k = 0;
  int budget = 200;
};

int run_measure(const MeasureArgs& a, const RunConfig& cfg) {
  const DensityMatrix rho = read_state_file(a.state_file, a.force);
  json record;
  if (a.force) {
    const Diagnostics d = validate(rho.dim_a(), rho.dim_b(), rho.matrix());
    record["diagnostics"] = {{"pass", d.pass},
                             {"hermiticity_defect", d.hermiticity_defect},
                             {"trace_defect", d.trace_defect},
                             {"min_eigenvalue", d.min_eigenvalue}};
  }
  const EofSearchOptions eof{a.k, a.budget, cfg.seed};
  MeasureValue v;
  if (a.name == "log_negativity") {
    v = log_negativity(rho);
  } else if (a.name == "eof_2x2") {
    v = eof_2x2(rho);
  } else if (a.name == "concurrence") {
    v = {concurrence_2x2(rho), BoundKind::exact, "concurrence_2x2"};
  } else if (a.name == "eof_upper") {
    v = eof_upper_general(rho, eof);
  } else if (a.name == "ed_lower") {
    v = ed_lower(rho);
  } else if (a.name == "ec_upper") {
    v = ec_upper(rho, eof);
  } else if (a.name == "hashing") {
    v = hashing_yield(twirl_to_bell_diagonal(rho));
  } else if (a.name == "is_ppt") {
    const PptResult r = is_ppt(rho);
    record["ppt"] = r.ppt;
    v = {r.margin, BoundKind::exact, "is_ppt_margin"};
  } else {
    throw CLI::ValidationError("measure", "unknown measure '" + a.name + "'");
  }
  const json measured = to_json(v);
  for (auto it = measured.begin(); it != measured.end(); ++it) record[it.key()] = *it;
  emit_record(record, cfg);
  return kPass;
}

// ---------------------------------------------------------- mixing-verify

struct MixingArgs {
  std::string rho_file;
  std::string sigma_file;
  double p = 0.5;
  int n = 2;
  std::optional<double> half_width;
};

int run_mixing_verify(const MixingArgs& a, const RunConfig& cfg) {
  DensityMatrix rho = read_state_file(a.rho_file);
  DensityMatrix sigma = read_state_file(a.sigma_file);
  checked_power_side(static_cast<std::size_t>(rho.dim()), a.n, cfg.cap);
  const MixtureSpec spec = make_mixture_spec(std::move(rho), std::move(sigma), a.p, a.n, a.half_width);
  const MixingCheck check = verify_mixing_bound(spec, cfg.cap, cfg.tolerance);
  json record = {{"n", a.n},
                 {"p", a.p},
                 {"window_lo", spec.window.lo},
                 {"window_hi", spec.window.hi},
                 {"rho_copies", a.n - spec.window.lo},
                 {"sigma_copies", spec.window.hi},
                 {"trace_distance", check.trace_distance},
                 {"tail_mass", check.tail_mass},
                 {"pass", check.pass}};
  emit_record(record, cfg);
  return check.pass ? kPass : kCheckFailed;
}

// -------------------------------------------------------------- ball-scan

struct BallArgs {
  std::string center_file;
  double epsilon = 1e-3;
  int samples = 200;
  int p_points = 20;
  int surface = 4;
  bool conservative = false;
};

int run_ball_scan(const BallArgs& a, const RunConfig& cfg) {
  if (cfg.out.empty()) throw CLI::ValidationError("--out", "ball-scan needs an output directory");
  const DensityMatrix center = read_state_file(a.center_file);
  const BallSpec spec{center, a.epsilon, a.samples, cfg.seed, a.surface};
  const std::vector<BallPoint> points = sample_ball(spec);

  BallConstants constants;
  try {
    constants = ball_constants(center, a.epsilon, points, Surrogates::defaults(), a.conservative);
  } catch (const BallNotCertified& e) {
    std::cerr << "ball not certified: " << e.what() << "\noffending sample index: " << e.index()
              << '\n';
    return kCertification;
  }

  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  const std::vector<double> p_grid = linspace(0.0, 1.0, a.p_points);

  Table corridor{{"direction", "p", "kappa", "distance", "ed_center", "ec_center", "ed_rho_p",
                  "ec_rho_p", "forth_margin", "back_margin", "lipschitz_bound",
                  "lipschitz_consistent", "back_state_exists", "pass"},
                 {}};
  json directions = json::array();
  bool all_pass = true;
  int direction = 0;
  for (const BallPoint& pt : points) {
    if (!pt.on_surface) continue;
    const CorridorReport rep = corridor_consistency_check(center, pt.state, constants, p_grid,
                                                          Surrogates::defaults(), cfg.tolerance);
    for (const CorridorRow& r : rep.rows) {
      corridor.rows.push_back({static_cast<double>(direction), r.p, r.kappa, r.distance,
                               r.ed_center, r.ec_center, r.ed_rho_p, r.ec_rho_p, r.forth_margin,
                               r.back_margin, r.lipschitz_bound,
                               r.lipschitz_consistent ? 1.0 : 0.0, r.back_state_exists ? 1.0 : 0.0,
                               r.pass ? 1.0 : 0.0});
    }
    directions.push_back({{"direction", direction},
                          {"pass", rep.pass},
                          {"violations", rep.violations},
                          {"back_skipped", rep.back_skipped}});
    all_pass = all_pass && rep.pass;
    ++direction;
  }

  Table samples{{"index", "on_surface", "distance", "ed_lower", "ec_upper", "lipschitz_bound"}, {}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const BallPoint& pt = points[i];
    samples.rows.push_back({static_cast<double>(i), pt.on_surface ? 1.0 : 0.0, pt.distance,
                            ed_lower(pt.state).value, ec_upper(pt.state).value,
                            lipschitz_bound(center, pt.state, constants, a.epsilon)});
  }

  json report = {{"center_file", a.center_file},
                 {"epsilon", a.epsilon},
                 {"samples", a.samples},
                 {"surface_points", a.surface},
                 {"p_grid", p_grid},
                 {"tolerance", cfg.tolerance},
                 {"constants",
                  {{"ed_min_lower", constants.ed_min_lower},
                   {"ec_max_upper", constants.ec_max_upper},
                   {"r", constants.r},
                   {"delta", constants.delta},
                   {"reversible", constants.reversible},
                   {"conservative", constants.conservative},
                   {"ed_lipschitz", constants.ed_lipschitz},
                   {"ec_lipschitz", constants.ec_lipschitz},
                   {"evaluated", constants.evaluated},
                   {"provenance", constants.provenance}}},
                 {"surrogates",
                  {{"ed", to_json(ed_lower(center))}, {"ec", to_json(ec_upper(center))}}},
                 {"directions", directions},
                 {"pass", all_pass}};
  write_file_atomic(dir / "report.json", with_audit(report, cfg).dump(2) + "\n");
  write_file_atomic(dir / "corridor.csv", to_csv(corridor, audit_lines(cfg)));
  write_file_atomic(dir / "samples.csv", to_csv(samples, audit_lines(cfg)));
  std::cout << "ball-scan: r=" << format_double(constants.r)
            << " delta=" << format_double(constants.delta) << " pass=" << (all_pass ? "true" : "false")
            << '\n';
  return all_pass ? kPass : kCheckFailed;
}

// ------------------------------------------------------------ border-scan

struct BorderArgs {
  std::string system = "2x2";
  std::string family;
  int grid = 200;
  double from = 0.0;
  double to = 1.0;
  std::string from_state;
  std::string to_state;
  bool eof = false;
  int budget = 200;
};

int run_border_scan(const BorderArgs& a, const RunConfig& cfg) {
  const std::vector<double> grid = linspace(a.from, a.to, a.grid);
  StateFamily family;
  std::string family_name = a.family;
  if (family_name.empty()) family_name = a.system == "2x2" ? "werner" : "isotropic";
  if (family_name == "werner") {
    family = werner_state;
  } else if (family_name == "isotropic") {
    family = isotropic_2x3;
  } else if (family_name == "path") {
    if (a.from_state.empty() || a.to_state.empty()) {
      throw CLI::ValidationError("--family path", "needs --from-state and --to-state");
    }
    auto start = std::make_shared<DensityMatrix>(read_state_file(a.from_state));
    auto end = std::make_shared<DensityMatrix>(read_state_file(a.to_state));
    family = [start, end](double x) { return mix(*start, *end, x); };
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + family_name + "'");
  }

  std::vector<std::string> comments{"family: " + family_name};
  Table table;
  auto note_threshold = [&](const std::vector<std::pair<double, double>>& margins) {
    for (std::size_t i = 1; i < margins.size(); ++i) {
      if ((margins[i - 1].second >= -1e-9) != (margins[i].second >= -1e-9)) {
        comments.push_back("ppt_boundary_between: " + format_double(margins[i - 1].first) + "," +
                           format_double(margins[i].first));
      }
    }
  };
  std::vector<std::pair<double, double>> margins;
  if (a.system == "2x2") {
    table.columns = {"param", "eof", "log_neg", "ppt_margin", "concurrence"};
    for (const auto& r : border_scan_2x2(family, grid)) {
      table.rows.push_back({r.param, r.eof, r.log_neg, r.ppt_margin, r.concurrence});
      margins.emplace_back(r.param, r.ppt_margin);
    }
  } else {
    table.columns = {"param", "log_neg", "ppt_margin"};
    std::optional<EofSearchOptions> eof;
    if (a.eof) {
      eof = EofSearchOptions{0, a.budget, cfg.seed};
      table.columns.push_back("eof_upper");
    }
    for (const auto& r : border_scan_2xN(family, grid, eof)) {
      std::vector<double> row{r.param, r.log_neg, r.ppt_margin};
      if (r.eof_upper) row.push_back(*r.eof_upper);
      table.rows.push_back(std::move(row));
      margins.emplace_back(r.param, r.ppt_margin);
    }
  }
  note_threshold(margins);
  emit_table(table, cfg, comments, {{"family", family_name}});
  return kPass;
}

// ------------------------------------------------------ protocol commands

int run_concentration(const std::vector<double>& lambda, const std::vector<long>& ns,
                      const RunConfig& cfg) {
  const YieldCurve curve = concentration_curve(lambda, ns);
  Table table{{"n", "value", "asymptote"}, {}};
  for (const auto& pt : curve.points) {
    table.rows.push_back({static_cast<double>(pt.n), pt.yield_per_copy, curve.asymptote});
  }
  emit_table(table, cfg, {"protocol: " + curve.protocol}, {{"protocol", curve.protocol}});
  return kPass;
}

int run_eta_scan(const std::vector<double>& eps, const std::string& xi_file, const RunConfig& cfg) {
  const DensityMatrix xi = xi_file.empty() ? maximally_mixed(2, 2) : read_state_file(xi_file);
  const EtaScan scan = eta_continuity_scan(xi, eps);
  Table table{{"epsilon", "value", "bound"}, {}};
  for (const auto& r : scan.rows) table.rows.push_back({r.epsilon, r.yield, 1.0});
  emit_table(table, cfg,
             {"lipschitz_fit: " + format_double(scan.lipschitz),
              "max_adjacent_jump: " + format_double(scan.max_adjacent_jump)},
             {{"lipschitz_fit", scan.lipschitz}, {"max_adjacent_jump", scan.max_adjacent_jump}});
  return kPass;
}

int run_catalytic(double delta, double ec, double ed, const RunConfig& cfg) {
  const CatalyticRate c = catalytic_rate(delta, ec, ed);
  emit_record({{"delta", c.delta},
               {"ec_sigma", c.ec_sigma},
               {"ed_rho_p", c.ed_rho_p},
               {"p", c.p},
               {"k", c.k},
               {"factor", c.factor}},
              cfg);
  return kPass;
}

int run_tail_scan(double p, const std::vector<int>& ns, const RunConfig& cfg) {
  Table table{{"n", "window_lo", "window_hi", "tail_mass", "hoeffding_bound"}, {}};
  for (const auto& r : tail_mass_scan(p, ns)) {
    table.rows.push_back({static_cast<double>(r.n), static_cast<double>(r.window.lo),
                          static_cast<double>(r.window.hi), r.tail_mass, r.hoeffding});
  }
  emit_table(table, cfg, {"p: " + format_double(p)}, {{"p", p}});
  return kPass;
}

// ------------------------------------------------------------- make-state

int run_make_state(const std::string& family, double param, const RunConfig& cfg) {
  if (cfg.out.empty()) throw CLI::ValidationError("--out", "make-state needs an output file");
  std::optional<DensityMatrix> rho;
  if (family == "werner") {
    rho = werner_state(param);
  } else if (family == "isotropic") {
    rho = isotropic_2x3(param);
  } else if (family == "phi-plus") {
    rho = phi_plus().projector();
  } else if (family == "schmidt") {
    rho = two_qubit_schmidt_state(param).projector();
  } else if (family == "maximally-mixed") {
    rho = maximally_mixed(2, 2);
  } else if (family == "product") {
    Rng rng = make_rng(cfg.seed);
    rho = random_product_pure(2, 2, rng).projector();
  } else if (family == "random") {
    Rng rng = make_rng(cfg.seed);
    rho = random_density(2, 2, rng);
  } else {
    throw CLI::ValidationError("--family", "unknown family '" + family + "'");
  }
  write_state_file(cfg.out, *rho);
  return kPass;
}

std::string join_argv(int argc, char** argv) {
  std::string s = "asymcont";
  for (int i = 1; i < argc; ++i) s += std::string(" ") + argv[i];
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entanglement-measure continuity experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  cfg.invocation = join_argv(argc, argv);
  app.add_option("--seed", cfg.seed, "Seed for every sampled quantity")->capture_default_str();
  app.add_option("--cap", cfg.cap, "Maximum matrix side length")->capture_default_str();
  app.add_option("--tolerance", cfg.tolerance, "Slack for inequality checks")->capture_default_str();
  app.add_option("--out", cfg.out, "Output file (directory for ball-scan)");
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  MeasureArgs measure;
  auto* measure_cmd = app.add_subcommand("measure", "Evaluate one measure on a state file");
  measure_cmd->add_option("state_file", measure.state_file)->required();
  measure_cmd->add_option("measure", measure.name,
                          "log_negativity | eof_2x2 | concurrence | eof_upper | ed_lower | "
                          "ec_upper | hashing | is_ppt")
      ->required();
  measure_cmd->add_flag("--force", measure.force, "Load files that fail validation");
  measure_cmd->add_option("--k", measure.k, "Decomposition size for eof_upper (0: d^2)");
  measure_cmd->add_option("--budget", measure.budget, "Optimizer sweeps for eof_upper");

  MixingArgs mixing;
  auto* mixing_cmd = app.add_subcommand("mixing-verify", "Check T(rho_p^n, Pi) <= t_N");
  mixing_cmd->add_option("--rho", mixing.rho_file)->required();
  mixing_cmd->add_option("--sigma", mixing.sigma_file)->required();
  mixing_cmd->add_option("--p", mixing.p)->required()->check(CLI::Range(0.0, 1.0));
  mixing_cmd->add_option("--n", mixing.n)->required()->check(CLI::PositiveNumber);
  mixing_cmd->add_option("--half-width", mixing.half_width, "Window half-width (default n^(2/3))");

  BallArgs ball;
  auto* ball_cmd = app.add_subcommand("ball-scan", "Sample a ball and run the corridor checks");
  ball_cmd->add_option("--center", ball.center_file)->required();
  ball_cmd->add_option("--epsilon", ball.epsilon)->capture_default_str();
  ball_cmd->add_option("--samples", ball.samples)->check(CLI::PositiveNumber)->capture_default_str();
  ball_cmd->add_option("--p-points", ball.p_points)->check(CLI::PositiveNumber)->capture_default_str();
  ball_cmd->add_option("--surface", ball.surface)->check(CLI::PositiveNumber)->capture_default_str();
  ball_cmd->add_flag("--conservative", ball.conservative, "Widen extrema by fitted Lipschitz constants");

  BorderArgs border;
  auto* border_cmd = app.add_subcommand("border-scan", "Scan a state path across the PPT border");
  border_cmd->add_option("--system", border.system)->check(CLI::IsMember({"2x2", "2x3"}));
  border_cmd->add_option("--family", border.family, "werner | isotropic | path");
  border_cmd->add_option("--grid", border.grid)->check(CLI::PositiveNumber)->capture_default_str();
  border_cmd->add_option("--from", border.from)->capture_default_str();
  border_cmd->add_option("--to", border.to)->capture_default_str();
  border_cmd->add_option("--from-state", border.from_state);
  border_cmd->add_option("--to-state", border.to_state);
  border_cmd->add_flag("--eof", border.eof, "Append eof_upper_general (2x3 only)");
  border_cmd->add_option("--budget", border.budget);

  std::vector<double> lambda;
  std::vector<long> conc_ns;
  auto* conc_cmd = app.add_subcommand("concentration", "Pure-state concentration yields");
  conc_cmd->add_option("--lambda", lambda, "Schmidt squares")->required()->delimiter(',');
  conc_cmd->add_option("--n", conc_ns, "Copy counts")->required()->delimiter(',');

  std::vector<double> eps;
  double eps_min = 1e-4, eps_max = 1e-1;
  int eps_points = 20;
  std::string xi_file;
  auto* eta_cmd = app.add_subcommand("eta-scan", "Certified yield near Phi+");
  eta_cmd->add_option("--eps", eps, "Explicit epsilon grid")->delimiter(',');
  eta_cmd->add_option("--eps-min", eps_min)->capture_default_str();
  eta_cmd->add_option("--eps-max", eps_max)->capture_default_str();
  eta_cmd->add_option("--points", eps_points)->check(CLI::PositiveNumber)->capture_default_str();
  eta_cmd->add_option("--xi", xi_file, "Noise state file (default I/4)");

  double cat_delta = 0.0, cat_ec = 0.0, cat_ed = 0.0;
  auto* cat_cmd = app.add_subcommand("catalytic", "Catalytic rate factor");
  cat_cmd->add_option("--delta", cat_delta)->required();
  cat_cmd->add_option("--ec", cat_ec, "E_c(sigma)")->required();
  cat_cmd->add_option("--ed", cat_ed, "E_d(rho_p)")->required();

  double tail_p = 0.5;
  std::vector<int> tail_ns;
  int tail_n_max = 0;
  auto* tail_cmd = app.add_subcommand("tail-scan", "Binomial tail masses t_N");
  tail_cmd->add_option("--p", tail_p)->required()->check(CLI::Range(0.0, 1.0));
  tail_cmd->add_option("--n", tail_ns, "Explicit n values")->delimiter(',');
  tail_cmd->add_option("--n-max", tail_n_max, "Scan every n in [1, n-max]");

  std::string make_family;
  double make_param = 0.0;
  auto* make_cmd = app.add_subcommand("make-state", "Write a built-in state to --out");
  make_cmd->add_option("--family", make_family,
                       "werner | isotropic | phi-plus | schmidt | maximally-mixed | product | random")
      ->required();
  make_cmd->add_option("--param", make_param);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInput;
  }

  try {
    if (*measure_cmd) return run_measure(measure, cfg);
    if (*mixing_cmd) return run_mixing_verify(mixing, cfg);
    if (*ball_cmd) return run_ball_scan(ball, cfg);
    if (*border_cmd) return run_border_scan(border, cfg);
    if (*conc_cmd) return run_concentration(lambda, conc_ns, cfg);
    if (*eta_cmd) {
      if (eps.empty()) eps = logspace(eps_min, eps_max, eps_points);
      return run_eta_scan(eps, xi_file, cfg);
    }
    if (*cat_cmd) return run_catalytic(cat_delta, cat_ec, cat_ed, cfg);
    if (*tail_cmd) {
      if (tail_ns.empty()) {
        if (tail_n_max < 1) throw CLI::ValidationError("tail-scan", "give --n or --n-max");
        for (int n = 1; n <= tail_n_max; ++n) tail_ns.push_back(n);
      }
      return run_tail_scan(tail_p, tail_ns, cfg);
    }
    if (*make_cmd) return run_make_state(make_family, make_param, cfg);
  } catch (const SizeLimitError& e) {
    std::cerr << "size cap: " << e.what() << '\n';
    return kCap;
  } catch (const BallNotCertified& e) {
    std::cerr << "ball not certified: " << e.what() << "\noffending sample index: " << e.index()
              << '\n';
    return kCertification;
  } catch (const InvalidState& e) {
    std::cerr << "invalid state: " << e.what() << '\n';
    return kInput;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
