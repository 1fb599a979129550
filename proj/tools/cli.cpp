#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "golden_table.hpp"
#include "qcdist/analysis.hpp"
#include "qcdist/errors.hpp"
#include "qcdist/schwarz.hpp"
#include "qcdist/special_fn.hpp"

namespace qcdist::cli {

namespace {

// Raised while turning parsed flags into configuration; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct EstimatorFlags {
  std::uint64_t seed = EstimatorConfig{}.seed;
  std::size_t samples = EstimatorConfig{}.samples;
  unsigned workers = 1;
  std::string sampling = "polar";
  double t_max = EstimatorConfig{}.t_hi;

  void attach(CLI::App& app) {
    app.add_option("--seed", seed, "RNG seed")->capture_default_str();
    app.add_option("--samples", samples, "Number of sampled pairs")
        ->capture_default_str();
    app.add_option("--workers", workers, "Worker threads (output does not depend on it)")
        ->capture_default_str();
    app.add_option("--sampling", sampling, "Disk sampling: polar or area")
        ->check(CLI::IsMember({"polar", "area"}))
        ->capture_default_str();
    app.add_option("--t-max", t_max, "Upper end of the t search bracket")
        ->capture_default_str();
  }

  EstimatorConfig config() const {
    EstimatorConfig cfg;
    cfg.seed = seed;
    cfg.samples = samples;
    cfg.workers = workers;
    cfg.t_hi = t_max;
    cfg.sampling =
        sampling == "area" ? DiskSampling::kAreaUniform : DiskSampling::kPolarRadius;
    try {
      cfg.validate();
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
    return cfg;
  }
};

struct DimensionFlags {
  int n = 2;
  std::string lambda;

  void attach(CLI::App& app) {
    app.add_option("--n", n, "Space dimension")->check(CLI::Range(2, 64))->capture_default_str();
    app.add_option("--lambda", lambda,
                   "Grötzsch constant lambda_n: a value in [4, 2e^{n-1}) or 'envelope'; "
                   "required for n >= 3");
  }

  GrotzschPolicy policy() const {
    GrotzschPolicy p = GrotzschPolicy::exact_planar();
    if (lambda == "envelope") {
      p = GrotzschPolicy::upper_envelope();
    } else if (!lambda.empty()) {
      double v = 0;
      const auto res = std::from_chars(lambda.data(), lambda.data() + lambda.size(), v);
      if (res.ec != std::errc() || res.ptr != lambda.data() + lambda.size()) {
        throw UsageError("--lambda: expected a number or 'envelope', got '" + lambda + "'");
      }
      p = GrotzschPolicy::supplied(v);
    } else if (n != 2) {
      throw UsageError("--lambda is required for n >= 3 (lambda_n is only known to lie in "
                       "[4, 2e^{n-1}))");
    }
    try {
      p.resolve(n);
    } catch (const PolicyError& e) {
      throw UsageError(e.what());
    }
    return p;
  }
};

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error("failed writing '" + path + "'");
}

BoundFamily family_or_usage(const std::string& token) {
  const auto f = parse_bound_family(token);
  if (!f) throw UsageError("unknown bound family '" + token + "'");
  return *f;
}

struct SelftestCheck {
  std::string label;
  double computed;
  double expected;
  double tolerance;
};

int run_selftest(std::ostream& out) {
  const GrotzschPolicy planar = GrotzschPolicy::exact_planar();
  std::vector<SelftestCheck> checks;
  for (const GoldenRow& row : kGoldenTable) {
    const std::string k = format_fixed(row.k, 1);
    checks.push_back({"table K=" + k + " conjecture",
                      std::log(mori_conjecture_bound(row.k)), row.conjecture,
                      kGoldenTolerance});
    checks.push_back({"table K=" + k + " AV", std::log(av_bound(2, row.k, planar)),
                      row.av, kGoldenTolerance});
    checks.push_back({"table K=" + k + " FV", log_fv_bound(row.k), row.fv,
                      kGoldenFvTolerance});
    checks.push_back({"table K=" + k + " BV(h(t1))",
                      std::log(h_at_t1(2, row.k, planar)), row.bv, kGoldenTolerance});
  }
  checks.push_back({"crossover AV/BV",
                    find_crossover({BoundFamily::kAV, BoundFamily::kBVClosed, {1.2, 1.4}}),
                    kCrossoverAvBv, kCrossoverTolerance});
  checks.push_back({"crossover FV/BV",
                    find_crossover({BoundFamily::kFV, BoundFamily::kBVClosed, {1.4, 1.8}}),
                    kCrossoverFvBv, kCrossoverTolerance});

  std::size_t failed = 0;
  for (const SelftestCheck& c : checks) {
    const double delta = std::abs(c.computed - c.expected);
    const bool ok = delta <= c.tolerance;
    if (!ok) ++failed;
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << c.label << ": " << format_fixed(c.computed, 6)
         << " vs " << format_fixed(c.expected, 4) << " |delta| = " << shortest(delta)
         << " tol " << shortest(c.tolerance);
    out << line.str() << '\n';
  }
  out << (checks.size() - failed) << '/' << checks.size() << " checks passed\n";
  return failed == 0 ? kSuccess : kFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Distortion bounds for planar quasiconformal maps", "qcdist"};
  app.require_subcommand(1);
  app.fallthrough(false);

  // table
  TableSpec table_spec;
  std::string columns = "conj,av,fv,bv";
  std::string format = "md";
  bool linear = false;
  std::string table_out;
  EstimatorFlags table_est;
  DimensionFlags table_dim;
  CLI::App* table = app.add_subcommand("table", "Tabulate bounds on a K grid");
  table->add_option("--k-min", table_spec.k_min)->capture_default_str();
  table->add_option("--k-max", table_spec.k_max)->capture_default_str();
  table->add_option("--step", table_spec.k_step)->capture_default_str();
  table->add_option("--columns", columns, "Comma list of conj,av,fv,bv,bvinf,uph,hq")
      ->capture_default_str();
  table->add_option("--format", format)
      ->check(CLI::IsMember({"md", "markdown", "csv"}))
      ->capture_default_str();
  table->add_option("--decimals", table_spec.decimals)->capture_default_str();
  table->add_flag("--linear", linear, "Print bounds instead of their logarithms");
  table->add_option("--out", table_out, "Write to this file instead of stdout");
  table_dim.attach(*table);
  table_est.attach(*table);

  // crossover
  std::string left, right;
  double lo = 0, hi = 0;
  int cross_decimals = 6;
  DimensionFlags cross_dim;
  CLI::App* crossover =
      app.add_subcommand("crossover", "Dilatation where two bounds coincide");
  crossover->add_option("--left", left, "Bound family")->required();
  crossover->add_option("--right", right, "Bound family")->required();
  crossover->add_option("--lo", lo, "Lower bracket end")->required();
  crossover->add_option("--hi", hi, "Upper bracket end")->required();
  crossover->add_option("--decimals", cross_decimals)
      ->check(CLI::Range(1, 15))
      ->capture_default_str();
  cross_dim.attach(*crossover);

  // hq
  std::vector<double> hq_k;
  std::string hq_out;
  EstimatorFlags hq_est;
  CLI::App* hq = app.add_subcommand("hq", "Sampled Hölder quotient bound HQ(K)");
  hq->add_option("--k", hq_k, "Dilatation(s) K >= 1")->required();
  hq->add_option("--out", hq_out, "Write to this file instead of stdout");
  hq_est.attach(*hq);

  // phi
  double phi_kval = 1, phi_r = 0;
  CLI::App* phi = app.add_subcommand("phi", "Hersch-Pfluger distortion phi_K(r)");
  phi->add_option("--k", phi_kval, "K > 0")->required();
  phi->add_option("--r", phi_r, "r in [0, 1]")->required();

  // cofk
  double cofk_k = 1;
  CLI::App* cofk = app.add_subcommand("cofk", "Schwarz constant c(K) and its bounds");
  cofk->add_option("--k", cofk_k, "K >= 1")->required();

  // figure
  std::string fig_name, fig_out;
  std::optional<double> fig_kmin, fig_kmax, fig_step;
  EstimatorFlags fig_est;
  CLI::App* figure = app.add_subcommand("figure", "Write figure data series as CSV");
  figure->add_option("name", fig_name, "fig2, fig3 or fig4")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
  figure->add_option("--out", fig_out, "Output CSV path")->required();
  figure->add_option("--k-min", fig_kmin);
  figure->add_option("--k-max", fig_kmax);
  figure->add_option("--step", fig_step);
  fig_est.attach(*figure);

  CLI::App* selftest =
      app.add_subcommand("selftest", "Compare against the published bound table");

  if (!args.empty() && !args.front().empty() && args.front().front() != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "qcdist: unknown subcommand '" << args.front() << "'\n\n" << app.help();
    return kUsage;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qcdist: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (table->parsed()) {
      try {
        table_spec.columns = parse_columns(columns);
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      table_spec.format = format == "csv" ? TableFormat::kCsv : TableFormat::kMarkdown;
      table_spec.log_scale = !linear;
      table_spec.n = table_dim.n;
      table_spec.lambda = table_dim.policy();
      if (std::count(table_spec.columns.begin(), table_spec.columns.end(), Column::hq())) {
        table_spec.estimator = table_est.config();
      }
      try {
        table_spec.validate();
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      write_output(make_table(table_spec), table_out, out);
    } else if (crossover->parsed()) {
      CrossoverQuery q{family_or_usage(left), family_or_usage(right), {lo, hi},
                       cross_dim.n, cross_dim.policy()};
      out << format_fixed(find_crossover(q), cross_decimals) << '\n';
    } else if (hq->parsed()) {
      const EstimatorConfig cfg = hq_est.config();
      for (double k : hq_k) {
        if (!(k >= 1) || !std::isfinite(k)) throw UsageError("--k values must be >= 1");
      }
      std::ostringstream os;
      os << "K,hq,log_hq,index,x1,x2,y1,y2,t\n";
      for (double k : hq_k) {
        const HqEstimate e = hq_estimate(k, cfg);
        os << shortest(k) << ',' << shortest(e.value) << ',' << shortest(std::log(e.value))
           << ',' << e.index << ',' << shortest(e.x.x()) << ',' << shortest(e.x.y()) << ','
           << shortest(e.y.x()) << ',' << shortest(e.y.y()) << ',' << shortest(e.t) << '\n';
      }
      write_output(os.str(), hq_out, out);
    } else if (phi->parsed()) {
      if (!(phi_kval > 0) || !std::isfinite(phi_kval)) throw UsageError("--k must be > 0");
      if (!(phi_r >= 0 && phi_r <= 1)) throw UsageError("--r must lie in [0, 1]");
      out << shortest(phi_k(phi_kval, Modulus::from_value(phi_r)).value) << '\n';
    } else if (cofk->parsed()) {
      if (!(cofk_k >= 1) || !std::isfinite(cofk_k)) throw UsageError("--k must be >= 1");
      const CofKCheck c = c_of_k_checked(cofk_k);
      out << "c " << shortest(c.log_route) << '\n'
          << "c_arth_route " << shortest(c.arth_route) << '\n'
          << "lower_linear " << shortest(c_lower_linear(cofk_k)) << '\n'
          << "lower_cosh " << shortest(c_lower_cosh(cofk_k)) << '\n'
          << "upper_linear " << shortest(c_upper_linear(cofk_k)) << '\n';
      if (!c.consistent) {
        err << "qcdist: the two formulas for c(K) disagree beyond 1e-10\n";
        return kFailure;
      }
    } else if (figure->parsed()) {
      FigureSpec spec;
      spec.name = *parse_figure_name(fig_name);
      switch (spec.name) {
        case FigureName::kFig2: spec.k_min = 1.0, spec.k_max = 2.5, spec.k_step = 0.01; break;
        case FigureName::kFig3:
          spec.k_min = 1.1, spec.k_max = 2.0, spec.k_step = 0.1;
          spec.estimator = fig_est.config();
          break;
        case FigureName::kFig4: spec.k_min = 1.0, spec.k_max = 5.0, spec.k_step = 0.05; break;
      }
      spec.k_min = fig_kmin.value_or(spec.k_min);
      spec.k_max = fig_kmax.value_or(spec.k_max);
      spec.k_step = fig_step.value_or(spec.k_step);
      if (!(spec.k_min >= 1 && spec.k_min <= spec.k_max) || !(spec.k_step > 0)) {
        throw UsageError("figure: need 1 <= --k-min <= --k-max and --step > 0");
      }
      emit_figure_data(spec, fig_out);
    } else if (selftest->parsed()) {
      return run_selftest(out);
    }
  } catch (const UsageError& e) {
    err << "qcdist: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "qcdist: " << e.what() << '\n';
    return kFailure;
  }
  return kSuccess;
}

}  // namespace qcdist::cli
