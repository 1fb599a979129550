#include "qcdist/analysis.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "qcdist/errors.hpp"
#include "qcdist/scalar_search.hpp"
#include "qcdist/schwarz.hpp"

namespace qcdist {

namespace {

constexpr int kFigureDecimals = 10;

// Smallest number of decimals (at least one) that prints every grid value
// exactly.
int grid_decimals(double k_min, double k_step) {
  for (int p = 1; p < 10; ++p) {
    const double scale = std::pow(10.0, p);
    const auto exact = [scale](double v) {
      return std::abs(v * scale - std::round(v * scale)) < 1e-6;
    };
    if (exact(k_min) && exact(k_step)) return p;
  }
  return 10;
}

std::string markdown_label(const Column& c) {
  if (c.kind == Column::Kind::kHq) return "HQ";
  switch (c.family) {
    case BoundFamily::kMoriConjecture: return "conjecture";
    case BoundFamily::kAV: return "AV";
    case BoundFamily::kFV: return "FV";
    case BoundFamily::kBVClosed: return "BV(h(t₁))";
    case BoundFamily::kBVInf: return "BV(inf h)";
    case BoundFamily::kUPH: return "UPH";
  }
  return "?";
}

std::string csv_label(const Column& c, bool log_scale) {
  const std::string base =
      c.kind == Column::Kind::kHq ? "hq" : std::string(name(c.family));
  return log_scale ? "log_" + base : base;
}

struct Cell {
  std::optional<double> value;  // empty when the column is undefined at K
  bool outside_validity = false;
};

Cell evaluate_cell(const Column& c, double K, const TableSpec& spec) {
  try {
    if (c.kind == Column::Kind::kHq) {
      if (spec.n != 2) return {};
      return {hq_estimate(K, *spec.estimator).value, false};
    }
    const BoundEvaluation e = evaluate_bound(c.family, spec.n, K, spec.lambda);
    return {e.value, !e.within_validity};
  } catch (const ValidityError&) {
    return {};
  }
}

}  // namespace

std::optional<BoundFamily> parse_bound_family(std::string_view token) {
  if (token == "conj" || token == "conjecture") return BoundFamily::kMoriConjecture;
  if (token == "av") return BoundFamily::kAV;
  if (token == "fv") return BoundFamily::kFV;
  if (token == "bv") return BoundFamily::kBVClosed;
  if (token == "bvinf") return BoundFamily::kBVInf;
  if (token == "uph") return BoundFamily::kUPH;
  return std::nullopt;
}

std::optional<Column> parse_column(std::string_view token) {
  if (token == "hq") return Column::hq();
  if (auto f = parse_bound_family(token)) return Column::bound(*f);
  return std::nullopt;
}

std::vector<Column> parse_columns(std::string_view list) {
  std::vector<Column> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view token = list.substr(start, comma - start);
    const auto column = parse_column(token);
    if (!column) throw DomainError("unknown column '" + std::string(token) + "'");
    out.push_back(*column);
    start = comma + 1;
  }
  return out;
}

void TableSpec::validate() const {
  if (!(k_min >= 1 && k_min < k_max) || !std::isfinite(k_max)) {
    throw DomainError("table: need 1 <= k_min < k_max");
  }
  if (!(k_step > 0)) throw DomainError("table: k_step must be > 0");
  if (decimals < 1 || decimals > 15) throw DomainError("table: decimals must be in [1, 15]");
  if (columns.empty()) throw DomainError("table: no columns requested");
  if (n < 2) throw DomainError("table: n must be >= 2");
  for (const Column& c : columns) {
    if (c.kind == Column::Kind::kHq && !estimator) {
      throw DomainError("table: the HQ column needs an estimator configuration");
    }
  }
  if (estimator) estimator->validate();
}

std::vector<double> k_grid(double k_min, double k_max, double k_step) {
  if (!(k_step > 0) || !(k_min <= k_max)) throw DomainError("k_grid: invalid grid");
  const auto count =
      static_cast<std::size_t>(std::floor((k_max - k_min) / k_step + 1e-9)) + 1;
  std::vector<double> grid;
  grid.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double k = k_min + static_cast<double>(i) * k_step;
    grid.push_back(std::round(k * 1e12) / 1e12);
  }
  return grid;
}

std::string format_fixed(double value, int decimals) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << std::fixed << std::setprecision(decimals) << value;
  return os.str();
}

std::string make_table(const TableSpec& spec) {
  spec.validate();
  const bool markdown = spec.format == TableFormat::kMarkdown;
  const int k_decimals = grid_decimals(spec.k_min, spec.k_step);
  const bool has_bv = std::find(spec.columns.begin(), spec.columns.end(),
                                Column::bound(BoundFamily::kBVClosed)) !=
                      spec.columns.end();
  std::optional<double> lambda_value;
  if (spec.n != 2) lambda_value = spec.lambda.resolve(spec.n);

  std::ostringstream os;
  if (markdown) {
    os << "| K |";
    for (const Column& c : spec.columns) os << ' ' << markdown_label(c) << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < spec.columns.size(); ++i) os << "---|";
    os << '\n';
  } else {
    os << "K";
    for (const Column& c : spec.columns) os << ',' << csv_label(c, spec.log_scale);
    if (has_bv) os << ",bv_t1_ge_1";
    if (lambda_value) os << ",lambda";
    os << '\n';
  }

  bool any_marked = false;
  for (const double K : k_grid(spec.k_min, spec.k_max, spec.k_step)) {
    bool bv_valid = true;
    std::vector<std::string> cells;
    for (const Column& c : spec.columns) {
      const Cell cell = evaluate_cell(c, K, spec);
      if (!cell.value) {
        cells.emplace_back("n/a");
        continue;
      }
      const double shown = spec.log_scale ? std::log(*cell.value) : *cell.value;
      std::string text = format_fixed(shown, spec.decimals);
      if (cell.outside_validity) {
        bv_valid = false;
        if (markdown) {
          text += '*';
          any_marked = true;
        }
      }
      cells.push_back(std::move(text));
    }
    if (markdown) {
      os << "| " << format_fixed(K, k_decimals) << " |";
      for (const std::string& c : cells) os << ' ' << c << " |";
    } else {
      os << format_fixed(K, k_decimals);
      for (const std::string& c : cells) os << ',' << c;
      if (has_bv) os << ',' << (bv_valid ? 1 : 0);
      if (lambda_value) os << ',' << format_fixed(*lambda_value, 6);
    }
    os << '\n';
  }

  if (markdown) {
    if (spec.log_scale) os << "\nEntries are natural logarithms of the bounds.\n";
    if (any_marked) {
      os << "\n* t₁ < 1: the closed form h(t₁) is shown, although it is then "
            "smaller than inf{h(t) : t ≥ 1}.\n";
    }
    if (lambda_value) {
      os << "\nλ_" << spec.n << " = " << format_fixed(*lambda_value, 6) << '\n';
    }
  }
  return os.str();
}

double find_crossover(const CrossoverQuery& query, double tol) {
  if (!(tol > 0)) throw DomainError("find_crossover: tol must be > 0");
  const auto [lo, hi] = query.bracket;
  if (!(lo >= 1 && lo < hi)) throw BracketError("find_crossover: need 1 <= lo < hi");
  const auto gap = [&](double K) {
    return std::log(evaluate_bound(query.left, query.n, K, query.lambda).value) -
           std::log(evaluate_bound(query.right, query.n, K, query.lambda).value);
  };
  const double g_lo = gap(lo), g_hi = gap(hi);
  if (!((g_lo < 0 && g_hi > 0) || (g_lo > 0 && g_hi < 0))) {
    throw BracketError("find_crossover: log(" + std::string(name(query.left)) +
                       ") - log(" + std::string(name(query.right)) +
                       ") does not change sign on [" + format_fixed(lo, 6) + ", " +
                       format_fixed(hi, 6) + "]");
  }
  return bisect_root(gap, lo, hi, tol, 50);
}

std::optional<FigureName> parse_figure_name(std::string_view token) {
  if (token == "fig2") return FigureName::kFig2;
  if (token == "fig3") return FigureName::kFig3;
  if (token == "fig4") return FigureName::kFig4;
  return std::nullopt;
}

std::string figure_csv(const FigureSpec& spec) {
  if (!(spec.k_min >= 1 && spec.k_min <= spec.k_max) || !(spec.k_step > 0)) {
    throw DomainError("figure: need 1 <= k_min <= k_max and k_step > 0");
  }
  if (spec.name == FigureName::kFig3) {
    if (!spec.estimator) throw DomainError("figure fig3 needs an estimator configuration");
    spec.estimator->validate();
  }
  const GrotzschPolicy planar = GrotzschPolicy::exact_planar();
  const int k_decimals = grid_decimals(spec.k_min, spec.k_step);
  const auto num = [](double v) { return format_fixed(v, kFigureDecimals); };

  std::ostringstream os;
  switch (spec.name) {
    case FigureName::kFig2: os << "K,log_conjecture,log_av,log_bv\n"; break;
    case FigureName::kFig3: os << "K,log_bv,log_fv,log_conjecture,log_hq\n"; break;
    case FigureName::kFig4:
      os << "K,lower_linear,lower_cosh,c_of_k,upper_linear\n";
      break;
  }
  for (const double K : k_grid(spec.k_min, spec.k_max, spec.k_step)) {
    os << format_fixed(K, k_decimals);
    switch (spec.name) {
      case FigureName::kFig2:
        os << ',' << num(std::log(mori_conjecture_bound(K))) << ','
           << num(std::log(av_bound(2, K, planar))) << ','
           << num(std::log(h_at_t1(2, K, planar)));
        break;
      case FigureName::kFig3:
        os << ',' << num(std::log(h_at_t1(2, K, planar))) << ','
           << num(log_fv_bound(K)) << ',' << num(std::log(mori_conjecture_bound(K)))
           << ',' << num(std::log(hq_estimate(K, *spec.estimator).value));
        break;
      case FigureName::kFig4:
        os << ',' << num(c_lower_linear(K)) << ',' << num(c_lower_cosh(K)) << ','
           << num(c_of_k(K)) << ',' << num(c_upper_linear(K));
        break;
    }
    os << '\n';
  }
  return os.str();
}

void emit_figure_data(const FigureSpec& spec, const std::filesystem::path& out) {
  const std::string text = figure_csv(spec);
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open '" + out.string() + "' for writing");
  file << text;
  file.flush();
  if (!file) throw Error("failed writing '" + out.string() + "'");
}

}  // namespace qcdist
