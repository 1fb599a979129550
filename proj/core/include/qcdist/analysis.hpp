#pragma once

// Tabulation, crossover search and figure data for the planar bounds.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcdist/distortion_geometry.hpp"
#include "qcdist/mori_bounds.hpp"

namespace qcdist {

/// A table column: one of the bound families or the sampled HQ estimate.
struct Column {
  enum class Kind { kBound, kHq };
  Kind kind = Kind::kBound;
  BoundFamily family = BoundFamily::kMoriConjecture;

  static Column bound(BoundFamily f) { return {Kind::kBound, f}; }
  static Column hq() { return {Kind::kHq, BoundFamily::kMoriConjecture}; }

  friend bool operator==(const Column&, const Column&) = default;
};

/// Parses "conj", "av", "fv", "bv", "bvinf", "uph" or "hq".
std::optional<Column> parse_column(std::string_view token);
std::optional<BoundFamily> parse_bound_family(std::string_view token);
/// Comma-separated list of column tokens; throws DomainError on unknown ones.
std::vector<Column> parse_columns(std::string_view list);

enum class TableFormat { kCsv, kMarkdown };

struct TableSpec {
  double k_min = 1.1;
  double k_max = 2.0;
  double k_step = 0.1;
  std::vector<Column> columns;
  TableFormat format = TableFormat::kMarkdown;
  int decimals = 4;
  bool log_scale = true;
  int n = 2;
  GrotzschPolicy lambda = GrotzschPolicy::exact_planar();
  /// Required when an HQ column is present.
  std::optional<EstimatorConfig> estimator;

  /// Throws DomainError when the grid or the formatting is invalid, or an HQ
  /// column lacks an estimator configuration.
  void validate() const;
};

/// K values k_min, k_min + step, ..., up to k_max inclusive, each rounded to
/// 12 decimals so that accumulated steps land on the printed grid.
std::vector<double> k_grid(double k_min, double k_max, double k_step);

/// Formats `value` with `decimals` fixed decimals (round half to even on the
/// binary value).
std::string format_fixed(double value, int decimals);

/// One row per K; cells hold log(bound) when log_scale. Markdown output marks
/// h(t1) cells with t1 < 1 by "*" and explains the marker below the table;
/// CSV output adds a `bv_t1_ge_1` column instead.
std::string make_table(const TableSpec& spec);

struct CrossoverQuery {
  BoundFamily left;
  BoundFamily right;
  std::pair<double, double> bracket;
  int n = 2;
  GrotzschPolicy lambda = GrotzschPolicy::exact_planar();
};

/// Root of log(left(K)) - log(right(K)) on the bracket by bisection (at most
/// 50 halvings). kBVClosed means the closed form h(t1). Throws BracketError
/// without a sign change.
double find_crossover(const CrossoverQuery& query, double tol = 1e-10);

enum class FigureName { kFig2, kFig3, kFig4 };

std::optional<FigureName> parse_figure_name(std::string_view token);

struct FigureSpec {
  FigureName name = FigureName::kFig2;
  double k_min = 1.0;
  double k_max = 2.0;
  double k_step = 0.01;
  /// Required for kFig3.
  std::optional<EstimatorConfig> estimator;
};

/// CSV text of a figure's data series, header first.
///   fig2: K, log conjecture, log AV, log h(t1)
///   fig3: K, log h(t1), log FV, log conjecture, log HQ
///   fig4: K, u(K-1)+1, log ch(K arch e), c(K), v(K-1)+K
std::string figure_csv(const FigureSpec& spec);

/// Writes figure_csv to `out`; throws Error with the path on I/O failure.
void emit_figure_data(const FigureSpec& spec, const std::filesystem::path& out);

}  // namespace qcdist
