#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qcdist/analysis.hpp"
#include "qcdist/errors.hpp"
#include "qcdist/mori_bounds.hpp"
#include "qcdist/schwarz.hpp"

using namespace qcdist;

namespace {

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<double> csv_numbers(const std::string& line) {
  std::vector<double> out;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) out.push_back(std::stod(cell));
  return out;
}

// Planar AV and h(t1), written out from the formulas in two variables.
double av_direct(double K) { return 4 * std::pow(4.0, 2 * (1 - 1 / K)); }

double h_t1_direct(double K) {
  const double a = 1 / K, b = K;
  const double t1 = std::pow(3 * a, a) * std::pow(4.0, a - 1) * std::pow(b - a, -a);
  return (3 + std::pow(4.0, b - 1) * std::pow(t1, b)) * std::pow(t1, -a) *
         std::pow(4.0, 2 * (1 - a));
}

// First sign change of f on a uniform grid, refined by a finer scan.
double scan_root(double (*f)(double), double lo, double hi) {
  for (int pass = 0; pass < 3; ++pass) {
    const int n = 1000;
    const double h = (hi - lo) / n;
    for (int i = 0; i < n; ++i) {
      const double a = lo + h * i;
      if ((f(a) < 0) != (f(a + h) < 0)) {
        lo = a;
        hi = a + h;
        break;
      }
    }
  }
  return (lo + hi) / 2;
}

double av_minus_bv(double K) { return std::log(av_direct(K)) - std::log(h_t1_direct(K)); }
double fv_minus_bv(double K) { return log_fv_bound(K) - std::log(h_t1_direct(K)); }

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("column parsing") {
    CHECK(parse_column("conj") == Column::bound(BoundFamily::kMoriConjecture));
    CHECK(parse_column("av") == Column::bound(BoundFamily::kAV));
    CHECK(parse_column("fv") == Column::bound(BoundFamily::kFV));
    CHECK(parse_column("bv") == Column::bound(BoundFamily::kBVClosed));
    CHECK(parse_column("bvinf") == Column::bound(BoundFamily::kBVInf));
    CHECK(parse_column("uph") == Column::bound(BoundFamily::kUPH));
    CHECK(parse_column("hq") == Column::hq());
    CHECK_FALSE(parse_column("AV"));
    CHECK_FALSE(parse_column(""));
    CHECK_FALSE(parse_bound_family("hq"));

    const std::vector<Column> cols = parse_columns("conj,av,fv,bv");
    REQUIRE(cols.size() == 4);
    CHECK(cols[3] == Column::bound(BoundFamily::kBVClosed));
    CHECK_THROWS_AS(parse_columns("conj,foo"), DomainError);
    CHECK_THROWS_AS(parse_columns("conj,,av"), DomainError);
    CHECK_THROWS_AS(parse_columns(""), DomainError);
  }

  TEST_CASE("K grid") {
    const std::vector<double> g = k_grid(1.1, 2.0, 0.1);
    REQUIRE(g.size() == 10);
    CHECK(g.front() == 1.1);
    CHECK(g[2] == 1.3);
    CHECK(g.back() == 2.0);
    CHECK(k_grid(1, 2.5, 0.01).size() == 151);
    CHECK(k_grid(1.5, 1.5, 0.1) == std::vector<double>{1.5});
    CHECK(k_grid(1, 1.25, 0.1).back() == doctest::Approx(1.2).epsilon(1e-15));
  }

  TEST_CASE("fixed formatting") {
    CHECK(format_fixed(1.23456, 4) == "1.2346");
    CHECK(format_fixed(2, 4) == "2.0000");
    CHECK(format_fixed(0, 4) == "0.0000");
    CHECK(format_fixed(-0.5, 2) == "-0.50");
    CHECK(format_fixed(12.5, 0) == "12");
  }

  TEST_CASE("table specification validation") {
    TableSpec spec;
    spec.columns = parse_columns("conj");
    CHECK_NOTHROW(spec.validate());
    spec.k_step = 0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.k_step = 0.1;
    spec.k_min = 0.9;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.k_min = 2.1;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.k_min = 1.1;
    spec.columns = parse_columns("conj,hq");
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec.estimator = EstimatorConfig{};
    CHECK_NOTHROW(spec.validate());
    spec.columns = {};
    CHECK_THROWS_AS(spec.validate(), DomainError);
  }

  TEST_CASE("markdown table rows") {
    TableSpec spec;
    spec.k_min = 1.0;
    spec.columns = parse_columns("conj,av,fv,bv");
    const std::vector<std::string> out = lines(make_table(spec));
    REQUIRE(out.size() >= 13);
    CHECK(out[0] == "| K | conjecture | AV | FV | BV(h(t₁)) |");
    CHECK(out[1] == "|---|---|---|---|---|");
    CHECK(out[2].rfind("| 1.0 | 0.0000 |", 0) == 0);
    const GrotzschPolicy planar = GrotzschPolicy::exact_planar();
    for (double K : {1.6, 1.8}) {
      const std::string row = "| " + format_fixed(K, 1) + " | " +
                              format_fixed(std::log(std::pow(16.0, 1 - 1 / K)), 4) +
                              " | " + format_fixed(std::log(av_direct(K)), 4) + " | " +
                              format_fixed(log_fv_bound(K), 4) + " | " +
                              format_fixed(std::log(h_at_t1(2, K, planar)), 4) +
                              (t1_point(2, K, planar) < 1 ? "*" : "") + " |";
      bool found = false;
      for (const std::string& line : out) found = found || line == row;
      CHECK_MESSAGE(found, row);
    }
    CHECK(out[out.size() - 3] == "Entries are natural logarithms of the bounds.");
    CHECK(out.back().rfind("* t₁ < 1", 0) == 0);
  }

  TEST_CASE("linear scale and the t1 < 1 marker") {
    TableSpec spec;
    spec.k_min = 1.0;
    spec.k_max = 1.01;
    spec.k_step = 0.01;
    spec.log_scale = false;
    spec.decimals = 6;
    spec.columns = parse_columns("bv");
    const GrotzschPolicy planar = GrotzschPolicy::exact_planar();
    const std::string text = make_table(spec);
    CHECK(text.find("Entries are natural logarithms") == std::string::npos);
    if (t1_point(2, 1.01, planar) < 1) {
      CHECK(text.find(format_fixed(h_at_t1(2, 1.01, planar), 6) + "*") != std::string::npos);
      CHECK(text.find("* t₁ < 1") != std::string::npos);
    } else {
      CHECK(text.find("*") == std::string::npos);
    }
  }

  TEST_CASE("csv table") {
    TableSpec spec;
    spec.format = TableFormat::kCsv;
    spec.columns = parse_columns("conj,av,bv");
    const std::vector<std::string> out = lines(make_table(spec));
    REQUIRE(out.size() == 11);
    CHECK(out[0] == "K,log_conjecture,log_av,log_bv,bv_t1_ge_1");
    const std::vector<double> first = csv_numbers(out[1]);
    REQUIRE(first.size() == 5);
    CHECK(first[0] == 1.1);
    CHECK(first[1] == doctest::Approx(std::log(std::pow(16.0, 1 - 1 / 1.1))).epsilon(1e-4));
    CHECK((first[4] == 0 || first[4] == 1));
    CHECK(make_table(spec).find('\r') == std::string::npos);

    spec.n = 3;
    spec.lambda = GrotzschPolicy::upper_envelope();
    spec.columns = parse_columns("av");
    const std::vector<std::string> n3 = lines(make_table(spec));
    CHECK(n3[0] == "K,log_av,lambda");
    const double lam = csv_numbers(n3[1])[2];
    CHECK(lam == doctest::Approx(2 * std::exp(2.0)).epsilon(1e-6));
  }

  TEST_CASE("columns outside their validity show n/a") {
    TableSpec spec;
    spec.n = 3;
    spec.lambda = GrotzschPolicy::supplied(5);
    spec.format = TableFormat::kCsv;
    spec.columns = parse_columns("conj,fv");
    for (const std::string& line : lines(make_table(spec))) {
      if (line.rfind("K,", 0) == 0) continue;
      CHECK(line.find("n/a,n/a") != std::string::npos);
    }
  }

  TEST_CASE("crossovers against a brute-force scan") {
    const double av_bv = find_crossover({BoundFamily::kAV, BoundFamily::kBVClosed, {1.1, 2.0}});
    CHECK(std::abs(av_bv - scan_root(av_minus_bv, 1.1, 2.0)) < 1e-8);
    const double fv_bv = find_crossover({BoundFamily::kFV, BoundFamily::kBVClosed, {1.1, 2.0}});
    CHECK(std::abs(fv_bv - scan_root(fv_minus_bv, 1.1, 2.0)) < 1e-8);
    CHECK(std::abs(av_minus_bv(av_bv)) < 1e-9);

    CHECK_THROWS_AS(find_crossover({BoundFamily::kMoriConjecture, BoundFamily::kMoriConjecture,
                                    {1.1, 2.0}}),
                    BracketError);
    CHECK_THROWS_AS(find_crossover({BoundFamily::kAV, BoundFamily::kBVClosed, {1.5, 2.0}}),
                    BracketError);
  }

  TEST_CASE("figure names") {
    CHECK(parse_figure_name("fig2") == FigureName::kFig2);
    CHECK(parse_figure_name("fig3") == FigureName::kFig3);
    CHECK(parse_figure_name("fig4") == FigureName::kFig4);
    CHECK_FALSE(parse_figure_name("fig5"));
  }

  TEST_CASE("fig2 data") {
    FigureSpec spec{FigureName::kFig2, 1.0, 1.2, 0.1, {}};
    const std::vector<std::string> out = lines(figure_csv(spec));
    REQUIRE(out.size() == 4);
    CHECK(out[0] == "K,log_conjecture,log_av,log_bv");
    const std::vector<double> row = csv_numbers(out[3]);
    CHECK(row[0] == doctest::Approx(1.2));
    CHECK(row[1] < row[3]);
    CHECK(row[3] < row[2]);
    CHECK(row[2] == doctest::Approx(std::log(av_direct(1.2))).epsilon(1e-9));
  }

  TEST_CASE("fig3 data") {
    EstimatorConfig cfg;
    cfg.samples = 2000;
    FigureSpec spec{FigureName::kFig3, 1.5, 1.5, 0.1, cfg};
    const std::vector<std::string> out = lines(figure_csv(spec));
    REQUIRE(out.size() == 2);
    CHECK(out[0] == "K,log_bv,log_fv,log_conjecture,log_hq");
    const std::vector<double> row = csv_numbers(out[1]);
    CHECK(row[4] < row[2]);
    CHECK(row[4] < row[1]);
    CHECK(row[4] > row[3] - 1);
    spec.estimator.reset();
    CHECK_THROWS_AS(figure_csv(spec), DomainError);
  }

  TEST_CASE("fig4 data") {
    FigureSpec spec{FigureName::kFig4, 1.0, 2.0, 0.5, {}};
    const std::vector<std::string> out = lines(figure_csv(spec));
    REQUIRE(out.size() == 4);
    CHECK(out[0] == "K,lower_linear,lower_cosh,c_of_k,upper_linear");
    for (double v : csv_numbers(out[1])) CHECK(v == doctest::Approx(1).epsilon(1e-10));
    const std::vector<double> row = csv_numbers(out[3]);
    CHECK(row[0] == 2);
    CHECK(row[3] == doctest::Approx(c_of_k(2)).epsilon(1e-10));
    CHECK(row[1] <= row[2]);
    CHECK(row[2] <= row[3]);
    CHECK(row[3] <= row[4]);
  }

  TEST_CASE("figure output file") {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "qcdist_analysis_test";
    std::filesystem::create_directories(dir);
    const FigureSpec spec{FigureName::kFig4, 1.0, 1.5, 0.5, {}};
    const std::filesystem::path file = dir / "fig4.csv";
    emit_figure_data(spec, file);
    std::ifstream in(file, std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == figure_csv(spec));
    std::filesystem::remove_all(dir);

    const std::filesystem::path bad = dir / "missing" / "fig4.csv";
    try {
      emit_figure_data(spec, bad);
      FAIL("expected an I/O error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find(bad.string()) != std::string::npos);
    }
  }
}
