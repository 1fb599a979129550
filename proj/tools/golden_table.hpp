#pragma once

// Published log-scale bound table for K = 1.1, ..., 2.0 and the two crossover
// dilatations, used by `qcdist selftest`.

#include <array>

namespace qcdist::cli {

struct GoldenRow {
  double k;
  double conjecture;
  double av;
  double fv;
  double bv;
};

inline constexpr std::array<GoldenRow, 10> kGoldenTable{{
    {1.1, 0.2521, 1.6384, 0.7051, 1.0188},
    {1.2, 0.4621, 1.8484, 1.2485, 1.6058},
    {1.3, 0.6398, 2.0261, 1.7046, 2.0107},
    {1.4, 0.7922, 2.1785, 2.0913, 2.3061},
    {1.5, 0.9242, 2.3105, 2.4221, 2.5296},
    {1.6, 1.0397, 2.4260, 2.7094, 2.7031},
    {1.7, 1.1417, 2.5280, 2.9633, 2.8409},
    {1.8, 1.2323, 2.6186, 3.1921, 2.9521},
    {1.9, 1.3133, 2.6996, 3.4020, 3.0433},
    {2.0, 1.3863, 2.7726, 3.5979, 3.1192},
}};

inline constexpr double kGoldenTolerance = 5e-5;
inline constexpr double kGoldenFvTolerance = 1e-3;

inline constexpr double kCrossoverAvBv = 1.3089;
inline constexpr double kCrossoverFvBv = 1.5946;
inline constexpr double kCrossoverTolerance = 5e-4;

}  // namespace qcdist::cli
