#include <doctest.h>

#include <set>

#include "qcdist/counter_rng.hpp"

using namespace qcdist;

TEST_SUITE("counter_rng") {
  TEST_CASE("Philox4x32-10 known-answer vectors") {
    using C = Philox4x32::Counter;
    const Philox4x32 zero(0);
    CHECK(zero(C{0, 0, 0, 0}) == C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
    const Philox4x32 ones(0xffffffffffffffffULL);
    CHECK(ones(C{0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}) ==
          C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  }

  TEST_CASE("to_unit covers [0, 1)") {
    CHECK(Philox4x32::to_unit(0, 0) == 0);
    const double top = Philox4x32::to_unit(0xffffffff, 0xffffffff);
    CHECK(top < 1);
    CHECK(top == 1 - 0x1.0p-53);
  }

  TEST_CASE("draws depend only on (seed, index, stream, lane)") {
    const Philox4x32 a(42), b(42), c(43);
    CHECK(a.uniform_pair(123456789012ULL, 1, 0) == b.uniform_pair(123456789012ULL, 1, 0));
    CHECK(a.uniform_pair(7, 0, 0) != c.uniform_pair(7, 0, 0));
    CHECK(a.uniform_pair(7, 0, 0) != a.uniform_pair(7, 0, 1));
    CHECK(a.uniform_pair(7, 0, 0) != a.uniform_pair(7, 1, 0));
    CHECK(a.uniform_pair(7, 0, 0) != a.uniform_pair(7ULL + (1ULL << 32), 0, 0));
  }

  TEST_CASE("uniform draws have a sane mean and no repeats") {
    const Philox4x32 g(20090406);
    double sum = 0;
    std::set<double> seen;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const auto u = g.uniform_pair(static_cast<std::uint64_t>(i), 0, 0);
      for (double v : u) {
        CHECK(v >= 0);
        CHECK(v < 1);
        sum += v;
        seen.insert(v);
      }
    }
    CHECK(sum / (2 * n) == doctest::Approx(0.5).epsilon(0.01));
    CHECK(seen.size() == static_cast<std::size_t>(2 * n));
  }
}
