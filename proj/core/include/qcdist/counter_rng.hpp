#pragma once

// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
//
// Output is a pure function of (key, counter): substream i of a seed is
// obtained by putting i into the counter, so any partition of an index
// range across workers reproduces the same draws.

#include <array>
#include <cstdint>

namespace qcdist {

class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed),
             static_cast<std::uint32_t>(seed >> 32)} {}

  constexpr Counter operator()(Counter ctr) const {
    Key key = key_;
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
             static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
             static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

  /// Two doubles uniform in [0, 1) with 53 random bits each, drawn from the
  /// block at (index, stream, lane).
  constexpr std::array<double, 2> uniform_pair(std::uint64_t index,
                                               std::uint32_t stream,
                                               std::uint32_t lane) const {
    const Counter out = (*this)({static_cast<std::uint32_t>(index),
                                 static_cast<std::uint32_t>(index >> 32), stream,
                                 lane});
    return {to_unit(out[0], out[1]), to_unit(out[2], out[3])};
  }

  static constexpr double to_unit(std::uint32_t hi, std::uint32_t lo) {
    const std::uint64_t bits = (std::uint64_t{hi} << 32 | lo) >> 11;
    return static_cast<double>(bits) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85;

  Key key_;
};

}  // namespace qcdist
