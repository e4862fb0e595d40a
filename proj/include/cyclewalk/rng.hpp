#pragma once

#include <cstdint>

namespace cyclewalk {

// xoshiro256** (Blackman-Vigna), state seeded through splitmix64.  Shard s of
// a seed's family starts after s long jumps, giving disjoint streams.  Bounded
// draws use masked rejection, so output depends only on this code, not on any
// standard-library distribution.
class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t seed, std::uint64_t shard = 0) {
    std::uint64_t z = seed;
    for (auto& word : s_) {
      z += 0x9e3779b97f4a7c15ull;
      std::uint64_t x = z;
      x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
      x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
      word = x ^ (x >> 31);
    }
    for (std::uint64_t i = 0; i < shard; ++i) long_jump();
  }

  std::uint64_t next() {
    std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform on {0, ..., bound-1}, bound >= 1
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t mask = bound - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t r;
    do {
      r = next() & mask;
    } while (r >= bound);
    return r;
  }

  void long_jump() {
    static constexpr std::uint64_t kJump[4] = {0x76e15d3efefdcbbfull, 0xc5004e441c522fb3ull,
                                               0x77710069854ee241ull, 0x39109bb02acbe635ull};
    std::uint64_t t[4] = {0, 0, 0, 0};
    for (std::uint64_t word : kJump)
      for (int b = 0; b < 64; ++b) {
        if (word & (1ull << b))
          for (int i = 0; i < 4; ++i) t[i] ^= s_[i];
        next();
      }
    for (int i = 0; i < 4; ++i) s_[i] = t[i];
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace cyclewalk
