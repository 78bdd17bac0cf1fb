#pragma once

#include <cstdint>
#include <limits>

namespace benford {

/// Counter-based generator: the i-th output is a SplitMix64 finalisation of
/// key + i * golden. The whole state is (key, counter), so substreams are
/// derived by hashing a master seed with stream coordinates and never need
/// to be advanced in any particular order.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t key) noexcept : key_(key) {}

  /// Stream for (master_seed, replicate, index); distinct coordinates give
  /// statistically independent streams.
  static Rng substream(std::uint64_t master_seed, std::uint64_t replicate, std::uint64_t index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return next_u64(); }
  std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * kGolden); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform_open() noexcept {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

inline Rng Rng::substream(std::uint64_t master_seed, std::uint64_t replicate, std::uint64_t index) noexcept {
  std::uint64_t k = mix64(master_seed ^ 0x243f6a8885a308d3ULL);
  k = mix64(k + replicate * 0xd1b54a32d192ed03ULL + 0x13198a2e03707344ULL);
  k = mix64(k + index * 0xa0761d6478bd642fULL + 0xa4093822299f31d0ULL);
  return Rng(k);
}

}  // namespace benford
