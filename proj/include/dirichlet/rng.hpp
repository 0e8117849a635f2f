#pragma once

#include <cstdint>
#include <numbers>
#include <random>

namespace dirichlet {

// SplitMix64 finalizer; used to derive independent stream keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t stream) noexcept {
  return splitmix64(seed ^ splitmix64(stream + 0x632be59bd9b4e019ULL));
}

// Random stream identified by (seed, stream index). mt19937_64 output is fixed
// by the standard, and the conversions below avoid the implementation-defined
// <random> distributions, so streams are reproducible across toolchains.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream) : engine_(stream_key(seed, stream)) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }
  double angle() { return 2.0 * std::numbers::pi * uniform(); }
  double symmetric() { return 2.0 * uniform() - 1.0; }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dirichlet
