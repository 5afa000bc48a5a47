#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace xmm {

// Deterministic splittable RNG. A stream is identified by (seed, name, index);
// all randomness in the project flows from one top-level seed expanded into
// named substreams ("init", "augment", "sampler", "synth", ...), so parallel
// workers and resumed runs draw identical values. splitmix64 over an
// FNV-hashed key; stable across compilers and platforms.
class Rng {
 public:
  Rng(uint64_t seed, std::string_view name, uint64_t index = 0) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a offset basis
    auto mix = [&h](uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(seed);
    for (char c : name) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    mix(index);
    state_ = h;
    // burn one step so near-identical keys decorrelate
    next_u64();
  }

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // uniform integer in [0, n), unbiased via rejection
  int uniform_int(int n) {
    uint64_t un = static_cast<uint64_t>(n);
    uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    uint64_t v;
    do {
      v = next_u64();
    } while (v >= limit);
    return static_cast<int>(v % un);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // standard normal, Box-Muller with pair caching
  double normal() {
    if (has_cache_) {
      has_cache_ = false;
      return cache_;
    }
    double u1, u2;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 6.283185307179586 * u2;
    cache_ = r * std::sin(a);
    has_cache_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t state_;
  bool has_cache_ = false;
  double cache_ = 0.0;
};

}  // namespace xmm
