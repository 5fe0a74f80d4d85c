#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace rcf {

// splitmix64: the standard 64-bit mixer; used only to turn (master, stream)
// pairs into well-separated engine seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Identifies one independent random stream: `stream` is typically the
// replication index under a fixed master seed.
struct Seed {
  std::uint64_t master = 0;
  std::uint64_t stream = 0;
};

// Deterministic stream of doubles derived from std::mt19937_64.
//
// All distribution transforms are implemented in-house (bit-shift uniforms,
// Box-Muller normals) rather than via <random> distributions, because the
// standard leaves those algorithms implementation-defined and we promise
// bit-identical paths for a given (master, stream) pair.
class RngStream {
 public:
  explicit RngStream(Seed seed) {
    std::uint64_t s = seed.master;
    const std::uint64_t a = splitmix64(s);
    s ^= (seed.stream + 0x9E3779B97F4A7C15ULL) * 0xBF58476D1CE4E5B9ULL;
    const std::uint64_t b = splitmix64(s);
    engine_.seed(a ^ (b + 0x632BE59BD9B4E019ULL));
  }

  // Uniform on the open interval (0,1); never returns an endpoint, so logs
  // and tangents downstream stay finite.
  double uniform01() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; draws two uniforms per pair and caches
  // the second variate, so consumption is deterministic.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(uniform01()));
    const double theta = 2.0 * pi_ * uniform01();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

  // Unit-mean exponential.
  double exponential() { return -std::log(uniform01()); }

  // Uniform on the open interval (-pi/2, pi/2).
  double uniform_angle() { return (uniform01() - 0.5) * pi_; }

 private:
  static constexpr double pi_ = 3.14159265358979323846;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace rcf
