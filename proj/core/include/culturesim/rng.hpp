#ifndef CULTURESIM_RNG_HPP
#define CULTURESIM_RNG_HPP

#include <cstdint>
#include <random>

namespace culturesim {

// Deterministic random stream. The distribution code is written out by hand
// so that a (config, seed) pair reproduces the same trajectory everywhere;
// standard-library distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53 bits of precision. Consumes exactly one engine call.
  double unit_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) for n >= 1. Consumes exactly one engine call.
  int index(int n) {
    const auto wide = static_cast<unsigned __int128>(next_u64()) *
                      static_cast<std::uint64_t>(n);
    return static_cast<int>(wide >> 64);
  }

  bool operator==(const Rng&) const = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace culturesim

#endif  // CULTURESIM_RNG_HPP
