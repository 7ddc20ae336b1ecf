#ifndef FK_PRNG_HPP
#define FK_PRNG_HPP

#include <cstdint>
#include <random>

namespace fk {

/// Deterministic random source. mt19937_64 output is pinned by the C++
/// standard, so seeded runs reproduce byte-for-byte across platforms;
/// distributions are hand-rolled because the standard ones are not pinned.
class Prng {
 public:
  explicit Prng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  /// Uniform value in [0, k); k must be positive.
  uint64_t below(uint64_t k) {
    uint64_t limit = k * (UINT64_MAX / k);
    uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % k;
  }

  int below_int(int k) { return static_cast<int>(below(static_cast<uint64_t>(k))); }

  bool coin() { return (eng_() & 1) != 0; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace fk

#endif
