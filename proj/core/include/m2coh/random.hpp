#ifndef M2COH_RANDOM_HPP
#define M2COH_RANDOM_HPP

#include <cstdint>
#include <random>

#include "m2coh/field.hpp"

namespace m2coh {

/// Deterministic source of field elements; the same seed always yields the
/// same stream, which keeps every randomized check reproducible.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  Felt felt(const Field& f) {
    std::uint64_t v = gen_() % f.order();
    return f.make(v % f.characteristic(), v / f.characteristic());
  }

  Felt nonzero_felt(const Field& f) {
    std::uint64_t v = 1 + gen_() % (f.order() - 1);
    return f.make(v % f.characteristic(), v / f.characteristic());
  }

  Vec vec(const Field& f, std::size_t n) {
    Vec out(n);
    for (auto& x : out) x = felt(f);
    return out;
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(gen_() % n); }

private:
  std::mt19937_64 gen_;
};

} // namespace m2coh

#endif
