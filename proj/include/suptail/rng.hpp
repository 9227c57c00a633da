#pragma once

#include <cstdint>

namespace suptail {

// Counter-based uniform generator: a splitmix64 finalizer applied to an
// affine counter walk. Output depends only on (key, draw index), so every
// (master seed, stream, replication) triple owns an independent stream and
// parallel replications never share state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : state_(key) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace detail

// Stream identifiers for the experiments that draw randomness. Keeping the
// tags in one place guarantees two experiments with the same master seed
// still see unrelated streams.
enum class Stream : std::uint64_t {
  uniform_sample = 1,
  poisson_process = 2,
  coupling = 3,
  tail_experiment = 4,
  member_tail = 5,
  poisson_cells = 6,
  lower_bound = 7,
  modulus = 8,
  verify = 9,
};

inline std::uint64_t derive_key(std::uint64_t master_seed, Stream stream,
                                std::uint64_t counter) {
  std::uint64_t k = detail::mix64(master_seed + 0x9E3779B97F4A7C15ull *
                                                    static_cast<std::uint64_t>(stream));
  return detail::mix64(k + 0xD1B54A32D192ED03ull * (counter + 1));
}

}  // namespace suptail
