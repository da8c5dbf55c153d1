#pragma once

#include <cstdint>
#include <random>

namespace lepkit {

// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Seed of the t-th child stream of `master`. Trials of an experiment use
// child_seed(master, t), so results do not depend on scheduling.
std::uint64_t child_seed(std::uint64_t master, std::uint64_t t);

// mt19937_64 with its own bounded sampling, so draws are identical across
// standard libraries (std::uniform_int_distribution is not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lepkit
