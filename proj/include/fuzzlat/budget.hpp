#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fuzzlat {

// Bound on exhaustive enumerations. Sweeps whose full count fits under
// max_enumeration run exhaustively; property sweeps beyond it fall back to
// seeded sampling, while operations that require exhaustiveness refuse.
struct Budget {
  std::size_t max_enumeration = 20'000;
  std::uint64_t seed = 42;
  std::size_t samples = 1'000;
};

// Deterministic across platforms, unlike std::uniform_int_distribution.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

private:
  std::uint64_t state_;
};

// base^exp, or nullopt on overflow past cap.
std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp,
                                       std::size_t cap = SIZE_MAX / 4);

// Iteration plan over a space of `full_count` canonical indices.
struct SweepPlan {
  std::size_t full_count = 0;
  bool exhaustive = true;
  std::vector<std::size_t> sampled; // drawn indices when not exhaustive

  std::size_t size() const { return exhaustive ? full_count : sampled.size(); }
  std::size_t index(std::size_t k) const { return exhaustive ? k : sampled[k]; }
  std::string mode() const;
};

SweepPlan plan_sweep(std::size_t full_count, const Budget& b);

// Plan over pairs drawn from a space of `full_count` indices; exhaustive when
// full_count^2 fits the budget.
struct PairSweepPlan {
  std::size_t full_count = 0;
  bool exhaustive = true;
  std::vector<std::pair<std::size_t, std::size_t>> sampled;

  std::size_t size() const {
    return exhaustive ? full_count * full_count : sampled.size();
  }
  std::pair<std::size_t, std::size_t> at(std::size_t k) const {
    if (exhaustive) return {k / full_count, k % full_count};
    return sampled[k];
  }
  std::string mode() const;
};

PairSweepPlan plan_pair_sweep(std::size_t full_count, const Budget& b);

} // namespace fuzzlat
