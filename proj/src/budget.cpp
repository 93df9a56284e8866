#include "fuzzlat/budget.hpp"

namespace fuzzlat {

std::optional<std::size_t> checked_pow(std::size_t base, std::size_t exp,
                                       std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

std::string SweepPlan::mode() const {
  if (exhaustive) return "exhaustive(" + std::to_string(full_count) + ")";
  return "sampled(" + std::to_string(sampled.size()) + " of " +
         std::to_string(full_count) + ")";
}

SweepPlan plan_sweep(std::size_t full_count, const Budget& b) {
  SweepPlan p;
  p.full_count = full_count;
  if (full_count <= b.max_enumeration) return p;
  p.exhaustive = false;
  SplitMix64 rng(b.seed);
  p.sampled.reserve(b.samples);
  for (std::size_t i = 0; i < b.samples; ++i)
    p.sampled.push_back(std::size_t(rng.below(full_count)));
  return p;
}

std::string PairSweepPlan::mode() const {
  if (exhaustive)
    return "exhaustive(" + std::to_string(full_count * full_count) + ")";
  return "sampled(" + std::to_string(sampled.size()) + " of " +
         std::to_string(full_count) + "^2)";
}

PairSweepPlan plan_pair_sweep(std::size_t full_count, const Budget& b) {
  PairSweepPlan p;
  p.full_count = full_count;
  if (full_count == 0) return p;
  if (full_count <= b.max_enumeration / full_count) return p;
  p.exhaustive = false;
  SplitMix64 rng(b.seed ^ 0xa5a5a5a5ULL);
  p.sampled.reserve(b.samples);
  for (std::size_t i = 0; i < b.samples; ++i) {
    std::size_t x = std::size_t(rng.below(full_count));
    std::size_t y = std::size_t(rng.below(full_count));
    p.sampled.emplace_back(x, y);
  }
  return p;
}

} // namespace fuzzlat
