#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "liecoh/pair.hpp"

namespace liecoh::reference {

/// Random valid pairs built from small blocks (su2, su3, split so4, u2, sp1,
/// tori) with a standard subalgebra per block, optional order-2 component
/// generators, and a random rational unitary conjugation of each block.
class RandomPairs {
 public:
  explicit RandomPairs(std::uint64_t seed, std::size_t max_dim = 12) : rng_(seed), max_dim_(max_dim) {}

  HomogeneousPair next();

 private:
  HomogeneousPair block(const std::string& kind);
  int small(int lo, int hi);

  std::mt19937_64 rng_;
  std::size_t max_dim_;
  std::size_t counter_ = 0;
};

/// The first count pairs drawn from RandomPairs(seed).
std::vector<HomogeneousPair> random_suite(std::size_t count, std::uint64_t seed = 20261016);

}  // namespace liecoh::reference
