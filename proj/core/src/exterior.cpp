#include "liecoh/exterior.hpp"

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

void enumerate(std::size_t n, std::size_t k, std::size_t start, std::uint32_t acc, std::vector<std::uint32_t>& out) {
  if (k == 0) {
    out.push_back(acc);
    return;
  }
  for (std::size_t i = start; i + k <= n; ++i) enumerate(n, k - 1, i + 1, acc | (std::uint32_t{1} << i), out);
}

}  // namespace

WedgeBasis::WedgeBasis(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (n > 24) throw DimensionMismatch("WedgeBasis supports at most 24 generators");
  if (k <= n) enumerate(n, k, 0, 0, masks_);
  lookup_.assign(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < masks_.size(); ++i) lookup_[masks_[i]] = static_cast<std::int32_t>(i);
}

std::vector<std::size_t> elements(std::uint32_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace liecoh
