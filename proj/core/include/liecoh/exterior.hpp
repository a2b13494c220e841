#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace liecoh {

/// Basis of ∧^k of an n-dimensional space (n <= 24): k-subsets of {0..n-1}
/// stored as bitmasks in lexicographic order of their sorted elements.
class WedgeBasis {
 public:
  WedgeBasis(std::size_t n, std::size_t k);

  std::size_t n() const { return n_; }
  std::size_t degree() const { return k_; }
  std::size_t size() const { return masks_.size(); }
  std::uint32_t mask(std::size_t index) const { return masks_[index]; }
  const std::vector<std::uint32_t>& masks() const { return masks_; }
  /// Position of mask in this basis; the mask must have exactly k bits.
  std::size_t index(std::uint32_t mask) const { return static_cast<std::size_t>(lookup_[mask]); }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::int32_t> lookup_;
};

/// Elements of mask in increasing order.
std::vector<std::size_t> elements(std::uint32_t mask);

/// Sign of moving e_i to its sorted position in e_i ∧ (wedge of mask), i.e.
/// (-1)^(number of elements of mask below i).
inline int insertion_sign(std::uint32_t mask, std::size_t i) {
  return (std::popcount(mask & ((std::uint32_t{1} << i) - 1)) & 1) ? -1 : 1;
}

}  // namespace liecoh
