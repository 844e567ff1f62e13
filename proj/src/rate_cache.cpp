#include "clustnet/rate_cache.hpp"

#include <bit>
#include <stdexcept>

namespace clustnet {

RateCache::RateCache(std::size_t slots)
    : slots_(slots), leaves_(std::bit_ceil(slots < 1 ? std::size_t{1} : slots)), tree_(2 * leaves_, 0.0) {
  if (slots == 0) throw std::invalid_argument("rate cache needs at least one slot");
}

void RateCache::set(std::size_t slot, double rate) {
  std::size_t k = leaves_ + slot;
  tree_[k] = rate;
  for (k >>= 1; k >= 1; k >>= 1) tree_[k] = tree_[2 * k] + tree_[2 * k + 1];
}

void RateCache::rebuild() {
  for (std::size_t k = leaves_ - 1; k >= 1; --k) tree_[k] = tree_[2 * k] + tree_[2 * k + 1];
}

std::size_t RateCache::select(double target) const {
  if (target < 0.0) target = 0.0;
  std::size_t k = 1;
  while (k < leaves_) {
    const double left = tree_[2 * k];
    if (target < left) {
      k = 2 * k;
    } else {
      target -= left;
      k = 2 * k + 1;
    }
  }
  std::size_t slot = k - leaves_;
  // Rounding can walk past the last occupied slot; step back to a live one.
  if (slot >= slots_) slot = slots_ - 1;
  return slot;
}

}  // namespace clustnet
