#pragma once

#include <cstddef>
#include <vector>

namespace clustnet {

/// Fixed-capacity binary sum tree over non-negative slot rates.
///
/// Each internal node is recomputed from its two children on update, so the root is
/// always the tree-ordered sum of the leaves and no drift accumulates across updates.
/// Both set() and select() are O(log slots).
class RateCache {
 public:
  explicit RateCache(std::size_t slots);

  std::size_t slot_count() const { return slots_; }
  double rate(std::size_t slot) const { return tree_[leaves_ + slot]; }
  double total() const { return tree_[1]; }

  void set(std::size_t slot, double rate);

  /// Writes all leaves without propagating, then rebuild() must be called.
  void assign_unpropagated(std::size_t slot, double rate) { tree_[leaves_ + slot] = rate; }

  /// Recomputes every internal node from the leaves.
  void rebuild();

  /// Slot s such that the prefix sum before s is <= target < prefix sum through s.
  /// target is clamped into [0, total). The returned slot may carry rate 0 only through
  /// rounding at a boundary; callers re-draw in that case.
  std::size_t select(double target) const;

 private:
  std::size_t slots_;
  std::size_t leaves_;
  std::vector<double> tree_;
};

}  // namespace clustnet
