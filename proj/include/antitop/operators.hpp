#pragma once

#include "antitop/set_family.hpp"

namespace antitop {

// Both operators accept any family of subsets, not only anti-topologies.
// They throw UniverseMismatch when `subset` has the wrong width.

/// Union of the members contained in `subset` (empty union is the empty set).
SubsetMask interior(const SetFamily& family, SubsetMask subset);

/// Intersection of the complements of members that contain `subset`
/// (empty intersection is the whole universe).
SubsetMask closure(const SetFamily& family, SubsetMask subset);

struct SubsetClassification {
  bool anti_open = false;
  bool anti_closed = false;
  /// interior == subset
  bool pseudo_anti_open = false;
  /// interior is a member
  bool anti_genuine = false;
  /// subset is contained in closure(interior(subset))
  bool semi_open = false;
  SubsetMask interior;
  SubsetMask closure;
};

SubsetClassification classify_subset(const SetFamily& family, SubsetMask subset);

}  // namespace antitop
