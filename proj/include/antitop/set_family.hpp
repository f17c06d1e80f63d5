#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "antitop/universe.hpp"

namespace antitop {

/// A deduplicated collection of subsets of one universe, kept in canonical
/// form: members sorted by ascending bit value, no duplicates.
class SetFamily {
 public:
  /// Validates every member against `universe`, then sorts and deduplicates.
  /// Throws UniverseMismatch for a member of the wrong width.
  SetFamily(Universe universe, std::vector<SubsetMask> members);

  /// Convenience for literal fixtures: each inner list holds point labels.
  static SetFamily from_labels(Universe universe,
                               const std::vector<std::vector<std::string>>& members);

  const Universe& universe() const noexcept { return universe_; }
  std::span<const SubsetMask> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  /// Number of duplicate members dropped during construction.
  std::size_t duplicates_collapsed() const noexcept { return duplicates_; }

  bool contains(SubsetMask mask) const noexcept;

  /// Canonical order between families over the same universe: member count,
  /// then lexicographic over the member sequence.
  friend std::strong_ordering canonical_compare(const SetFamily& a, const SetFamily& b);

  /// Equal universes and equal members.
  friend bool operator==(const SetFamily& a, const SetFamily& b) {
    return a.members_ == b.members_ && a.universe_ == b.universe_;
  }

 private:
  Universe universe_;
  std::vector<SubsetMask> members_;
  std::size_t duplicates_ = 0;
};

/// "{{1,2},{2,3}}" style rendering.
std::string to_string(const SetFamily& family);

}  // namespace antitop
