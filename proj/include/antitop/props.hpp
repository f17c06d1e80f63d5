#pragma once

#include <optional>

#include "antitop/set_family.hpp"

namespace antitop {

struct DoorReport {
  bool is_door = false;
  /// Least proper nonempty subset that is neither anti-open nor anti-closed.
  std::optional<SubsetMask> counterexample;

  explicit operator bool() const noexcept { return is_door; }
};

/// Every subset other than the empty set and the universe is anti-open or
/// anti-closed. Throws NotAntiTopology for other families.
DoorReport is_door_space(const SetFamily& family);

/// Three characterizations of anti-density, computed independently. For an
/// anti-topology they always agree.
struct DensityReport {
  bool is_dense = false;
  /// closure(A) is the universe
  bool by_closure = false;
  /// A meets every member
  bool by_meets_all = false;
  /// interior of the complement of A is empty
  bool by_empty_exterior = false;
  /// When not dense: complement of the first anti-closed superset of A in
  /// canonical order, i.e. an anti-open set disjoint from A.
  std::optional<SubsetMask> blocking_witness;

  explicit operator bool() const noexcept { return is_dense; }
};

DensityReport is_anti_dense(const SetFamily& family, SubsetMask subset);

/// interior(closure(A)) is empty.
bool is_anti_nowhere_dense(const SetFamily& family, SubsetMask subset);

}  // namespace antitop
