#include "antitop/props.hpp"

#include "antitop/core.hpp"
#include "antitop/error.hpp"
#include "antitop/operators.hpp"

namespace antitop {

DoorReport is_door_space(const SetFamily& family) {
  if (auto report = is_anti_topology(family); !report) {
    throw NotAntiTopology("door spaces are defined for anti-topologies only: " +
                          to_string(*report.violation));
  }
  const std::size_t n = family.universe().size();
  if (n > 24) throw CapacityError("door check supports at most 24 points");
  const SetFamily closed = closed_family(family);
  const std::uint64_t full = SubsetMask::full_bits(n);
  for (std::uint64_t bits = 1; bits < full; ++bits) {
    SubsetMask candidate(bits, n);
    if (!family.contains(candidate) && !closed.contains(candidate)) {
      return DoorReport{false, candidate};
    }
  }
  return DoorReport{true, std::nullopt};
}

DensityReport is_anti_dense(const SetFamily& family, SubsetMask subset) {
  DensityReport report;
  report.by_closure = closure(family, subset).is_full();
  report.by_meets_all = true;
  for (auto m : family.members()) {
    if (!m.intersects(subset)) {
      report.by_meets_all = false;
      break;
    }
  }
  report.by_empty_exterior = interior(family, subset.complement()).is_empty();
  report.is_dense = report.by_closure;
  if (!report.is_dense) {
    const SetFamily closed_sets = closed_family(family);
    for (auto closed : closed_sets.members()) {
      if (subset.is_subset_of(closed)) {
        report.blocking_witness = closed.complement();
        break;
      }
    }
  }
  return report;
}

bool is_anti_nowhere_dense(const SetFamily& family, SubsetMask subset) {
  return interior(family, closure(family, subset)).is_empty();
}

}  // namespace antitop
