#include "antitop/operators.hpp"

namespace antitop {

SubsetMask interior(const SetFamily& family, SubsetMask subset) {
  family.universe().check(subset);
  SubsetMask out = family.universe().empty_set();
  for (auto m : family.members()) {
    if (m.is_subset_of(subset)) out = out | m;
  }
  return out;
}

SubsetMask closure(const SetFamily& family, SubsetMask subset) {
  family.universe().check(subset);
  SubsetMask out = family.universe().full_set();
  for (auto m : family.members()) {
    SubsetMask closed = m.complement();
    if (subset.is_subset_of(closed)) out = out & closed;
  }
  return out;
}

SubsetClassification classify_subset(const SetFamily& family, SubsetMask subset) {
  SubsetClassification out;
  out.interior = interior(family, subset);
  out.closure = closure(family, subset);
  out.anti_open = family.contains(subset);
  out.anti_closed = family.contains(subset.complement());
  out.pseudo_anti_open = out.interior == subset;
  out.anti_genuine = family.contains(out.interior);
  out.semi_open = subset.is_subset_of(closure(family, out.interior));
  return out;
}

}  // namespace antitop
