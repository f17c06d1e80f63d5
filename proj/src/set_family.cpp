#include "antitop/set_family.hpp"

#include <algorithm>

namespace antitop {

SetFamily::SetFamily(Universe universe, std::vector<SubsetMask> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (auto m : members_) universe_.check(m, "family member");
  std::sort(members_.begin(), members_.end());
  auto tail = std::unique(members_.begin(), members_.end());
  duplicates_ = static_cast<std::size_t>(members_.end() - tail);
  members_.erase(tail, members_.end());
}

SetFamily SetFamily::from_labels(Universe universe,
                                 const std::vector<std::vector<std::string>>& members) {
  std::vector<SubsetMask> masks;
  masks.reserve(members.size());
  for (const auto& m : members) masks.push_back(universe.subset(m));
  return SetFamily(std::move(universe), std::move(masks));
}

bool SetFamily::contains(SubsetMask mask) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), mask);
}

std::strong_ordering canonical_compare(const SetFamily& a, const SetFamily& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

std::string to_string(const SetFamily& family) {
  std::string out = "{";
  bool first = true;
  for (auto m : family.members()) {
    if (!first) out += ',';
    out += to_string(family.universe(), m);
    first = false;
  }
  return out + "}";
}

}  // namespace antitop
