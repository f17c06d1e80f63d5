#include "antitop/core.hpp"

#include <unordered_set>

#include "antitop/error.hpp"

namespace antitop {

std::string to_string(Violation violation) {
  switch (violation) {
    case Violation::kUniverseTooSmall: return "universe has fewer than two points";
    case Violation::kContainsEmpty: return "family contains the empty set";
    case Violation::kContainsFull: return "family contains the whole universe";
    case Violation::kIntersectionMember: return "intersection of two distinct members is a member";
  }
  return "unknown violation";
}

AntiTopologyReport is_anti_topology(const SetFamily& family) {
  AntiTopologyReport report;
  const Universe& universe = family.universe();
  if (universe.size() < 2) {
    report.violation = Violation::kUniverseTooSmall;
    return report;
  }
  if (family.contains(universe.empty_set())) {
    report.violation = Violation::kContainsEmpty;
    return report;
  }
  if (family.contains(universe.full_set())) {
    report.violation = Violation::kContainsFull;
    return report;
  }
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (family.contains(members[i] & members[j])) {
        report.violation = Violation::kIntersectionMember;
        report.witness = std::pair{members[i], members[j]};
        return report;
      }
    }
  }
  report.ok = true;
  report.degenerate = family.empty();
  return report;
}

namespace {

// Visits every k-combination of [0, n) in lexicographic order; stops early
// when `visit` returns false.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!visit(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool is_anti_topology_oracle(const SetFamily& family, std::size_t max_subfamily) {
  if (max_subfamily < 2) throw InvalidArgument("max_subfamily must be at least 2");
  const Universe& universe = family.universe();
  if (universe.size() < 2) return false;
  if (family.contains(universe.empty_set()) || family.contains(universe.full_set())) return false;

  auto members = family.members();
  const std::size_t limit = std::min(max_subfamily, members.size());
  for (std::size_t k = 2; k <= limit; ++k) {
    bool ok = for_each_combination(members.size(), k, [&](const std::vector<std::size_t>& idx) {
      SubsetMask meet = universe.full_set();
      SubsetMask join = universe.empty_set();
      for (std::size_t i : idx) {
        meet = meet & members[i];
        join = join | members[i];
      }
      return !family.contains(meet) && !family.contains(join);
    });
    if (!ok) return false;
  }
  return true;
}

SetFamily closed_family(const SetFamily& family) {
  std::vector<SubsetMask> complements;
  complements.reserve(family.size());
  for (auto m : family.members()) complements.push_back(m.complement());
  return SetFamily(family.universe(), std::move(complements));
}

SetFamily associated_topology(const SetFamily& family) {
  const Universe& universe = family.universe();
  if (universe.size() > kAssociatedTopologyMaxPoints) {
    throw CapacityError("associated topology supports at most " +
                        std::to_string(kAssociatedTopologyMaxPoints) + " points, got " +
                        std::to_string(universe.size()));
  }
  std::vector<SubsetMask> items;
  std::unordered_set<std::uint64_t> seen;
  auto add = [&](SubsetMask m) {
    if (seen.insert(m.bits()).second) items.push_back(m);
  };
  add(universe.empty_set());
  add(universe.full_set());
  for (auto m : family.members()) add(m);
  // Every pair (i, j) is combined once; later additions are paired with all
  // earlier items when the outer loop reaches them.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      add(items[i] & items[j]);
      add(items[i] | items[j]);
    }
  }
  return SetFamily(universe, std::move(items));
}

StructureClass classify_structure(const SetFamily& family) {
  StructureClass out;
  const Universe& universe = family.universe();
  out.is_anti_topology = is_anti_topology(family).ok;
  out.is_weak_structure = family.contains(universe.empty_set());
  out.is_minimal_structure = out.is_weak_structure && family.contains(universe.full_set());

  bool meets = true;
  bool joins = true;
  auto members = family.members();
  for (std::size_t i = 0; i < members.size() && (meets || joins); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      meets = meets && family.contains(members[i] & members[j]);
      joins = joins && family.contains(members[i] | members[j]);
    }
  }
  out.is_infra = out.is_minimal_structure && meets;
  out.is_supra = out.is_minimal_structure && joins;
  out.is_topology = out.is_infra && out.is_supra;
  return out;
}

SetFamily k_uniform(const Universe& universe, std::size_t k) {
  const std::size_t n = universe.size();
  if (k == 0 || k >= n) {
    throw InvalidArgument("k_uniform needs 0 < k < n (n=" + std::to_string(n) +
                          ", k=" + std::to_string(k) + ")");
  }
  if (n > 24) throw CapacityError("k_uniform supports at most 24 points");
  std::vector<SubsetMask> members;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    if (static_cast<std::size_t>(std::popcount(bits)) == k) members.emplace_back(bits, n);
  }
  return SetFamily(universe, std::move(members));
}

SetFamily singletons(const Universe& universe) {
  if (universe.size() < 2) throw InvalidArgument("singletons needs at least two points");
  std::vector<SubsetMask> members;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    members.push_back(SubsetMask::singleton(i, universe.size()));
  }
  return SetFamily(universe, std::move(members));
}

SetFamily pair_chain(const Universe& universe) {
  const std::size_t n = universe.size();
  if (n < 3) throw InvalidArgument("pair_chain needs at least three points");
  std::vector<SubsetMask> members;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    members.push_back(SubsetMask::singleton(i, n).with(i + 1));
  }
  return SetFamily(universe, std::move(members));
}

SetFamily split(const Universe& universe, SubsetMask part) {
  universe.check(part, "split part");
  if (part.is_empty() || part.is_full()) {
    throw InvalidArgument("split part must be neither empty nor the whole universe");
  }
  return SetFamily(universe, {part, part.complement()});
}

namespace {

SetFamily fixture(int number) {
  switch (number) {
    case 1:
      return SetFamily::from_labels(Universe::numbered(4), {{"1", "2"}, {"2", "3"}, {"3", "4"}});
    case 2:
      return SetFamily::from_labels(Universe::numbered(2), {{"1"}, {"2"}});
    case 3:
      return SetFamily::from_labels(Universe::lettered(5), {{"a", "b"}, {"c", "d"}, {"e"}});
    default:
      throw InvalidArgument("no fixture number " + std::to_string(number) + " (expected 1..3)");
  }
}

}  // namespace

SetFamily make_example(const ExampleSpec& spec) {
  struct Visitor {
    SetFamily operator()(const KUniform& s) const {
      return k_uniform(Universe::lettered(s.n), s.k);
    }
    SetFamily operator()(const Singletons& s) const {
      if (s.n == 0) throw InvalidArgument("singletons needs at least two points");
      return singletons(Universe::lettered(s.n));
    }
    SetFamily operator()(const PairChain& s) const {
      if (s.n == 0) throw InvalidArgument("pair_chain needs at least three points");
      return pair_chain(Universe::lettered(s.n));
    }
    SetFamily operator()(const Split& s) const { return split(s.universe, s.part); }
    SetFamily operator()(const Fixture& s) const { return fixture(s.number); }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace antitop
