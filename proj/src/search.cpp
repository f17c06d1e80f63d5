#include "antitop/search.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "antitop/core.hpp"
#include "antitop/error.hpp"

namespace antitop {

namespace {

using RawFamily = std::vector<std::uint64_t>;

void check_enumerable(std::size_t n) {
  if (n < 2 || n > kMaxEnumerationPoints) {
    throw InvalidArgument("enumeration supports universes of 2.." +
                          std::to_string(kMaxEnumerationPoints) + " points, got " +
                          std::to_string(n));
  }
}

bool raw_less(const RawFamily& a, const RawFamily& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<SetFamily> to_families(std::size_t n, std::vector<RawFamily> raw) {
  std::sort(raw.begin(), raw.end(), raw_less);
  const Universe universe = Universe::lettered(n);
  std::vector<SetFamily> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    std::vector<SubsetMask> members;
    members.reserve(r.size());
    for (auto bits : r) members.emplace_back(bits, n);
    out.emplace_back(universe, std::move(members));
  }
  return out;
}

// Extends `family` (members ascending) with candidates above `start`. A new
// candidate C exceeds every member numerically, so it can be neither a
// subset of a member nor the meet of two members; only meets A & C need
// checking against the family.
void extend(const std::vector<std::uint64_t>& candidates, std::size_t start, RawFamily& family,
            std::vector<char>& present, std::vector<RawFamily>& out) {
  out.push_back(family);
  for (std::size_t i = start; i < candidates.size(); ++i) {
    const std::uint64_t c = candidates[i];
    bool ok = true;
    for (auto a : family) {
      if (present[a & c]) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    family.push_back(c);
    present[c] = 1;
    extend(candidates, i + 1, family, present, out);
    present[c] = 0;
    family.pop_back();
  }
}

}  // namespace

std::vector<SetFamily> enumerate_pruned(std::size_t n) {
  check_enumerable(n);
  const std::uint64_t full = SubsetMask::full_bits(n);
  std::vector<std::uint64_t> candidates;
  for (std::uint64_t c = 1; c < full; ++c) candidates.push_back(c);

  const auto roots = static_cast<std::ptrdiff_t>(candidates.size());
  std::vector<std::vector<RawFamily>> by_root(candidates.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t r = 0; r < roots; ++r) {
    const auto root = static_cast<std::size_t>(r);
    std::vector<char> present(full + 1, 0);
    RawFamily family{candidates[root]};
    present[candidates[root]] = 1;
    extend(candidates, root + 1, family, present, by_root[root]);
  }

  std::vector<RawFamily> raw;
  for (auto& part : by_root) {
    for (auto& f : part) raw.push_back(std::move(f));
  }
  return to_families(n, std::move(raw));
}

std::vector<SetFamily> enumerate_by_filtering(std::size_t n) {
  check_enumerable(n);
  const std::size_t pool = (std::size_t{1} << n) - 2;
  const Universe universe = Universe::lettered(n);
  std::vector<RawFamily> raw;
  for (std::uint64_t choice = 1; choice < (std::uint64_t{1} << pool); ++choice) {
    std::vector<SubsetMask> members;
    for (std::size_t j = 0; j < pool; ++j) {
      if ((choice >> j) & 1U) members.emplace_back(j + 1, n);
    }
    SetFamily family(universe, std::move(members));
    if (is_anti_topology(family)) {
      RawFamily r;
      for (auto m : family.members()) r.push_back(m.bits());
      raw.push_back(std::move(r));
    }
  }
  return to_families(n, std::move(raw));
}

std::vector<SetFamily> sample_anti_topologies(std::size_t n, std::size_t count,
                                              std::uint64_t seed) {
  if (n < 2 || n > 16) throw InvalidArgument("sampling supports universes of 2..16 points");
  std::mt19937_64 rng(seed);
  const std::uint64_t full = SubsetMask::full_bits(n);
  std::uniform_int_distribution<std::uint64_t> pick(1, full - 1);
  const Universe universe = Universe::lettered(n);
  const std::size_t attempts = 4 * n;

  std::vector<SetFamily> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) {
    std::vector<SubsetMask> members;
    std::unordered_set<std::uint64_t> present;
    for (std::size_t t = 0; t < attempts; ++t) {
      const SubsetMask c(pick(rng), n);
      if (present.contains(c.bits())) continue;
      bool ok = true;
      for (std::size_t i = 0; i < members.size() && ok; ++i) {
        const auto meet = (members[i] & c).bits();
        // The meet must avoid the grown family; meets of old pairs must not
        // equal the candidate.
        ok = !present.contains(meet) && meet != c.bits();
        for (std::size_t j = i + 1; j < members.size() && ok; ++j) {
          ok = (members[i] & members[j]) != c;
        }
      }
      if (!ok) continue;
      members.push_back(c);
      present.insert(c.bits());
    }
    out.emplace_back(universe, std::move(members));
  }
  return out;
}

EnumerationStream::EnumerationStream(std::size_t n, bool include_degenerate)
    : n_(n), include_degenerate_(include_degenerate) {
  auto families = enumerate_pruned(n);
  if (include_degenerate) families_.emplace_back(Universe::lettered(n), std::vector<SubsetMask>{});
  for (auto& f : families) families_.push_back(std::move(f));
}

std::optional<SetFamily> EnumerationStream::next() {
  if (cursor_ >= families_.size()) return std::nullopt;
  return families_[cursor_++];
}

EnumerationStream enumerate_anti_topologies(std::size_t n, bool include_degenerate) {
  return EnumerationStream(n, include_degenerate);
}

AntiTopologyCounts count_anti_topologies(std::size_t n) {
  check_enumerable(n);
  const auto non_degenerate = static_cast<std::uint64_t>(enumerate_pruned(n).size());
  return {non_degenerate, non_degenerate + 1};
}

namespace {

void check_bounds(std::size_t min_n, std::size_t max_n, std::size_t limit) {
  if (min_n < 2 || min_n > max_n) {
    throw InvalidArgument("witness bounds need 2 <= min_n <= max_n");
  }
  if (max_n > limit) {
    throw CapacityError("witness search supports universes of at most " + std::to_string(limit) +
                        " points, got " + std::to_string(max_n));
  }
}

}  // namespace

SearchResult<SpaceWitness> find_witness(const SpaceBounds& bounds,
                                        const SpacePredicate& predicate) {
  check_bounds(bounds.min_n, bounds.max_n, kMaxEnumerationPoints);
  if (bounds.subset_arity > 3) throw CapacityError("subset arity is limited to 3");

  std::uint64_t cases = 0;
  for (std::size_t n = bounds.min_n; n <= bounds.max_n; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::uint64_t tuples = 1;
    for (std::size_t k = 0; k < bounds.subset_arity; ++k) tuples *= subsets;

    for (const auto& space : enumerate_anti_topologies(n, bounds.include_degenerate)) {
      std::vector<SubsetMask> tuple(bounds.subset_arity, SubsetMask::empty(n));
      for (std::uint64_t t = 0; t < tuples; ++t) {
        // Mixed-radix decode with the first subset most significant.
        std::uint64_t rest = t;
        for (std::size_t k = bounds.subset_arity; k-- > 0;) {
          tuple[k] = SubsetMask(rest % subsets, n);
          rest /= subsets;
        }
        ++cases;
        if (predicate(space, tuple)) return SpaceWitness{space, tuple};
      }
    }
  }
  return Exhausted{bounds.min_n, bounds.max_n, cases};
}

SearchResult<MapWitness> find_witness(const MapBounds& bounds, const MapPredicate& predicate) {
  check_bounds(bounds.min_n, bounds.max_n, 3);

  std::uint64_t cases = 0;
  for (std::size_t dn = bounds.min_n; dn <= bounds.max_n; ++dn) {
    const auto domains = enumerate_anti_topologies(dn, bounds.include_degenerate);
    for (std::size_t cn = bounds.min_n; cn <= bounds.max_n; ++cn) {
      const auto codomains = enumerate_anti_topologies(cn, bounds.include_degenerate);
      std::uint64_t maps = 1;
      for (std::size_t i = 0; i < dn; ++i) maps *= cn;

      for (const auto& t : domains) {
        for (const auto& s : codomains) {
          std::vector<std::size_t> images(dn);
          for (std::uint64_t code = 0; code < maps; ++code) {
            std::uint64_t rest = code;
            for (std::size_t i = dn; i-- > 0;) {
              images[i] = static_cast<std::size_t>(rest % cn);
              rest /= cn;
            }
            FiniteMap map(t.universe(), s.universe(), images);
            ++cases;
            if (predicate(map, t, s)) return MapWitness{t, s, std::move(map)};
          }
        }
      }
    }
  }
  return Exhausted{bounds.min_n, bounds.max_n, cases};
}

}  // namespace antitop
