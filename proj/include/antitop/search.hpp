#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "antitop/maps.hpp"
#include "antitop/set_family.hpp"

namespace antitop {

/// Largest universe for full enumeration.
inline constexpr std::size_t kMaxEnumerationPoints = 4;

/// Walks every anti-topology on an n-point lettered universe exactly once in
/// canonical order (member count, then lexicographic member sequence). The
/// degenerate empty family, when included, comes first.
class EnumerationStream {
 public:
  /// Throws InvalidArgument unless 2 <= n <= kMaxEnumerationPoints.
  EnumerationStream(std::size_t n, bool include_degenerate);

  std::size_t universe_size() const noexcept { return n_; }
  bool include_degenerate() const noexcept { return include_degenerate_; }

  /// Next family, or nullopt once exhausted.
  std::optional<SetFamily> next();
  void rewind() noexcept { cursor_ = 0; }

  std::size_t size() const noexcept { return families_.size(); }
  auto begin() const { return families_.begin(); }
  auto end() const { return families_.end(); }

 private:
  std::size_t n_;
  bool include_degenerate_;
  std::vector<SetFamily> families_;
  std::size_t cursor_ = 0;
};

EnumerationStream enumerate_anti_topologies(std::size_t n, bool include_degenerate = false);

struct AntiTopologyCounts {
  std::uint64_t non_degenerate = 0;
  std::uint64_t total = 0;
};

/// Throws InvalidArgument for n outside [2, kMaxEnumerationPoints]; n = 1
/// admits no anti-topology at all.
AntiTopologyCounts count_anti_topologies(std::size_t n);

// Enumeration kernels. Both return the non-degenerate anti-topologies on the
// lettered n-point universe in canonical order.

/// Backtracking over candidate subsets in ascending order with pairwise
/// intersection pruning; OpenMP-parallel over the choice of least member.
std::vector<SetFamily> enumerate_pruned(std::size_t n);

/// Serial reference: filters the whole power set of proper nonempty subsets
/// through is_anti_topology.
std::vector<SetFamily> enumerate_by_filtering(std::size_t n);

/// Random anti-topologies for smoke checks on universes too large to
/// enumerate (2 <= n <= 16). Each sample is built greedily from a shuffled
/// candidate order; samples may repeat.
std::vector<SetFamily> sample_anti_topologies(std::size_t n, std::size_t count,
                                              std::uint64_t seed);

// ---------------------------------------------------------------------------
// Witness search

struct SpaceBounds {
  std::size_t min_n = 2;
  std::size_t max_n = 4;
  /// Number of subsets handed to the predicate (0..3), each ranging over
  /// all subsets of the universe.
  std::size_t subset_arity = 0;
  bool include_degenerate = false;
};

struct SpaceWitness {
  SetFamily space;
  std::vector<SubsetMask> subsets;
};

struct MapBounds {
  std::size_t min_n = 2;
  /// Upper bound on both domain and codomain sizes.
  std::size_t max_n = 3;
  bool include_degenerate = false;
};

struct MapWitness {
  SetFamily domain_space;
  SetFamily codomain_space;
  FiniteMap map;
};

/// Proof by exhaustion: the bounds searched and how many cases were tried.
struct Exhausted {
  std::size_t min_n = 0;
  std::size_t max_n = 0;
  std::uint64_t cases = 0;
};

template <typename W>
using SearchResult = std::variant<W, Exhausted>;

using SpacePredicate = std::function<bool(const SetFamily&, std::span<const SubsetMask>)>;
using MapPredicate =
    std::function<bool(const FiniteMap&, const SetFamily& domain, const SetFamily& codomain)>;

/// First (space, subsets) satisfying the predicate in canonical order:
/// universe size, then enumeration order, then subset tuples in
/// lexicographic order of bit values. Throws CapacityError on bounds beyond
/// the enumeration limits.
SearchResult<SpaceWitness> find_witness(const SpaceBounds& bounds, const SpacePredicate& predicate);

/// First (domain space, codomain space, map) satisfying the predicate:
/// domain size, codomain size, domain space, codomain space, then maps in
/// lexicographic order of their image vectors.
SearchResult<MapWitness> find_witness(const MapBounds& bounds, const MapPredicate& predicate);

}  // namespace antitop
