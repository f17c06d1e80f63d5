#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "antitop/set_family.hpp"

namespace antitop {

/// Which part of the anti-topology definition a family breaks.
enum class Violation {
  kUniverseTooSmall,
  kContainsEmpty,
  kContainsFull,
  kIntersectionMember,
};

std::string to_string(Violation violation);

struct AntiTopologyReport {
  bool ok = false;
  /// The empty family satisfies the axioms vacuously; it is accepted but
  /// flagged here.
  bool degenerate = false;
  std::optional<Violation> violation;
  /// For kIntersectionMember: the two distinct members whose intersection
  /// is itself a member.
  std::optional<std::pair<SubsetMask, SubsetMask>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Production verifier. Checking pairwise intersections of distinct members
/// suffices: a family that is anti-closed under binary intersections is
/// anti-closed under arbitrary intersections and unions.
AntiTopologyReport is_anti_topology(const SetFamily& family);

/// Brute-force check of every subfamily of 2..max_subfamily distinct members
/// (capped at the family size) for both intersections and unions. Kept as an
/// independent oracle for is_anti_topology. Throws InvalidArgument when
/// max_subfamily < 2.
bool is_anti_topology_oracle(const SetFamily& family, std::size_t max_subfamily);

/// Complements of all members.
SetFamily closed_family(const SetFamily& family);

inline constexpr std::size_t kAssociatedTopologyMaxPoints = 24;

/// Smallest family containing the members, the empty set and the universe,
/// closed under intersections and unions. Throws CapacityError for universes
/// above kAssociatedTopologyMaxPoints.
SetFamily associated_topology(const SetFamily& family);

/// Which classical generalizations of a topology a family satisfies. Every
/// family is a generalized weak structure, so that flag is implicit.
struct StructureClass {
  bool is_anti_topology = false;
  bool is_topology = false;
  bool is_supra = false;
  bool is_infra = false;
  bool is_minimal_structure = false;
  bool is_weak_structure = false;
};

StructureClass classify_structure(const SetFamily& family);

// Example families. Each throws InvalidArgument when its parameters would
// not give an anti-topology.

/// All k-element subsets of an n-point universe; requires 0 < k < n.
SetFamily k_uniform(const Universe& universe, std::size_t k);
/// Every singleton; requires n >= 2.
SetFamily singletons(const Universe& universe);
/// {{x0,x1},{x1,x2},...}; requires n >= 3.
SetFamily pair_chain(const Universe& universe);
/// {A, X\A}; requires A to be neither empty nor the universe.
SetFamily split(const Universe& universe, SubsetMask part);

struct KUniform { std::size_t n; std::size_t k; };
struct Singletons { std::size_t n; };
struct PairChain { std::size_t n; };
struct Split { Universe universe; SubsetMask part; };
/// Literal fixtures 1..3 from the standard example list: the four-point
/// chain {{1,2},{2,3},{3,4}}, the two singletons on {1,2}, and
/// {{a,b},{c,d},{e}} on {a..e}.
struct Fixture { int number; };

using ExampleSpec = std::variant<KUniform, Singletons, PairChain, Split, Fixture>;

/// Generated universes use lettered labels.
SetFamily make_example(const ExampleSpec& spec);

}  // namespace antitop
