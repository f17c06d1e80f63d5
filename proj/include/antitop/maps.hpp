#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "antitop/set_family.hpp"

namespace antitop {

/// A total function between two finite universes.
class FiniteMap {
 public:
  /// `images[i]` is the codomain index of domain point i. Throws
  /// InvalidArgument unless there is exactly one in-range image per point.
  FiniteMap(Universe domain, Universe codomain, std::vector<std::size_t> images);

  /// Identity on a universe.
  static FiniteMap identity(const Universe& universe);

  const Universe& domain() const noexcept { return domain_; }
  const Universe& codomain() const noexcept { return codomain_; }
  std::size_t operator()(std::size_t point) const { return images_.at(point); }
  const std::vector<std::size_t>& images() const noexcept { return images_; }

  /// Points of the domain mapped into `target`.
  SubsetMask preimage(SubsetMask target) const;
  /// Images of the points of `source`.
  SubsetMask image(SubsetMask source) const;

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  Universe domain_;
  Universe codomain_;
  std::vector<std::size_t> images_;
};

struct ContinuityReport {
  bool continuous = false;
  /// Member of the codomain family whose preimage is not anti-open.
  std::optional<SubsetMask> witness;

  explicit operator bool() const noexcept { return continuous; }
};

struct PointContinuityReport {
  bool continuous = false;
  /// Failing (domain point, codomain member) pair.
  std::optional<std::size_t> point;
  std::optional<SubsetMask> neighbourhood;

  explicit operator bool() const noexcept { return continuous; }
};

// Both checks throw UniverseMismatch when the families do not live on the
// map's universes and NotAntiTopology when either family is not one.

/// Preimage of every codomain member is a domain member.
ContinuityReport is_anti_continuous(const FiniteMap& map, const SetFamily& domain_family,
                                    const SetFamily& codomain_family);

/// For every point x and codomain member V containing map(x), some domain
/// member U contains x with map(U) inside V.
PointContinuityReport is_point_anti_continuous(const FiniteMap& map,
                                               const SetFamily& domain_family,
                                               const SetFamily& codomain_family);

}  // namespace antitop
