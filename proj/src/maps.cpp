#include "antitop/maps.hpp"

#include "antitop/core.hpp"
#include "antitop/error.hpp"

namespace antitop {

FiniteMap::FiniteMap(Universe domain, Universe codomain, std::vector<std::size_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_.size()) {
    throw InvalidArgument("map assigns " + std::to_string(images_.size()) + " images to " +
                          std::to_string(domain_.size()) + " domain points");
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] >= codomain_.size()) {
      throw InvalidArgument("image of '" + domain_.label(i) + "' is outside the codomain");
    }
  }
}

FiniteMap FiniteMap::identity(const Universe& universe) {
  std::vector<std::size_t> images(universe.size());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = i;
  return FiniteMap(universe, universe, std::move(images));
}

SubsetMask FiniteMap::preimage(SubsetMask target) const {
  codomain_.check(target, "preimage target");
  SubsetMask out = domain_.empty_set();
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (target.contains(images_[i])) out = out.with(i);
  }
  return out;
}

SubsetMask FiniteMap::image(SubsetMask source) const {
  domain_.check(source, "image source");
  SubsetMask out = codomain_.empty_set();
  for (std::size_t i : source.indices()) out = out.with(images_[i]);
  return out;
}

namespace {

void check_spaces(const FiniteMap& map, const SetFamily& domain_family,
                  const SetFamily& codomain_family) {
  if (!(domain_family.universe() == map.domain())) {
    throw UniverseMismatch("domain family is not over the map's domain");
  }
  if (!(codomain_family.universe() == map.codomain())) {
    throw UniverseMismatch("codomain family is not over the map's codomain");
  }
  if (!is_anti_topology(domain_family)) throw NotAntiTopology("domain family is not an anti-topology");
  if (!is_anti_topology(codomain_family)) {
    throw NotAntiTopology("codomain family is not an anti-topology");
  }
}

}  // namespace

ContinuityReport is_anti_continuous(const FiniteMap& map, const SetFamily& domain_family,
                                    const SetFamily& codomain_family) {
  check_spaces(map, domain_family, codomain_family);
  for (auto member : codomain_family.members()) {
    if (!domain_family.contains(map.preimage(member))) return {false, member};
  }
  return {true, std::nullopt};
}

PointContinuityReport is_point_anti_continuous(const FiniteMap& map,
                                               const SetFamily& domain_family,
                                               const SetFamily& codomain_family) {
  check_spaces(map, domain_family, codomain_family);
  for (std::size_t x = 0; x < map.domain().size(); ++x) {
    for (auto v : codomain_family.members()) {
      if (!v.contains(map(x))) continue;
      bool found = false;
      for (auto u : domain_family.members()) {
        if (u.contains(x) && map.image(u).is_subset_of(v)) {
          found = true;
          break;
        }
      }
      if (!found) return {false, x, v};
    }
  }
  return {true, std::nullopt, std::nullopt};
}

}  // namespace antitop
