#include "antitop/universe.hpp"

#include <unordered_set>

#include "antitop/error.hpp"

namespace antitop {

std::vector<std::size_t> SubsetMask::indices() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

Universe::Universe(std::vector<std::string> labels) {
  if (labels.empty()) throw InvalidArgument("universe must have at least one point");
  if (labels.size() > kMaxPoints) {
    throw InvalidArgument("universe has " + std::to_string(labels.size()) +
                          " points; at most " + std::to_string(kMaxPoints) + " supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw InvalidArgument("empty point label");
    if (!seen.insert(label).second) throw InvalidArgument("duplicate point label '" + label + "'");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Universe Universe::numbered(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return Universe(std::move(labels));
}

Universe Universe::lettered(std::size_t n) {
  if (n > 26) return numbered(n);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

std::optional<std::size_t> Universe::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

SubsetMask Universe::subset(const std::vector<std::string>& labels) const {
  SubsetMask mask = empty_set();
  for (const auto& label : labels) {
    auto index = index_of(label);
    if (!index) throw InvalidArgument("unknown point label '" + label + "'");
    mask = mask.with(*index);
  }
  return mask;
}

std::vector<std::string> Universe::labels_of(SubsetMask mask) const {
  check(mask);
  std::vector<std::string> out;
  for (std::size_t i : mask.indices()) out.push_back(label(i));
  return out;
}

void Universe::check(SubsetMask mask, std::string_view what) const {
  if (mask.width() != size()) {
    throw UniverseMismatch(std::string(what) + " has width " + std::to_string(mask.width()) +
                           " but the universe has " + std::to_string(size()) + " points");
  }
}

std::string to_string(const Universe& universe, SubsetMask mask) {
  std::string out = "{";
  bool first = true;
  for (const auto& label : universe.labels_of(mask)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  return out + "}";
}

}  // namespace antitop
