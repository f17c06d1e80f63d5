#include "antitop/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace antitop::io {

namespace {

[[noreturn]] void fail(std::string_view source, const std::string& where, const std::string& what) {
  throw FormatError(std::string(source) + ": " + where + ": " + what);
}

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(std::string(source) + ": byte " + std::to_string(e.byte) +
                      ": malformed JSON");
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path.string() + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Universe parse_universe(const Json& doc, const char* key, std::string_view source) {
  const std::string where = std::string("/") + key;
  if (!doc.contains(key)) fail(source, where, "missing");
  const Json& labels = doc.at(key);
  if (!labels.is_array()) fail(source, where, "expected an array of labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) fail(source, where + "/" + std::to_string(i), "expected a string");
    out.push_back(labels[i].get<std::string>());
  }
  try {
    return Universe(std::move(out));
  } catch (const Error& e) {
    fail(source, where, e.what());
  }
}

}  // namespace

SpaceDocument parse_space(std::string_view text, std::string_view source) {
  const Json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, "/", "expected an object");
  Universe universe = parse_universe(doc, "universe", source);

  if (!doc.contains("family")) fail(source, "/family", "missing");
  const Json& family = doc.at("family");
  if (!family.is_array()) fail(source, "/family", "expected an array of sets");
  std::vector<SubsetMask> members;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string where = "/family/" + std::to_string(i);
    const Json& set = family[i];
    if (!set.is_array()) fail(source, where, "expected an array of labels");
    SubsetMask mask = universe.empty_set();
    for (std::size_t j = 0; j < set.size(); ++j) {
      const std::string at = where + "/" + std::to_string(j);
      if (!set[j].is_string()) fail(source, at, "expected a string");
      auto index = universe.index_of(set[j].get<std::string>());
      if (!index) fail(source, at, "unknown label '" + set[j].get<std::string>() + "'");
      mask = mask.with(*index);
    }
    members.push_back(mask);
  }

  SpaceDocument out{SetFamily(universe, std::move(members)), {}};
  if (out.family.duplicates_collapsed() > 0) {
    out.warnings.push_back(std::string(source) + ": collapsed " +
                           std::to_string(out.family.duplicates_collapsed()) +
                           " duplicate set(s)");
  }
  return out;
}

SpaceDocument read_space_file(const std::filesystem::path& path) {
  return parse_space(read_file(path), path.string());
}

FiniteMap parse_map(std::string_view text, std::string_view source) {
  const Json doc = parse_json(text, source);
  if (!doc.is_object()) fail(source, "/", "expected an object");
  Universe domain = parse_universe(doc, "domain", source);
  Universe codomain = parse_universe(doc, "codomain", source);
  if (!doc.contains("map")) fail(source, "/map", "missing");
  const Json& assignments = doc.at("map");
  if (!assignments.is_object()) fail(source, "/map", "expected an object");

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> images(domain.size(), kUnset);
  for (const auto& [key, value] : assignments.items()) {
    const std::string where = "/map/" + key;
    auto from = domain.index_of(key);
    if (!from) fail(source, where, "unknown domain label '" + key + "'");
    if (!value.is_string()) fail(source, where, "expected a codomain label");
    auto to = codomain.index_of(value.get<std::string>());
    if (!to) fail(source, where, "unknown codomain label '" + value.get<std::string>() + "'");
    images[*from] = *to;
  }
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == kUnset) fail(source, "/map", "no image for '" + domain.label(i) + "'");
  }
  return FiniteMap(std::move(domain), std::move(codomain), std::move(images));
}

FiniteMap read_map_file(const std::filesystem::path& path) {
  return parse_map(read_file(path), path.string());
}

Json subset_to_json(const Universe& universe, SubsetMask mask) {
  return Json(universe.labels_of(mask));
}

Json space_to_json(const SetFamily& family) {
  Json out = Json::object();
  out["universe"] = family.universe().labels();
  Json members = Json::array();
  for (auto m : family.members()) members.push_back(subset_to_json(family.universe(), m));
  out["family"] = std::move(members);
  return out;
}

Json map_to_json(const FiniteMap& map) {
  Json out = Json::object();
  out["domain"] = map.domain().labels();
  out["codomain"] = map.codomain().labels();
  Json images = Json::object();
  for (std::size_t i = 0; i < map.domain().size(); ++i) {
    images[map.domain().label(i)] = map.codomain().label(map(i));
  }
  out["map"] = std::move(images);
  return out;
}

Json valuation_to_json(const Universe& universe, const modal::Valuation& valuation) {
  Json out = Json::object();
  for (const auto& [name, set] : valuation) out[name] = subset_to_json(universe, set);
  return out;
}

std::string dump_space(const SetFamily& family) { return space_to_json(family).dump(); }

SubsetMask parse_inline_set(const Universe& universe, std::string_view text) {
  SubsetMask mask = universe.empty_set();
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  if (trim(text).empty()) return mask;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    auto index = universe.index_of(item);
    if (!index) throw InvalidArgument("unknown point label '" + std::string(item) + "'");
    mask = mask.with(*index);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return mask;
}

}  // namespace antitop::io
