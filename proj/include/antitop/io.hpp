#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "antitop/error.hpp"
#include "antitop/maps.hpp"
#include "antitop/modal.hpp"
#include "antitop/set_family.hpp"
#include "json.hpp"

namespace antitop::io {

using Json = nlohmann::ordered_json;

/// Malformed document. The message carries the source name and either the
/// byte offset of a syntax error or the JSON pointer of the bad value.
class FormatError : public Error {
 public:
  using Error::Error;
};

struct SpaceDocument {
  SetFamily family;
  /// Non-fatal findings, e.g. duplicate members that were collapsed.
  std::vector<std::string> warnings;
};

/// Space file: {"universe": ["1","2"], "family": [["1"],["2"]]}.
SpaceDocument parse_space(std::string_view text, std::string_view source = "<input>");
SpaceDocument read_space_file(const std::filesystem::path& path);

/// Map file: {"domain": [...], "codomain": [...], "map": {"1": "a", ...}}.
/// Every domain label must appear as a key.
FiniteMap parse_map(std::string_view text, std::string_view source = "<input>");
FiniteMap read_map_file(const std::filesystem::path& path);

Json subset_to_json(const Universe& universe, SubsetMask mask);
Json space_to_json(const SetFamily& family);
Json map_to_json(const FiniteMap& map);
Json valuation_to_json(const Universe& universe, const modal::Valuation& valuation);

/// Compact single-line rendering; one line of the enumeration dump.
std::string dump_space(const SetFamily& family);

/// Comma-separated labels, surrounding whitespace ignored; the empty string
/// is the empty set. Throws InvalidArgument on an unknown label.
SubsetMask parse_inline_set(const Universe& universe, std::string_view text);

}  // namespace antitop::io
