#pragma once

#include "pqs/search.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqs {

inline constexpr const char* kToolVersion = "1.0.0";

struct ReportHeader {
  std::string tool_version = kToolVersion;
  long long chi = 1;
  std::optional<long long> k2;
  std::optional<Rational> gamma;
  std::optional<std::pair<long long, long long>> k2_window;
  std::vector<std::string> groups;  // empty: default catalog
  bool groups_are_catalog = false;
  std::optional<Basket> basket;
  std::string dedup;
  SearchCaps caps;

  bool operator==(const ReportHeader&) const = default;
};

struct ReportGroup {
  std::string name;
  std::size_t order = 0;
  std::size_t degree = 0;
  std::vector<std::string> generators;  // cycle notation

  bool operator==(const ReportGroup&) const = default;
};

struct ReportFamily {
  ReportGroup group;
  Signature t1, t2;
  std::vector<std::string> systems;  // format_system text of sys1, sys2
  Basket basket;
  InvariantRecord invariants;
  std::size_t orbit_size = 0;
  std::vector<std::string> warnings;
  HodgeCheck hodge;
  InvariantRecord dual;

  bool operator==(const ReportFamily&) const = default;
};

struct Report {
  ReportHeader header;
  std::vector<ReportFamily> families;
  std::vector<CoverageGap> coverage_gaps;
  std::vector<SkippedTask> skipped;
  std::vector<std::string> warnings;

  bool operator==(const Report&) const = default;
};

Report make_report(const SearchParams& params, const SearchResult& result);

nlohmann::ordered_json to_json(const InvariantRecord& r);
InvariantRecord invariant_record_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Report& r);
/// Throws Parse on a malformed document.
Report report_from_json(const nlohmann::ordered_json& j);

/// Pretty-printed JSON with a trailing newline.
std::string dump_report(const Report& r);
Report parse_report(std::string_view text);

/// One group per line: a preset name, or "name degree gen1 gen2 ..." with
/// the generators in cycle notation. Blank lines and '#' comments are
/// ignored.
GroupPtr parse_group_line(std::string_view line);
std::vector<GroupPtr> read_group_file(const std::string& path);

}  // namespace pqs
