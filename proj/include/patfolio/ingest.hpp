#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patfolio {

struct InventorLocation {
  std::string city;
  std::optional<std::string> region;
  std::string country;  // two uppercase letters

  friend bool operator==(const InventorLocation&, const InventorLocation&) = default;
};

/// One granted patent as retrieved from a saved export.
struct PatentRecord {
  std::string patent_id;
  std::chrono::year_month_day issue_date{};
  std::vector<InventorLocation> inventor_locations;
  std::vector<std::string> class_symbols;  // raw, duplicates preserved

  friend bool operator==(const PatentRecord&, const PatentRecord&) = default;
};

struct ParseResult {
  std::vector<PatentRecord> records;
  std::size_t unknown_tags = 0;
};

/// Tagged plain-text format. Blocks are separated by a line "----"; fields:
///   PN <id>            (required, once)
///   ISD <YYYYMMDD>     (required, once)
///   IC <city>|<region>|<CC>   (repeatable, region may be empty)
///   CL <raw class symbol>     (repeatable)
/// Unknown tags are skipped and counted. Throws Error(parse) naming the line.
ParseResult parse_records(std::string_view text);

/// Tab-separated import with header
///   patent_id issue_date city region country class_symbols
/// where class_symbols is ';'-joined. Consecutive rows with the same
/// patent_id add further inventor locations to one record.
ParseResult parse_tabular(std::string_view text);

/// Picks the tagged or tabular parser from the file extension (.tsv/.tab
/// are tabular).
ParseResult parse_file(const std::string& path);

/// Serializes to the tagged format; parse_records(format_records(x)) == x for
/// well-formed records.
std::string format_records(std::span<const PatentRecord> records);

struct DedupResult {
  std::vector<PatentRecord> records;
  std::size_t duplicates = 0;
};

/// Keeps the first occurrence of each patent_id.
DedupResult deduplicate(std::vector<PatentRecord> records);

std::vector<PatentRecord> filter_by_year(std::span<const PatentRecord> records,
                                         std::chrono::year year);

enum class QueryKind { city_country, city_state, cbsa };

/// Place names searched together under one state (or under the country for
/// non-US queries).
struct PlaceGroup {
  std::vector<std::string> terms;
  std::optional<std::string> state;
};

/// A USPTO advanced-search request. city-country and city-state queries
/// carry exactly one group; CBSA queries carry one group per state they
/// span.
struct QuerySpec {
  QueryKind kind = QueryKind::city_country;
  std::vector<PlaceGroup> places;
  std::optional<std::string> country;
  int year = 0;
};

/// Throws Error(invalid_spec) when the spec's invariants do not hold.
void validate(const QuerySpec& spec);

std::string build_search_string(const QuerySpec& spec);

std::optional<QueryKind> parse_query_kind(std::string_view text);

}  // namespace patfolio
