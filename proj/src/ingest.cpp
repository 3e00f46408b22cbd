#include "patfolio/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "patfolio/error.hpp"
#include "patfolio/io.hpp"

namespace patfolio {
namespace {

constexpr std::string_view kSeparator = "----";

std::string upper(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_two_letters(std::string_view code) {
  return code.size() == 2 && std::isalpha(static_cast<unsigned char>(code[0])) &&
         std::isalpha(static_cast<unsigned char>(code[1]));
}

[[noreturn]] void parse_error(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::parse, "line " + std::to_string(line) + ": " + message);
}

std::optional<std::chrono::year_month_day> parse_date(std::string_view text) {
  std::string digits;
  for (char c : text) {
    if (c == '-') continue;
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    digits += c;
  }
  if (digits.size() != 8) return std::nullopt;
  const int y = std::stoi(digits.substr(0, 4));
  const unsigned m = static_cast<unsigned>(std::stoi(digits.substr(4, 2)));
  const unsigned d = static_cast<unsigned>(std::stoi(digits.substr(6, 2)));
  std::chrono::year_month_day date{std::chrono::year{y}, std::chrono::month{m},
                                   std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string format_date(std::chrono::year_month_day date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d%02u%02u", static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
  return buf;
}

std::optional<InventorLocation> make_location(std::string_view city, std::string_view region,
                                              std::string_view country, std::size_t line) {
  city = io::trim(city);
  region = io::trim(region);
  country = io::trim(country);
  if (city.empty() && region.empty() && country.empty()) return std::nullopt;
  if (city.empty()) parse_error(line, "inventor location without a city");
  if (!is_two_letters(country)) {
    parse_error(line, "country code '" + std::string(country) + "' is not two letters");
  }
  InventorLocation loc{std::string(city), std::nullopt, upper(country)};
  if (!region.empty()) loc.region = std::string(region);
  return loc;
}

struct BlockBuilder {
  std::size_t first_line = 0;
  std::optional<std::string> patent_id;
  std::optional<std::chrono::year_month_day> issue_date;
  std::vector<InventorLocation> locations;
  std::vector<std::string> symbols;

  [[nodiscard]] bool empty() const { return first_line == 0; }

  PatentRecord finish() {
    if (!patent_id) parse_error(first_line, "record block has no PN field");
    if (!issue_date) parse_error(first_line, "record block has no ISD field");
    PatentRecord rec{std::move(*patent_id), *issue_date, std::move(locations), std::move(symbols)};
    *this = BlockBuilder{};
    return rec;
  }
};

}  // namespace

ParseResult parse_records(std::string_view text) {
  ParseResult result;
  BlockBuilder block;
  const auto all = io::lines(text);
  for (std::size_t idx = 0; idx < all.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    const auto line = io::trim(all[idx]);
    if (line.empty()) continue;
    if (line == kSeparator) {
      if (!block.empty()) result.records.push_back(block.finish());
      continue;
    }
    if (block.empty()) block.first_line = line_no;

    const auto space = line.find_first_of(" \t");
    const auto tag = line.substr(0, space);
    const auto value = space == std::string_view::npos ? std::string_view{}
                                                       : io::trim(line.substr(space + 1));
    if (tag == "PN") {
      if (value.empty()) parse_error(line_no, "empty PN field");
      if (block.patent_id) parse_error(line_no, "repeated PN field");
      block.patent_id = std::string(value);
    } else if (tag == "ISD") {
      if (block.issue_date) parse_error(line_no, "repeated ISD field");
      block.issue_date = parse_date(value);
      if (!block.issue_date) parse_error(line_no, "bad issue date '" + std::string(value) + "'");
    } else if (tag == "IC") {
      auto parts = io::split(value, '|');
      if (parts.size() != 3) parse_error(line_no, "IC field needs city|region|country");
      if (auto loc = make_location(parts[0], parts[1], parts[2], line_no)) {
        block.locations.push_back(std::move(*loc));
      }
    } else if (tag == "CL") {
      if (value.empty()) parse_error(line_no, "empty CL field");
      block.symbols.emplace_back(value);
    } else {
      ++result.unknown_tags;
    }
  }
  if (!block.empty()) result.records.push_back(block.finish());
  return result;
}

ParseResult parse_tabular(std::string_view text) {
  static const std::vector<std::string_view> kHeader = {
      "patent_id", "issue_date", "city", "region", "country", "class_symbols"};
  ParseResult result;
  const auto all = io::lines(text);
  if (all.empty()) return result;
  auto header = io::split(all[0], '\t');
  for (auto& h : header) h = io::trim(h);
  if (header != kHeader) {
    parse_error(1, "unexpected header; want patent_id issue_date city region country class_symbols");
  }
  for (std::size_t idx = 1; idx < all.size(); ++idx) {
    const std::size_t line_no = idx + 1;
    if (io::trim(all[idx]).empty()) continue;
    auto fields = io::split(all[idx], '\t');
    if (fields.size() != kHeader.size()) {
      parse_error(line_no, "expected 6 tab-separated fields, got " + std::to_string(fields.size()));
    }
    const auto id = io::trim(fields[0]);
    if (id.empty()) parse_error(line_no, "empty patent_id");
    const auto date = parse_date(io::trim(fields[1]));
    if (!date) parse_error(line_no, "bad issue date '" + std::string(fields[1]) + "'");
    auto location = make_location(fields[2], fields[3], fields[4], line_no);
    std::vector<std::string> symbols;
    for (auto sym : io::split(fields[5], ';')) {
      sym = io::trim(sym);
      if (!sym.empty()) symbols.emplace_back(sym);
    }

    if (!result.records.empty() && result.records.back().patent_id == id) {
      auto& prev = result.records.back();
      if (prev.issue_date != *date || (!symbols.empty() && symbols != prev.class_symbols)) {
        parse_error(line_no, "continuation row for " + std::string(id) +
                                 " disagrees with the first row");
      }
      if (location) prev.inventor_locations.push_back(std::move(*location));
      continue;
    }
    PatentRecord rec{std::string(id), *date, {}, std::move(symbols)};
    if (location) rec.inventor_locations.push_back(std::move(*location));
    result.records.push_back(std::move(rec));
  }
  return result;
}

ParseResult parse_file(const std::string& path) {
  const auto text = io::read_file(path);
  const auto ext = lower(std::filesystem::path(path).extension().string());
  try {
    if (ext == ".tsv" || ext == ".tab") return parse_tabular(text);
    return parse_records(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string format_records(std::span<const PatentRecord> records) {
  auto check = [](const std::string& field, std::string_view what, bool allow_bar) {
    if (field.find('\n') != std::string::npos || (!allow_bar && field.find('|') != std::string::npos) ||
        io::trim(field) != field) {
      throw Error(ErrorCode::format, "cannot serialize " + std::string(what) + " '" + field + "'");
    }
  };
  std::string out;
  bool first = true;
  for (const auto& rec : records) {
    if (rec.patent_id.empty()) throw Error(ErrorCode::format, "record with empty patent_id");
    check(rec.patent_id, "patent id", true);
    if (!first) out += "----\n";
    first = false;
    out += "PN " + rec.patent_id + "\n";
    out += "ISD " + format_date(rec.issue_date) + "\n";
    for (const auto& loc : rec.inventor_locations) {
      check(loc.city, "city", false);
      if (loc.region) check(*loc.region, "region", false);
      if (!is_two_letters(loc.country)) {
        throw Error(ErrorCode::format, "country code '" + loc.country + "' is not two letters");
      }
      out += "IC " + loc.city + "|" + loc.region.value_or("") + "|" + loc.country + "\n";
    }
    for (const auto& sym : rec.class_symbols) {
      check(sym, "class symbol", true);
      out += "CL " + sym + "\n";
    }
  }
  return out;
}

DedupResult deduplicate(std::vector<PatentRecord> records) {
  DedupResult result;
  std::unordered_set<std::string> seen;
  result.records.reserve(records.size());
  for (auto& rec : records) {
    if (seen.insert(rec.patent_id).second) {
      result.records.push_back(std::move(rec));
    } else {
      ++result.duplicates;
    }
  }
  return result;
}

std::vector<PatentRecord> filter_by_year(std::span<const PatentRecord> records,
                                         std::chrono::year year) {
  std::vector<PatentRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [year](const PatentRecord& r) { return r.issue_date.year() == year; });
  return out;
}

std::optional<QueryKind> parse_query_kind(std::string_view text) {
  if (text == "city-country") return QueryKind::city_country;
  if (text == "city-state") return QueryKind::city_state;
  if (text == "cbsa") return QueryKind::cbsa;
  return std::nullopt;
}

void validate(const QuerySpec& spec) {
  auto fail = [](const std::string& msg) { throw Error(ErrorCode::invalid_spec, msg); };
  if (spec.year < 1000 || spec.year > 9999) fail("year must have four digits");
  if (spec.places.empty()) fail("no place terms given");
  for (const auto& group : spec.places) {
    if (group.terms.empty()) fail("place group without terms");
    for (const auto& term : group.terms) {
      if (io::trim(term).empty()) fail("empty place term");
      if (term.find('"') != std::string::npos) fail("place term contains a quote");
    }
    if (group.state && !is_two_letters(*group.state)) fail("state must be a two-letter code");
  }
  switch (spec.kind) {
    case QueryKind::city_country:
      if (!spec.country || !is_two_letters(*spec.country)) fail("city-country query needs a two-letter country");
      if (spec.places.size() != 1 || spec.places[0].state) fail("city-country query takes one group and no state");
      break;
    case QueryKind::city_state:
      if (spec.country) fail("city-state query takes no country");
      if (spec.places.size() != 1 || !spec.places[0].state) fail("city-state query takes one group with a state");
      break;
    case QueryKind::cbsa:
      if (spec.country) fail("cbsa query takes no country");
      for (const auto& group : spec.places) {
        if (!group.state) fail("every cbsa group needs a state");
      }
      break;
  }
}

namespace {

std::string render_term(const std::string& term) {
  const auto t = io::trim(term);
  if (t.find_first_of(" \t") != std::string_view::npos) return "\"" + std::string(t) + "\"";
  return std::string(t);
}

// ic/a  or  (ic/a or ic/b)
std::string simple_terms(const std::vector<std::string>& terms) {
  if (terms.size() == 1) return "ic/" + render_term(terms[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " or ";
    out += "ic/" + render_term(terms[i]);
  }
  return out + ")";
}

// ic/a  or  ic/(a OR b)
std::string grouped_terms(const std::vector<std::string>& terms) {
  if (terms.size() == 1) return "ic/" + render_term(terms[0]);
  std::string out = "ic/(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " OR ";
    out += render_term(terms[i]);
  }
  return out + ")";
}

}  // namespace

std::string build_search_string(const QuerySpec& spec) {
  validate(spec);
  const auto year = std::to_string(spec.year);
  switch (spec.kind) {
    case QueryKind::city_country:
      return simple_terms(spec.places[0].terms) + " and icn/" + lower(*spec.country) +
             " and isd/" + year + "$$";
    case QueryKind::city_state:
      return simple_terms(spec.places[0].terms) + " and is/" + lower(*spec.places[0].state) +
             " and isd/" + year + "$$";
    case QueryKind::cbsa: {
      if (spec.places.size() == 1) {
        return "IS/" + upper(*spec.places[0].state) + " and isd/" + year + "$$ and " +
               grouped_terms(spec.places[0].terms);
      }
      std::string out;
      for (std::size_t i = 0; i < spec.places.size(); ++i) {
        if (i) out += " OR ";
        out += "(" + grouped_terms(spec.places[i].terms) + " AND IS/" +
               upper(*spec.places[i].state) + ")";
      }
      return out + " AND ISD/" + year + "$$";
    }
  }
  throw Error(ErrorCode::invalid_spec, "unknown query kind");
}

}  // namespace patfolio
