// patfolio: patent portfolio diversity and network statistics.
//
//   patfolio run      --name paris --input paris.txt --basemap cos4.tsv --layout layout4.tsv --store out/
//   patfolio compare  --store out/ [--names paris toulouse]
//   patfolio cohesion --name paris --input paris.txt [--basemap cos4.tsv]
//   patfolio export   --name toul --input toulouse.txt --threshold 0.2 --out maps/
//   patfolio query    --kind city-country --term amsterdam --country nl --year 2014

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "patfolio/commands.hpp"
#include "patfolio/error.hpp"

namespace {

using patfolio::Error;
using patfolio::ErrorCode;

patfolio::ClassLevel level_from(const std::string& text) {
  auto level = patfolio::parse_class_level(text);
  if (!level) throw Error(ErrorCode::argument, "level must be ipc3 or ipc4");
  return *level;
}

// "MA:Essex|Middlesex|Boston" -> group under MA
patfolio::PlaceGroup parse_group(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw Error(ErrorCode::argument, "group '" + text + "' must read STATE:term|term");
  patfolio::PlaceGroup group;
  group.state = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    auto bar = rest.find('|', start);
    if (bar == std::string::npos) bar = rest.size();
    group.terms.push_back(rest.substr(start, bar - start));
    start = bar + 1;
  }
  return group;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Patent portfolio diversity, co-occurrence networks and map files"};
  app.set_config("--config", "", "TOML/INI file with option defaults; command-line flags win");
  app.require_subcommand(1);

  // run
  patfolio::cli::RunConfig run;
  std::string run_level = "ipc4", run_mode = "set";
  std::vector<std::string> run_inputs;
  std::string run_layout;
  int run_year = 0;
  auto* run_cmd = app.add_subcommand("run", "Add one document set to the store and write its map files");
  run_cmd->add_option("--name", run.set_name, "Set name (at most 10 characters)")->required();
  run_cmd->add_option("--input", run_inputs, "Tagged record files or .tsv imports")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--basemap", run.basemap, "Base-map cosine matrix")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--layout", run_layout, "Base-map layout (code x y cluster)")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--store", run.store_dir, "Store directory")->required();
  run_cmd->add_option("--level", run_level, "ipc3 or ipc4")->capture_default_str();
  run_cmd->add_option("--year", run_year, "Keep only patents issued in this year");
  run_cmd->add_option("--counting", run_mode, "set or multiset")->capture_default_str();
  run_cmd->add_flag("--strict", run.strict, "Reject symbols outside the base map");
  run_cmd->add_option("--threshold", run.threshold, "Minimum base-map cosine for VOSviewer links")->capture_default_str();

  // compare
  patfolio::cli::CompareConfig compare;
  std::string compare_out;
  auto* compare_cmd = app.add_subcommand("compare", "Correlate stored portfolios and write the distance matrix");
  compare_cmd->add_option("--store", compare.store_dir, "Store directory")->required();
  compare_cmd->add_option("--names", compare.names, "Sets to compare (default: all)");
  compare_cmd->add_option("--out", compare_out, "Output directory (default: <store>/compare)");

  // cohesion and export share a record source
  patfolio::cli::RecordSource source;
  std::vector<std::string> source_inputs;
  std::string source_basemap, source_level = "ipc4", source_name;
  int source_year = 0;
  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--name", source_name, "Set name")->required();
    cmd->add_option("--input", source_inputs, "Tagged record files or .tsv imports")->required()->check(CLI::ExistingFile);
    cmd->add_option("--basemap", source_basemap, "Base-map matrix supplying the class list")->check(CLI::ExistingFile);
    cmd->add_option("--level", source_level, "ipc3 or ipc4")->capture_default_str();
    cmd->add_option("--year", source_year, "Keep only patents issued in this year");
    cmd->add_flag("--strict", source.strict, "Reject symbols outside the class list");
  };
  auto* cohesion_cmd = app.add_subcommand("cohesion", "Print the 16 network cohesion measures of a set");
  add_source(cohesion_cmd);
  double export_threshold = 0.2;
  std::string export_out = ".";
  auto* export_cmd = app.add_subcommand("export", "Write the largest thresholded component as Pajek/VOSviewer files");
  add_source(export_cmd);
  export_cmd->add_option("--threshold", export_threshold, "Keep cosine links strictly above this")->capture_default_str();
  export_cmd->add_option("--out", export_out, "Output directory")->capture_default_str();

  // query
  std::string query_kind = "city-country", query_state, query_country;
  std::vector<std::string> query_terms, query_groups;
  int query_year = 0;
  auto* query_cmd = app.add_subcommand("query", "Print a USPTO advanced-search string");
  query_cmd->add_option("--kind", query_kind, "city-country, city-state or cbsa")->capture_default_str();
  query_cmd->add_option("--term", query_terms, "Place name (repeatable)");
  query_cmd->add_option("--state", query_state, "Two-letter state");
  query_cmd->add_option("--country", query_country, "Two-letter country");
  query_cmd->add_option("--group", query_groups, "CBSA group STATE:term|term (repeatable)");
  query_cmd->add_option("--year", query_year, "Issue year")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*run_cmd) {
      run.level = level_from(run_level);
      for (const auto& p : run_inputs) run.inputs.emplace_back(p);
      run.layout = run_layout;
      if (run_cmd->count("--year")) run.year = run_year;
      if (run_mode == "set") {
        run.counting = patfolio::CountingMode::set;
      } else if (run_mode == "multiset") {
        run.counting = patfolio::CountingMode::multiset;
      } else {
        throw Error(ErrorCode::argument, "counting must be set or multiset");
      }
      patfolio::cli::cmd_run(run, std::cout, std::cerr);
    } else if (*compare_cmd) {
      if (!compare_out.empty()) compare.out_dir = compare_out;
      patfolio::cli::cmd_compare(compare, std::cout);
    } else if (*cohesion_cmd || *export_cmd) {
      for (const auto& p : source_inputs) source.inputs.emplace_back(p);
      if (!source_basemap.empty()) source.basemap = source_basemap;
      source.level = level_from(source_level);
      auto* active = *cohesion_cmd ? cohesion_cmd : export_cmd;
      if (active->count("--year")) source.year = source_year;
      if (*cohesion_cmd) {
        patfolio::cli::cmd_cohesion(source, source_name, std::cout, std::cerr);
      } else {
        patfolio::cli::cmd_export(source, source_name, export_threshold, export_out, std::cout, std::cerr);
      }
    } else if (*query_cmd) {
      patfolio::QuerySpec spec;
      auto kind = patfolio::parse_query_kind(query_kind);
      if (!kind) throw Error(ErrorCode::argument, "unknown query kind '" + query_kind + "'");
      spec.kind = *kind;
      spec.year = query_year;
      if (!query_country.empty()) spec.country = query_country;
      if (!query_terms.empty()) {
        patfolio::PlaceGroup group{query_terms, std::nullopt};
        if (!query_state.empty()) group.state = query_state;
        spec.places.push_back(std::move(group));
      }
      for (const auto& g : query_groups) spec.places.push_back(parse_group(g));
      patfolio::cli::cmd_query(spec, std::cout);
    }
  } catch (const Error& e) {
    std::cerr << patfolio::to_string(e.code()) << ": " << e.what() << "\n";
    return e.code() == ErrorCode::argument ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "internal-error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
