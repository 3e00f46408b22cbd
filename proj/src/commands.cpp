#include "patfolio/commands.hpp"

#include <cstdio>
#include <functional>
#include <ostream>
#include <set>

#include "patfolio/compare.hpp"
#include "patfolio/error.hpp"
#include "patfolio/export.hpp"
#include "patfolio/io.hpp"
#include "patfolio/network.hpp"
#include "patfolio/rao_store.hpp"

namespace patfolio::cli {
namespace {

namespace fs = std::filesystem;

std::string level_digit(ClassLevel level) { return level == ClassLevel::ipc3 ? "3" : "4"; }

std::string optional_real(const std::function<double()>& f) {
  try {
    return io::format_fixed(f(), 3);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::undefined_correlation || e.code() == ErrorCode::undefined_cosine) {
      return "undefined";
    }
    throw;
  }
}

ClassSimilarityMap load_map(const fs::path& matrix, const std::optional<fs::path>& layout,
                            ClassLevel level) {
  auto map = load_basemap(matrix, layout);
  if (map.level() != level) {
    throw Error(ErrorCode::level_conflict, "base map '" + matrix.string() + "' is " +
                                               std::string(to_string(map.level())) + ", run asks for " +
                                               std::string(to_string(level)));
  }
  return map;
}

ClassListPtr source_classes(const RecordSource& source, const std::vector<PatentRecord>& records) {
  if (source.basemap) {
    auto map = load_map(*source.basemap, std::nullopt, source.level);
    return map.classes();
  }
  return std::make_shared<const ClassList>(observed_classes(records, source.level));
}

void remove_quietly(const fs::path& p) {
  std::error_code ec;
  fs::remove_all(p, ec);
}

}  // namespace

StoreLock::StoreLock(const fs::path& dir) : path_(dir / kLockFile) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create store directory '" + dir.string() + "'");
  std::FILE* f = std::fopen(path_.c_str(), "wx");
  if (!f) {
    if (fs::exists(path_)) {
      throw Error(ErrorCode::locked, "store '" + dir.string() + "' is locked by another run (" +
                                         path_.string() + ")");
    }
    throw Error(ErrorCode::io, "cannot create lock file '" + path_.string() + "'");
  }
  std::fclose(f);
}

StoreLock::~StoreLock() {
  std::error_code ec;
  fs::remove(path_, ec);
}

void validate(const RunConfig& config) {
  validate_set_name(config.set_name);
  if (!(config.threshold >= 0.0 && config.threshold <= 1.0)) {
    throw Error(ErrorCode::argument, "threshold must lie in [0,1]");
  }
  if (config.inputs.empty()) throw Error(ErrorCode::argument, "no input files given");
  if (config.basemap.empty()) throw Error(ErrorCode::argument, "no base map given");
  if (config.store_dir.empty()) throw Error(ErrorCode::argument, "no store directory given");
}

std::vector<PatentRecord> load_records(const std::vector<fs::path>& inputs, std::optional<int> year,
                                       std::ostream& log, std::size_t* duplicates,
                                       std::size_t* unknown_tags) {
  std::vector<PatentRecord> all;
  std::size_t unknown = 0;
  for (const auto& path : inputs) {
    auto parsed = parse_file(path.string());
    unknown += parsed.unknown_tags;
    for (auto& r : parsed.records) all.push_back(std::move(r));
  }
  auto dedup = deduplicate(std::move(all));
  if (dedup.duplicates > 0) {
    log << "warning: dropped " << dedup.duplicates << " duplicate patent record(s)\n";
  }
  if (unknown > 0) log << "warning: skipped " << unknown << " line(s) with unknown tags\n";
  if (duplicates) *duplicates = dedup.duplicates;
  if (unknown_tags) *unknown_tags = unknown;
  if (year) return filter_by_year(dedup.records, std::chrono::year{*year});
  return std::move(dedup.records);
}

ClassList observed_classes(const std::vector<PatentRecord>& records, ClassLevel level) {
  std::set<std::string> codes;
  for (const auto& rec : records) {
    for (const auto& raw : rec.class_symbols) {
      try {
        codes.insert(class_key(normalize_class(raw), level));
      } catch (const Error&) {
        // skip malformed symbols
      }
    }
  }
  return ClassList({codes.begin(), codes.end()});
}

std::vector<std::string> run_output_files(ClassLevel level) {
  const auto d = level_digit(level);
  return {"coocc.dat", "cosine.net", "vos" + d + ".txt", "vos" + d + "n.txt",
          "ipc" + d + ".vec", "ipc" + d + ".clu"};
}

RunSummary cmd_run(const RunConfig& config, std::ostream& out, std::ostream& log) {
  validate(config);
  StoreLock lock(config.store_dir);

  const auto map = load_map(config.basemap, config.layout, config.level);
  RunSummary summary;
  const auto records = load_records(config.inputs, config.year, log, &summary.duplicates, &summary.unknown_tags);

  const CountOptions options{config.counting, config.strict};
  auto vector = count_classes(records, config.set_name, map.classes(), options);
  summary.unknown = vector.unknown;
  if (vector.unknown.count > 0) {
    log << "warning: " << vector.unknown.count << " class assignment(s) outside the base map kept in UNKNOWN\n";
  }
  std::vector<ClassPair> missing;
  summary.diversity = diversity_record(vector, map, &missing);
  for (const auto& [a, b] : missing) log << "warning: no base-map cosine for " << a << "-" << b << "\n";

  // Store updates are validated in memory before anything is written.
  const auto matrix_path = config.store_dir / kMatrixStoreFile;
  const auto rao_path = config.store_dir / kRaoStoreFile;
  const auto matrix = append_column(load_matrix_store(matrix_path), vector);
  const auto rao = append_diversity_row(load_rao_store(rao_path), summary.diversity);
  const auto set_dir = config.store_dir / config.set_name;
  if (fs::exists(set_dir)) {
    throw Error(ErrorCode::name_conflict, "output directory '" + set_dir.string() + "' already exists");
  }

  const auto cooc = cooccurrence(records, *map.classes(), config.strict);
  const auto cosine = threshold_graph(cosine_rows(cooc), 0.0);
  const auto vos = format_vosviewer(vector, map, config.threshold);
  const auto counts = as_reals(vector);
  std::vector<int> occupancy(vector.counts.size());
  for (std::size_t i = 0; i < occupancy.size(); ++i) occupancy[i] = vector.counts[i] > 0 ? 1 : 0;

  const auto names = run_output_files(config.level);
  const std::vector<std::string> contents = {
      io::format_labeled_matrix(cooc.codes, to_real(cooc.w)),
      format_pajek_net(cosine),
      vos.map,
      vos.network,
      format_pajek_vec(counts, map.size()),
      format_pajek_clu(occupancy, map.size()),
  };

  const auto staging = config.store_dir / ("." + config.set_name + ".partial");
  remove_quietly(staging);
  try {
    fs::create_directories(staging);
    for (std::size_t i = 0; i < names.size(); ++i) io::write_file_atomically(staging / names[i], contents[i]);
    fs::rename(staging, set_dir);
  } catch (const fs::filesystem_error& e) {
    remove_quietly(staging);
    throw Error(ErrorCode::io, e.what());
  } catch (...) {
    remove_quietly(staging);
    throw;
  }
  try {
    save_matrix_store(matrix_path, matrix);
    save_rao_store(rao_path, rao);
  } catch (...) {
    remove_quietly(set_dir);
    throw;
  }

  summary.output_dir = set_dir;
  const auto& d = summary.diversity;
  out << d.name << "\tn_patents=" << d.n_patents << "\tvariety=" << d.variety
      << "\trao_delta=" << format_delta(d.rao_delta) << "\ttrue_diversity=" << format_delta(d.true_diversity)
      << "\tgini_simpson=" << format_delta(d.gini_simpson);
  if (vector.unknown.count > 0) out << "\tunknown=" << vector.unknown.count;
  out << "\n";
  return summary;
}

void cmd_compare(const CompareConfig& config, std::ostream& out) {
  StoreLock lock(config.store_dir);
  const auto store = load_matrix_store(config.store_dir / kMatrixStoreFile);
  std::vector<ClassVector> columns;
  if (config.names.empty()) {
    columns = store.columns;
  } else {
    for (const auto& name : config.names) {
      const auto* column = store.find(name);
      if (!column) {
        std::string valid;
        for (const auto& n : store.names()) valid += (valid.empty() ? "" : ", ") + n;
        throw Error(ErrorCode::unknown_name, "no set named '" + name + "'; stored sets: " +
                                                 (valid.empty() ? "(none)" : valid));
      }
      columns.push_back(*column);
    }
  }
  if (columns.size() < 2) throw Error(ErrorCode::argument, "compare needs at least two sets");

  out << "a\tb\tpearson\tspearman\tcosine\tspearman_shared\tn_shared\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    for (std::size_t j = i + 1; j < columns.size(); ++j) {
      const auto& x = columns[i];
      const auto& y = columns[j];
      std::size_t shared = 0;
      for (std::size_t k = 0; k < x.counts.size(); ++k) shared += x.counts[k] > 0 && y.counts[k] > 0;
      const auto restricted = optional_real([&] { return restricted_spearman(x, y).rho; });
      out << x.name << "\t" << y.name << "\t" << optional_real([&] { return pearson(x, y); }) << "\t"
          << optional_real([&] { return spearman(x, y); }) << "\t"
          << optional_real([&] { return cosine_sim(x, y); }) << "\t" << restricted << "\t" << shared << "\n";
    }
  }

  const auto dist = distance_matrix(columns);
  const auto out_dir = config.out_dir.value_or(config.store_dir / "compare");
  fs::create_directories(out_dir);
  io::write_file_atomically(out_dir / "distances.tsv", format_distance_matrix(dist));

  SimilarityGraph g{dist.names, {}};
  for (std::size_t i = 0; i < dist.names.size(); ++i) {
    for (std::size_t j = i + 1; j < dist.names.size(); ++j) {
      const double cos = 1.0 - dist.d(i, j);
      if (cos > 0.0) g.edges.push_back({i, j, cos});
    }
  }
  write_pajek_net(g, out_dir / "portfolios.net");
  const auto vos = format_vosviewer_graph(g, {});
  io::write_file_atomically(out_dir / "portfolios.txt", vos.map);
  io::write_file_atomically(out_dir / "portfoliosn.txt", vos.network);
}

void cmd_cohesion(const RecordSource& source, const std::string& name, std::ostream& out,
                  std::ostream& log) {
  const auto records = load_records(source.inputs, source.year, log);
  const auto classes = source_classes(source, records);
  const auto cooc = cooccurrence(records, *classes, source.strict);
  if (cooc.codes.size() < 2) {
    throw Error(ErrorCode::degenerate_graph, "set '" + name + "' occupies " + std::to_string(cooc.codes.size()) +
                                                 " class(es); cohesion needs at least 2");
  }
  out << "# " << name << "\tnodes=" << cooc.codes.size() << "\n";
  out << format_cohesion_report(cohesion_report(cooc));
}

void cmd_export(const RecordSource& source, const std::string& name, double threshold,
                const fs::path& out_dir, std::ostream& out, std::ostream& log) {
  validate_set_name(name);
  const auto records = load_records(source.inputs, source.year, log);
  const auto classes = source_classes(source, records);
  const auto cooc = cooccurrence(records, *classes, source.strict);
  const auto local = largest_component(threshold_graph(cosine_rows(cooc), threshold));
  const auto counts = count_classes(records, name, classes, {CountingMode::set, source.strict});

  std::vector<double> weights;
  for (const auto& label : local.labels) {
    weights.push_back(static_cast<double>(counts.counts[*classes->index_of(label)]));
  }
  fs::create_directories(out_dir);
  write_pajek_net(local, out_dir / (name + ".net"));
  const auto vos = format_vosviewer_graph(local, weights);
  io::write_file_atomically(out_dir / (name + ".txt"), vos.map);
  io::write_file_atomically(out_dir / (name + "n.txt"), vos.network);
  out << name << "\tlargest_component=" << local.node_count() << "\tof=" << cooc.codes.size()
      << "\tedges=" << local.edges.size() << "\n";
}

void cmd_query(const QuerySpec& spec, std::ostream& out) { out << build_search_string(spec) << "\n"; }

}  // namespace patfolio::cli
