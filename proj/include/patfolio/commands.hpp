#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "patfolio/diversity.hpp"
#include "patfolio/ingest.hpp"
#include "patfolio/portfolio.hpp"
#include "patfolio/taxonomy.hpp"

namespace patfolio::cli {

inline constexpr const char* kMatrixStoreFile = "matrix.tsv";
inline constexpr const char* kRaoStoreFile = "rao.tsv";
inline constexpr const char* kLockFile = ".lock";

/// Options of one `run`: a document set becomes one matrix-store column and
/// one rao-store row, plus its per-set output files.
struct RunConfig {
  std::string set_name;
  ClassLevel level = ClassLevel::ipc4;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path basemap;
  std::optional<std::filesystem::path> layout;
  std::filesystem::path store_dir;
  std::optional<int> year;
  CountingMode counting = CountingMode::set;
  bool strict = false;
  double threshold = 0.2;
};

void validate(const RunConfig& config);

struct RunSummary {
  DiversityRecord diversity;
  std::size_t duplicates = 0;
  std::size_t unknown_tags = 0;
  UnknownBucket unknown;
  std::filesystem::path output_dir;
};

/// Output file names inside <store>/<set>/ for a run at `level`.
std::vector<std::string> run_output_files(ClassLevel level);

/// Everything is computed before the store directory is touched; a failed
/// run leaves it unchanged. Prints the one-line summary to `out` and
/// warnings to `log`.
RunSummary cmd_run(const RunConfig& config, std::ostream& out, std::ostream& log);

struct CompareConfig {
  std::filesystem::path store_dir;
  std::vector<std::string> names;  // empty: every stored set
  std::optional<std::filesystem::path> out_dir;  // default <store>/compare
};

/// Pairwise Pearson/Spearman/cosine report plus the (1 - cosine) distance
/// matrix and its Pajek and VOSviewer files.
void cmd_compare(const CompareConfig& config, std::ostream& out);

struct RecordSource {
  std::vector<std::filesystem::path> inputs;
  std::optional<std::filesystem::path> basemap;  // class list; else observed classes
  ClassLevel level = ClassLevel::ipc4;
  std::optional<int> year;
  bool strict = false;
};

/// Cohesion needs patent-level co-occurrence, so it reads record files
/// rather than the matrix store.
void cmd_cohesion(const RecordSource& source, const std::string& name, std::ostream& out,
                  std::ostream& log);

/// Largest component of the cosine-normalized co-occurrence network above
/// `threshold`, written as <name>.net, <name>.txt and <name>n.txt.
void cmd_export(const RecordSource& source, const std::string& name, double threshold,
                const std::filesystem::path& out_dir, std::ostream& out, std::ostream& log);

void cmd_query(const QuerySpec& spec, std::ostream& out);

/// Parses, concatenates, deduplicates and year-filters the inputs.
std::vector<PatentRecord> load_records(const std::vector<std::filesystem::path>& inputs,
                                       std::optional<int> year, std::ostream& log,
                                       std::size_t* duplicates = nullptr,
                                       std::size_t* unknown_tags = nullptr);

/// Sorted distinct class codes found in `records` at `level`.
ClassList observed_classes(const std::vector<PatentRecord>& records, ClassLevel level);

/// Holds <dir>/.lock for its lifetime; Error(locked) if another process
/// has it.
class StoreLock {
 public:
  explicit StoreLock(const std::filesystem::path& dir);
  ~StoreLock();
  StoreLock(const StoreLock&) = delete;
  StoreLock& operator=(const StoreLock&) = delete;

 private:
  std::filesystem::path path_;
};

}  // namespace patfolio::cli
