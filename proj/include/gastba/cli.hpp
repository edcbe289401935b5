#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace gastba::cli {

enum class Command { solve, charge, bec, fermi, profile, zeros, duality, kernel_check };
enum class Format { json, csv };

const char* to_string(Command c);

/// Bad invocation; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() holds the help text. Exit status 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Output sink could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::solve;
  Format format = Format::json;
  std::optional<std::string> output_path;
  std::optional<std::string> species_file;
  /// Command options by flag name (without dashes), already checked to be numeric.
  std::map<std::string, double> numbers;
  /// Word-valued options: statistics, coupling-mode.
  std::map<std::string, std::string> words;
  /// Solver overrides from --set key=value.
  std::map<std::string, double> overrides;

  double number(const std::string& key, double fallback) const;
  bool has(const std::string& key) const { return numbers.count(key) > 0; }
};

RunConfig parse_invocation(const std::vector<std::string>& argv);

/// Species JSON: {"species": [{name, mass, statistics, z_mu}], "couplings": [row-major n*n]}.
struct SpeciesFile {
  std::vector<std::string> names;
  std::vector<double> masses;
  std::vector<int> statistics;
  std::vector<double> z_mu;
  std::vector<double> couplings;
};
SpeciesFile parse_species(const nlohmann::json& doc);
SpeciesFile load_species(const std::string& path);

/// A report is a JSON object. In csv mode a "rows" array of objects becomes
/// the table; otherwise the scalar fields form a single row.
using Report = nlohmann::json;

std::string render_json(const Report& report);
std::string render_csv(const Report& report);
std::string render_report(const Report& report, Format format);
void write_report(const Report& report, Format format, std::ostream& out);

Report execute(const RunConfig& config);

/// Runs a parsed config: 0 ok, 3 on numerical or domain failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse + run; 2 on usage errors.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace gastba::cli
