#include <algorithm>
#include <charconv>

#include <CLI11.hpp>

#include "gastba/cli.hpp"

namespace gastba::cli {
namespace {

const std::vector<std::string> kOverrideKeys = {"tol",          "max_iter",  "damping",   "grid_points",
                                                "k_max_sigmas", "delta_min", "delta_max", "delta_samples"};

struct CommandTable {
  Command command;
  const char* name;
  const char* help;
  std::vector<std::string> numbers;
  std::vector<std::string> words;
  bool species = false;
};

const std::vector<CommandTable>& commands() {
  static const std::vector<CommandTable> table = {
      {Command::solve, "solve", "constant-kernel saddle point and observables",
       {"d", "h", "coupling", "T", "mass", "z-mu", "mu"}, {"statistics", "coupling-mode"}},
      {Command::charge, "charge", "2d central charge, one species or a species file",
       {"h", "mass"}, {"statistics"}, true},
      {Command::bec, "bec", "Bose-Einstein critical point",
       {"d", "n", "T", "mass", "h", "coupling"}, {"coupling-mode"}},
      {Command::fermi, "fermi", "Fermi energy at finite and zero temperature", {"d", "n", "T", "mass"}, {}},
      {Command::profile, "profile", "pseudo-energy profile for the quasi-periodic kernel",
       {"nu-re", "nu-im", "T", "mass"}, {}},
      {Command::zeros, "zeros", "scan a vertical line for zeros of zeta",
       {"sigma", "t-min", "t-max", "step", "threshold", "zeta-tol"}, {}},
      {Command::duality, "duality", "xi reflection residual and Casimir channel check",
       {"nu-re", "nu-im", "casimir-d"}, {}},
      {Command::kernel_check, "kernel-check", "kernel from the potential against the closed form",
       {"nu-re", "nu-im", "k"}, {}},
  };
  return table;
}

double parse_number(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* b = text.data();
  const char* e = b + text.size();
  const auto r = std::from_chars(b, e, v);
  if (r.ec != std::errc() || r.ptr != e) throw UsageError("--" + flag + ": '" + text + "' is not a number");
  return v;
}

}  // namespace

const char* to_string(Command c) {
  for (const auto& t : commands())
    if (t.command == c) return t.name;
  return "?";
}

double RunConfig::number(const std::string& key, double fallback) const {
  const auto it = numbers.find(key);
  return it == numbers.end() ? fallback : it->second;
}

RunConfig parse_invocation(const std::vector<std::string>& argv) {
  CLI::App app{"gastba: interacting quantum gases and quasi-periodic kernels", "gastba"};
  app.require_subcommand(1, 1);
  // -h is left free so --h can carry the coupling
  app.set_help_flag("--help", "print help");

  std::string format = "json";
  std::string output, species;
  std::vector<std::string> sets;
  std::map<std::string, std::string> raw_numbers, raw_words;
  std::vector<std::pair<CLI::App*, const CommandTable*>> subs;

  for (const auto& t : commands()) {
    CLI::App* sub = app.add_subcommand(t.name, t.help);
    sub->fallthrough();
    sub->set_help_flag("--help", "print help");
    for (const auto& n : t.numbers) sub->add_option("--" + n, raw_numbers[std::string(t.name) + "/" + n]);
    for (const auto& w : t.words) {
      auto* opt = sub->add_option("--" + w, raw_words[std::string(t.name) + "/" + w]);
      if (w == "statistics") opt->check(CLI::IsMember({"boson", "fermion"}));
      if (w == "coupling-mode") opt->check(CLI::IsMember({"gamma", "a", "h_T", "h"}));
    }
    if (t.species) sub->add_option("--species", species, "species JSON file");
    subs.emplace_back(sub, &t);
  }
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output", output, "write the report to this file");
  app.add_option("--set", sets, "solver override key=value")->allow_extra_args(false);

  std::vector<std::string> reversed(argv.rbegin(), argv.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (const auto& [sub, t] : subs)
      if (sub->parsed()) throw HelpRequested(sub->help());
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  RunConfig cfg;
  cfg.format = format == "csv" ? Format::csv : Format::json;
  if (!output.empty()) cfg.output_path = output;
  for (const auto& [sub, t] : subs) {
    if (!sub->parsed()) continue;
    cfg.command = t->command;
    for (const auto& n : t->numbers) {
      const std::string key = std::string(t->name) + "/" + n;
      if (sub->count("--" + n) > 0) cfg.numbers[n] = parse_number(raw_numbers[key], n);
    }
    for (const auto& w : t->words) {
      const std::string key = std::string(t->name) + "/" + w;
      if (sub->count("--" + w) > 0) cfg.words[w] = raw_words[key];
    }
    if (const auto d = cfg.numbers.find("d"); d != cfg.numbers.end() && d->second != 1.0 && d->second != 2.0 &&
                                             d->second != 3.0)
      throw UsageError("--d: dimension must be 1, 2 or 3");
    if (t->species && !species.empty()) cfg.species_file = species;
  }
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw UsageError("--set: expected key=value, got '" + s + "'");
    const std::string key = s.substr(0, eq);
    if (std::find(kOverrideKeys.begin(), kOverrideKeys.end(), key) == kOverrideKeys.end())
      throw UsageError("--set: unknown key '" + key + "'");
    cfg.overrides[key] = parse_number(s.substr(eq + 1), "set " + key);
  }
  return cfg;
}

}  // namespace gastba::cli
