#include <cmath>
#include <fstream>
#include <ostream>

#include "gastba/cli.hpp"
#include "gastba/errors.hpp"
#include "gastba/riemann.hpp"
#include "gastba/saddle.hpp"
#include "gastba/thermo.hpp"

namespace gastba::cli {
namespace {

using nlohmann::json;

saddle::SolverConfig solver_config(const RunConfig& rc, saddle::SolverConfig cfg) {
  for (const auto& [k, v] : rc.overrides) {
    if (k == "tol") cfg.tol = v;
    else if (k == "max_iter") cfg.max_iter = static_cast<int>(v);
    else if (k == "damping") cfg.damping = v;
    else if (k == "grid_points") cfg.grid_points = static_cast<int>(v);
    else if (k == "k_max_sigmas") cfg.k_max_sigmas = v;
    else if (k == "delta_min") cfg.delta_min = v;
    else if (k == "delta_max") cfg.delta_max = v;
    else if (k == "delta_samples") cfg.delta_samples = static_cast<int>(v);
  }
  cfg.validate();
  return cfg;
}

int statistics_of(const RunConfig& rc) {
  const auto it = rc.words.find("statistics");
  return (it != rc.words.end() && it->second == "fermion") ? -1 : 1;
}

saddle::CouplingSpec coupling_of(const RunConfig& rc, double d) {
  saddle::CouplingSpec c;
  c.d = d;
  if (rc.has("h")) {
    c.mode = saddle::CouplingMode::h_T;
    c.value = rc.number("h", 0.0);
    return c;
  }
  const auto it = rc.words.find("coupling-mode");
  if (it != rc.words.end()) c.mode = saddle::coupling_mode_from_string(it->second);
  c.value = rc.number("coupling", 0.0);
  return c;
}

json solution_json(const saddle::SaddleSolution& s) {
  return {{"delta", s.delta},           {"z_delta", s.z_delta},       {"residual", s.residual},
          {"iterations", s.iterations}, {"branch_note", s.branch_note}, {"roots", s.roots}};
}

saddle::SaddleSolution solve_2d(int statistics, double h, double z_mu, const saddle::SolverConfig& cfg) {
  return statistics == 1 ? saddle::solve_2d_boson(h, z_mu, cfg) : saddle::solve_2d_fermion(h, z_mu, cfg);
}

Report cmd_solve(const RunConfig& rc) {
  const double d = rc.number("d", 3.0);
  const double T = rc.number("T", 1.0);
  saddle::SpeciesSpec sp;
  sp.statistics = statistics_of(rc);
  sp.mass = rc.number("mass", 0.5);
  sp.z_mu = rc.has("mu") ? std::exp(rc.number("mu", 0.0) / T) : rc.number("z-mu", 1.0);
  sp.validate();
  const auto cfg = solver_config(rc, {});
  const auto state = thermo::make_state(T, d, sp.mass);
  const double hT = saddle::thermal_coupling(coupling_of(rc, d), sp.mass, T);

  const auto sol = d == 2.0 ? solve_2d(sp.statistics, hT, sp.z_mu, cfg) : saddle::solve_delta_constant_h(d, sp, hT, cfg);
  Report r = solution_json(sol);
  r["d"] = d;
  r["T"] = T;
  r["mass"] = sp.mass;
  r["z_mu"] = sp.z_mu;
  r["h_T"] = hT;
  r["statistics"] = sp.statistics == 1 ? "boson" : "fermion";
  try {
    const auto obs = thermo::observables_constant(sol, state, sp);
    r["n"] = obs.n;
    r["F"] = obs.F;
    r["p"] = obs.p;
  } catch (const DomainError& e) {
    // the free 2d boson at z_mu = 1 has a divergent density
    r["n"] = nullptr;
    r["F"] = nullptr;
    r["p"] = nullptr;
    r["observables_note"] = e.what();
  }
  if (d == 2.0 && sp.z_mu == 1.0) r["c"] = thermo::central_charge({sol}, {sp});
  return r;
}

Report cmd_charge(const RunConfig& rc) {
  const auto cfg = solver_config(rc, {});
  std::vector<saddle::SpeciesSpec> species;
  std::vector<saddle::SaddleSolution> sols;
  Report r;
  if (rc.species_file) {
    const SpeciesFile f = load_species(*rc.species_file);
    for (std::size_t a = 0; a < f.names.size(); ++a)
      species.push_back({f.names[a], f.masses[a], f.statistics[a], f.z_mu[a]});
    sols = saddle::solve_2d_multispecies(species, f.couplings, cfg);
    r["couplings"] = f.couplings;
  } else {
    saddle::SpeciesSpec sp;
    sp.statistics = statistics_of(rc);
    sp.mass = rc.number("mass", 0.5);
    species.push_back(sp);
    sols.push_back(solve_2d(sp.statistics, rc.number("h", 0.0), 1.0, cfg));
    r["couplings"] = json::array({rc.number("h", 0.0)});
  }
  json z = json::array(), names = json::array(), stats = json::array(), res = json::array(),
       partial = json::array();
  for (std::size_t a = 0; a < species.size(); ++a) {
    z.push_back(sols[a].z_delta);
    names.push_back(species[a].name);
    stats.push_back(species[a].statistics == 1 ? "boson" : "fermion");
    res.push_back(sols[a].residual);
    const double ca = species[a].statistics == 1 ? thermo::central_charge_boson(sols[a].z_delta)
                                                 : thermo::central_charge_fermion(sols[a].z_delta);
    partial.push_back(ca);
  }
  r["c"] = thermo::central_charge(sols, species);
  r["z"] = z;
  r["species"] = names;
  r["statistics"] = stats;
  r["residual"] = res;
  r["c_species"] = partial;
  return r;
}

Report cmd_bec(const RunConfig& rc) {
  const double d = rc.number("d", 3.0);
  const double T = rc.number("T", 1.0);
  const auto state = thermo::make_state(T, d, rc.number("mass", 0.5));
  const auto b = thermo::bec_critical(d, coupling_of(rc, d), rc.number("n", 1.0), state);
  return {{"d", d}, {"T", T}, {"mass", state.mass}, {"n", rc.number("n", 1.0)}, {"h_T", b.h_T},
          {"mu_c", b.mu_c}, {"n_c", b.n_c}, {"T_c", b.T_c}, {"F_c", b.F_c}};
}

Report cmd_fermi(const RunConfig& rc) {
  const double d = rc.number("d", 3.0);
  const double n = rc.number("n", 1.0);
  const double mass = rc.number("mass", 0.5);
  const double w0 = thermo::fermi_energy_zero_T(d, n, mass);
  const double T = rc.number("T", 0.01 * w0);
  const double w = thermo::fermi_energy(d, n, T, mass);
  return {{"d", d},
          {"n", n},
          {"T", T},
          {"mass", mass},
          {"omega_F", w},
          {"omega_F_zero_T", w0},
          {"beta_omega_F", w / T},
          {"relative_difference", std::abs(w - w0) / w0}};
}

Report cmd_profile(const RunConfig& rc) {
  const specfun::ComplexOrder nu(rc.number("nu-re", 0.9), rc.number("nu-im", 0.0));
  const double T = rc.number("T", 0.05);
  const auto cfg = solver_config(rc, saddle::SolverConfig::quadrature());
  const auto spec = riemann::make_kernel_spec(nu);
  const auto prof = saddle::solve_profile_quasiperiodic(nu, T, spec, cfg, rc.number("mass", 0.5));
  json rows = json::array();
  for (std::size_t i = 0; i < prof.k.size(); ++i) {
    const double e = prof.epsilon[i];
    const double x = e / T;
    const double f = x > 0 ? std::exp(-x) / (1.0 + std::exp(-x)) : 1.0 / (1.0 + std::exp(x));
    rows.push_back({{"k", prof.k[i]}, {"epsilon", e}, {"f", f}});
  }
  return {{"nu_re", nu.sigma()},
          {"nu_im", nu.t()},
          {"T", T},
          {"k_max", prof.k_max},
          {"kernel_id", prof.kernel_id},
          {"residual", prof.residual},
          {"iterations", prof.iterations},
          {"boundary_filling", prof.boundary_filling},
          {"delta_at_origin", prof.epsilon_at(0.0) / T},
          {"warnings", prof.warnings},
          {"rows", rows}};
}

Report cmd_zeros(const RunConfig& rc) {
  riemann::ZeroScanConfig zc;
  zc.step = rc.number("step", zc.step);
  zc.threshold = rc.number("threshold", zc.threshold);
  zc.zeta_tol = rc.number("zeta-tol", zc.zeta_tol);
  const double sigma = rc.number("sigma", 0.5);
  const auto found = riemann::find_zeros(sigma, rc.number("t-min", 10.0), rc.number("t-max", 30.0), zc);
  json rows = json::array();
  for (const auto& c : found) {
    json row = {{"sigma", c.nu.sigma()},
                {"t", c.nu.t()},
                {"abs_g", c.abs_g},
                {"refined", c.refined},
                {"newton_residual", c.newton_residual},
                {"abs_zeta_check", c.abs_zeta_check},
                {"newton_iterations", c.newton_iterations}};
    row["delta_residual"] = c.refined ? json(riemann::verify_zero_delta(c, {0.1, 1.0, 10.0})) : json(nullptr);
    rows.push_back(row);
  }
  return {{"sigma", sigma},
          {"t_min", rc.number("t-min", 10.0)},
          {"t_max", rc.number("t-max", 30.0)},
          {"count", found.size()},
          {"rows", rows}};
}

Report cmd_duality(const RunConfig& rc) {
  const specfun::ComplexOrder nu(rc.number("nu-re", 0.3), rc.number("nu-im", 2.0));
  const auto a = specfun::xi_function(nu);
  const auto b = specfun::xi_function(specfun::ComplexOrder(1.0 - nu.value()));
  Report r = {{"nu_re", nu.sigma()}, {"nu_im", nu.t()},       {"xi_re", a.real()},
              {"xi_im", a.imag()},   {"xi_dual_re", b.real()}, {"xi_dual_im", b.imag()},
              {"residual", riemann::check_duality(nu)}};
  if (rc.has("casimir-d")) {
    const double dv = rc.number("casimir-d", 1.0);
    if (dv != std::round(dv)) throw DomainError("--casimir-d must be an integer");
    const auto c = riemann::casimir_channel_check(static_cast<int>(dv));
    r["casimir"] = {{"d", static_cast<int>(dv)},
                    {"free_energy", c.free_energy},
                    {"ground_energy", c.ground_energy},
                    {"residual", c.residual},
                    {"route", c.route}};
  }
  return r;
}

Report cmd_kernel_check(const RunConfig& rc) {
  const specfun::ComplexOrder nu(rc.number("nu-re", 0.9), rc.number("nu-im", 0.0));
  const double k = rc.number("k", 1.0);
  const auto spec = riemann::make_kernel_spec(nu);
  const double closed = riemann::kernel_closed_form(spec, k);
  const auto pot = riemann::kernel_from_potential(spec, k);
  const double ident = std::abs(riemann::kernel_prefactor_from_potential(spec) - spec.gamma_nu) /
                       std::abs(spec.gamma_nu);
  return {{"nu_re", nu.sigma()},
          {"nu_im", nu.t()},
          {"k", k},
          {"closed_form", closed},
          {"from_potential", pot.value},
          {"abs_error_estimate", pot.abs_error_estimate},
          {"relative_difference", std::abs(pot.value - closed) / std::max(std::abs(closed), 1e-300)},
          {"gamma_identity_residual", ident},
          {"warnings", spec.warnings}};
}

json error_object(const std::string& kind, const std::string& message) {
  return {{"error", kind}, {"message", message}};
}

}  // namespace

SpeciesFile parse_species(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("species") || !doc["species"].is_array())
    throw UsageError("--species: document needs a \"species\" array");
  SpeciesFile f;
  for (const auto& s : doc["species"]) {
    if (!s.is_object()) throw UsageError("--species: each species must be an object");
    f.names.push_back(s.value("name", std::string("s") + std::to_string(f.names.size())));
    f.masses.push_back(s.value("mass", 0.5));
    const std::string st = s.value("statistics", std::string("boson"));
    if (st != "boson" && st != "fermion") throw UsageError("--species: statistics must be boson or fermion");
    f.statistics.push_back(st == "boson" ? 1 : -1);
    f.z_mu.push_back(s.value("z_mu", 1.0));
  }
  const std::size_t n = f.names.size();
  if (n == 0) throw UsageError("--species: no species given");
  if (!doc.contains("couplings") || !doc["couplings"].is_array())
    throw UsageError("--species: document needs a \"couplings\" array");
  for (const auto& v : doc["couplings"]) {
    if (!v.is_number()) throw UsageError("--species: couplings must be numbers");
    f.couplings.push_back(v.get<double>());
  }
  if (f.couplings.size() != n * n)
    throw UsageError("--species: couplings must hold n*n = " + std::to_string(n * n) + " entries");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (std::abs(f.couplings[a * n + b] - f.couplings[b * n + a]) > 1e-12)
        throw UsageError("--species: coupling matrix is not symmetric");
  return f;
}

SpeciesFile load_species(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("--species: cannot open '" + path + "'");
  const auto doc = nlohmann::json::parse(in, nullptr, false);
  if (doc.is_discarded()) throw UsageError("--species: '" + path + "' is not valid JSON");
  return parse_species(doc);
}

Report execute(const RunConfig& config) {
  switch (config.command) {
    case Command::solve: return cmd_solve(config);
    case Command::charge: return cmd_charge(config);
    case Command::bec: return cmd_bec(config);
    case Command::fermi: return cmd_fermi(config);
    case Command::profile: return cmd_profile(config);
    case Command::zeros: return cmd_zeros(config);
    case Command::duality: return cmd_duality(config);
    case Command::kernel_check: return cmd_kernel_check(config);
  }
  throw UsageError("unknown command");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report report = execute(config);
    if (config.output_path) {
      std::ofstream file(*config.output_path, std::ios::binary);
      if (!file) throw IoError("cannot open '" + *config.output_path + "' for writing");
      write_report(report, config.format, file);
    } else {
      write_report(report, config.format, out);
    }
    return 0;
  } catch (const UsageError& e) {
    err << render_json(error_object("UsageError", e.what()));
    return 2;
  } catch (const DivergentSolution& e) {
    json obj = error_object(e.kind(), e.what());
    obj["limit_c"] = e.limit_central_charge();
    err << render_json(obj);
    return 3;
  } catch (const Error& e) {
    err << render_json(error_object(e.kind(), e.what()));
    return 3;
  } catch (const IoError& e) {
    err << render_json(error_object("IoError", e.what()));
    return 3;
  } catch (const std::exception& e) {
    err << render_json(error_object("NumericError", e.what()));
    return 3;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_invocation(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << render_json(error_object("UsageError", e.what()));
    return 2;
  }
  return run(config, out, err);
}

}  // namespace gastba::cli
