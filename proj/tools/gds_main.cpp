// Command-line front end: system ingestion, analysis commands, theorem
// audits, and DOT/JSON export.
//
// Exit codes: 0 success, 1 usage error, 2 analysis error (cap overflow,
// non-monotone input where monotonicity is required, malformed files),
// 3 theorem-audit failure.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "gds/audit.hpp"
#include "gds/errors.hpp"
#include "gds/json_io.hpp"
#include "gds/phase_space.hpp"
#include "gds/transforms.hpp"

namespace {

using gds::json;

struct CommonOpts {
  std::string system_path;
  std::string schedule;
  std::string driver;  // "sds" or "pds"
  std::string state;
  std::string format;  // empty = the command's natural default
  int n_cap = gds::kDefaultNCap;
  std::size_t alpha_cap = gds::kDefaultClassCap;
  bool json_errors = false;

  std::string fmt(const char* natural) const { return format.empty() ? natural : format; }
};

// Post-parse usage problems (exit code 1, distinct from analysis errors).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int env_n_cap() {
  if (const char* v = std::getenv("GDS_N_CAP")) {
    int cap = std::atoi(v);
    if (cap >= 1 && cap <= gds::kMaxStateBits) return cap;
  }
  return gds::kDefaultNCap;
}

gds::Driver resolve_driver(const CommonOpts& o, const std::optional<std::string>& hint,
                           int n) {
  std::string kind = o.driver;
  if (kind.empty()) {
    if (!o.schedule.empty())
      kind = "sds";
    else if (hint)
      kind = *hint;
    else
      kind = "sds";
  }
  if (kind == "pds") {
    if (!o.schedule.empty()) throw UsageError("the pds driver takes no schedule");
    return gds::Driver::pds();
  }
  if (kind != "sds") throw UsageError("--driver must be 'sds' or 'pds'");
  if (o.schedule.empty()) throw UsageError("the sds driver requires --schedule");
  gds::UpdateSchedule pi = gds::UpdateSchedule::parse(o.schedule);
  if (pi.n() != n) throw std::invalid_argument("schedule length does not match the system");
  return gds::Driver::sds(pi);
}

gds::UpdateSchedule require_schedule(const CommonOpts& o, int n) {
  if (o.schedule.empty()) throw UsageError("this command requires --schedule");
  gds::UpdateSchedule pi = gds::UpdateSchedule::parse(o.schedule);
  if (pi.n() != n) throw std::invalid_argument("schedule length does not match the system");
  return pi;
}

json trajectory_json(const gds::Trajectory& t) {
  json j;
  j["transient"] = json::array();
  for (const auto& s : t.transient) j["transient"].push_back(s.str());
  j["cycle"] = json::array();
  for (const auto& s : t.cycle) j["cycle"].push_back(s.str());
  j["truncated"] = t.truncated;
  return j;
}

json classification_json(const gds::Classification& c) {
  json j;
  j["state"] = c.state.str();
  j["verdict"] = gds::verdict_name(c.verdict);
  if (c.orbit_applicable)
    j["orbit_applicable"] = *c.orbit_applicable;
  else
    j["orbit_applicable"] = "unknown";
  if (c.certificate) {
    j["certificate"] = {{"kind", c.certificate->kind == gds::SKind::S0 ? "S0" : "S1"},
                        {"k", c.certificate->k},
                        {"sigma", c.certificate->sigma.str()}};
  }
  return j;
}

void emit(const json& j, const std::string& format) {
  if (format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << j.dump(2) << "\n";  // text consumers still get readable JSON
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite dynamical systems over graphs: simulation and exhaustive analysis"};
  app.require_subcommand(1);

  CommonOpts o;
  o.n_cap = env_n_cap();
  app.add_flag("--json-errors", o.json_errors, "report errors as JSON on stderr");

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", o.system_path, "system JSON file")->required();
  };
  auto add_schedule = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--schedule", o.schedule, "update schedule, e.g. 2,4,1,3");
    if (required) opt->required();
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
  };

  // simulate
  auto* sim = app.add_subcommand("simulate", "trajectory of one state");
  add_system(sim);
  add_schedule(sim, false);
  sim->add_option("--driver", o.driver, "sds or pds");
  sim->add_option("--state", o.state, "start state, e.g. 0101")->required();
  std::uint64_t max_steps = 0;
  sim->add_option("--max-steps", max_steps, "step cap (0 = 2^n)");
  add_format(sim);

  // phase-space
  auto* phase = app.add_subcommand("phase-space", "full phase-space export");
  add_system(phase);
  add_schedule(phase, false);
  phase->add_option("--driver", o.driver, "sds or pds");
  add_format(phase);

  // classify
  auto* cls = app.add_subcommand("classify", "classify one state with certificate");
  add_system(cls);
  add_schedule(cls, true);
  cls->add_option("--state", o.state, "state to classify")->required();
  cls->add_option("--alpha-cap", o.alpha_cap, "orbit enumeration cap");
  add_format(cls);

  // alpha-class
  auto* alpha = app.add_subcommand("alpha-class", "schedules equivalent to the given one");
  add_system(alpha);
  add_schedule(alpha, true);
  alpha->add_option("--alpha-cap", o.alpha_cap, "class size cap");
  add_format(alpha);

  // orbit
  auto* orb = app.add_subcommand("orbit", "orbit of a split state under the alpha class");
  add_system(orb);
  add_schedule(orb, true);
  std::string kind_str = "S0";
  int k_arg = 0;
  orb->add_option("--kind", kind_str, "S0 or S1")->check(CLI::IsMember({"S0", "S1"}));
  orb->add_option("--k", k_arg, "split position k")->required();
  orb->add_option("--alpha-cap", o.alpha_cap, "class size cap");
  add_format(orb);

  // theta
  auto* th = app.add_subcommand("theta", "schedules presenting a state as a split state");
  th->add_option("--state", o.state, "state")->required();
  std::string theta_kind = "zero";
  bool theta_list = false;
  th->add_option("--kind", theta_kind, "zero or one")->check(CLI::IsMember({"zero", "one"}));
  th->add_flag("--list", theta_list, "materialize the members");
  th->add_option("--cap", o.alpha_cap, "materialization cap");
  add_format(th);

  // extrema
  auto* ext = app.add_subcommand("extrema", "extremal fixed points of a monotone system");
  add_system(ext);
  add_schedule(ext, true);
  add_format(ext);

  // check-monotone
  auto* chk = app.add_subcommand("check-monotone", "per-vertex monotonicity verdicts");
  add_system(chk);
  add_format(chk);

  // extend-monotone
  auto* extm = app.add_subcommand("extend-monotone",
                                  "extend a monotone partial function to a total table");
  std::string partial_path;
  extm->add_option("--input", partial_path, "partial function JSON file")->required();
  add_format(extm);

  // parallelize
  auto* par = app.add_subcommand("parallelize", "parallel system with the same map");
  add_system(par);
  add_schedule(par, true);
  add_format(par);

  // sequentialize
  auto* seq = app.add_subcommand("sequentialize",
                                 "derive a sequentialization of a parallel system");
  add_system(seq);
  add_schedule(seq, true);
  add_format(seq);

  // goles
  auto* gol = app.add_subcommand("goles", "maximal-cycle monotone parallel system");
  int goles_n = 0;
  gol->add_option("--n", goles_n, "number of vertices")->required();
  add_format(gol);

  // audit
  auto* aud = app.add_subcommand("audit", "run the theorem audits");
  gds::audit::Config audit_cfg;
  aud->add_option("--max-n", audit_cfg.sweep_n, "exhaustive sweep size");
  aud->add_option("--samples", audit_cfg.samples, "random systems for the cycle bound");
  aud->add_option("--seed", audit_cfg.seed, "random seed");

  // Global flags remain usable after a subcommand name.
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help exits 0; any parse problem is a usage error
  }

  try {
    if (sim->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::Driver driver = resolve_driver(o, ls.driver, ls.system.n());
      gds::Trajectory t =
          gds::trajectory(ls.system, driver, gds::State::parse(o.state), max_steps);
      if (o.fmt("text") == "json") {
        emit(trajectory_json(t), o.format);
      } else {
        std::cout << "transient:";
        for (const auto& s : t.transient) std::cout << " " << s.str();
        std::cout << "\ncycle:";
        for (const auto& s : t.cycle) std::cout << " " << s.str();
        std::cout << "\n";
        if (t.truncated) std::cout << "truncated: step cap reached before a repeat\n";
      }
    } else if (phase->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::Driver driver = resolve_driver(o, ls.driver, ls.system.n());
      gds::PhaseSpace ps =
          gds::PhaseSpace::build(ls.system, driver, {o.n_cap, true});
      if (o.fmt("json") == "dot")
        std::cout << gds::phase_space_to_dot(ps);
      else
        std::cout << gds::phase_space_to_json(ps).dump(2) << "\n";
    } else if (cls->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      gds::Classification c = gds::classify_state(ls.system, pi, gds::State::parse(o.state),
                                                  nullptr, o.alpha_cap);
      emit(classification_json(c), o.format);
    } else if (alpha->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      gds::AlphaClass cls_out = gds::alpha_class(ls.system.graph(), pi, o.alpha_cap);
      if (o.fmt("text") == "json") {
        json j;
        j["representative"] = cls_out.representative.str();
        j["size"] = cls_out.members.size();
        j["members"] = json::array();
        for (const auto& s : cls_out.members) j["members"].push_back(s.str());
        emit(j, o.format);
      } else {
        std::cout << "size: " << cls_out.members.size() << "\n";
        for (const auto& s : cls_out.members) std::cout << s.str() << "\n";
      }
    } else if (orb->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      auto orbit = gds::s_orbit(ls.system.graph(), pi,
                                kind_str == "S0" ? gds::SKind::S0 : gds::SKind::S1, k_arg,
                                o.alpha_cap);
      if (o.fmt("text") == "json") {
        json j = json::array();
        for (const auto& s : orbit) j.push_back(s.str());
        emit(j, o.format);
      } else {
        for (const auto& s : orbit) std::cout << s.str() << "\n";
      }
    } else if (th->parsed()) {
      gds::ThetaSet t = gds::theta_set(
          gds::State::parse(o.state),
          theta_kind == "zero" ? gds::ThetaKind::zero : gds::ThetaKind::one, theta_list,
          o.alpha_cap);
      if (o.fmt("text") == "json") {
        json j;
        j["state"] = t.x.str();
        j["kind"] = theta_kind;
        j["size"] = gds::u128_str(t.size);
        if (t.members) {
          j["members"] = json::array();
          for (const auto& s : *t.members) j["members"].push_back(s.str());
        }
        emit(j, o.format);
      } else {
        std::cout << "size: " << gds::u128_str(t.size) << "\n";
        if (t.members)
          for (const auto& s : *t.members) std::cout << s.str() << "\n";
      }
    } else if (ext->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      gds::LatticeExtrema e = gds::lattice_extrema(ls.system, pi);
      if (o.fmt("text") == "json")
        emit(json{{"min", e.min_fp.str()}, {"max", e.max_fp.str()}}, o.format);
      else
        std::cout << "MIN: " << e.min_fp.str() << "\nMAX: " << e.max_fp.str() << "\n";
    } else if (chk->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      json verdicts = json::array();
      for (int i = 1; i <= ls.system.n(); ++i) {
        gds::MonotonicityVerdict v = gds::is_monotone_total(ls.system.function(i));
        json entry{{"vertex", i}, {"monotone", v.monotone}};
        if (v.witness)
          entry["witness"] = {v.witness->first.str(), v.witness->second.str()};
        verdicts.push_back(entry);
        if (o.fmt("text") != "json") {
          std::cout << "vertex " << i << ": "
                    << (v.monotone ? "monotone" : "NOT monotone");
          if (v.witness)
            std::cout << " (witness " << v.witness->first.str() << " -> "
                      << v.witness->second.str() << ")";
          std::cout << "\n";
        }
      }
      if (o.fmt("text") == "json")
        emit(json{{"monotone", ls.system.monotone()}, {"vertices", verdicts}}, o.format);
      else
        std::cout << "system: " << (ls.system.monotone() ? "monotone" : "not monotone")
                  << "\n";
    } else if (extm->parsed()) {
      gds::PartialFunction g = gds::load_partial(partial_path);
      gds::LocalFunction f = gds::monotone_extend(g);
      emit(gds::function_to_json(f), o.format);
    } else if (par->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      gds::SystemDescription out = gds::parallelize(ls.system, pi, o.n_cap);
      emit(gds::system_to_json(out, "pds"), o.format);
    } else if (seq->parsed()) {
      gds::LoadedSystem ls = gds::load_system(o.system_path);
      gds::UpdateSchedule pi = require_schedule(o, ls.system.n());
      gds::SequentializationResult r =
          gds::derive_sequentialization(ls.system, pi, o.n_cap);
      json j;
      j["status"] = r.status == gds::SeqStatus::ok          ? "OK"
                    : r.status == gds::SeqStatus::conflict ? "CONFLICT"
                                                            : "NON_MONOTONE";
      if (r.conflict_witness)
        j["conflict_witness"] = {r.conflict_witness->first.str(),
                                 r.conflict_witness->second.str()};
      if (r.monotonicity_witness)
        j["monotonicity_witness"] = {r.monotonicity_witness->first.str(),
                                     r.monotonicity_witness->second.str()};
      if (r.witness_vertex) j["witness_vertex"] = r.witness_vertex;
      json domains = json::array();
      for (const auto& dom : r.domains) {
        json d = json::array();
        for (const auto& s : dom) d.push_back(s.str());
        domains.push_back(std::move(d));
      }
      j["domains"] = std::move(domains);
      if (r.status == gds::SeqStatus::ok)
        j["system"] = gds::system_to_json(r.derived_system(), "sds");
      emit(j, o.format);
    } else if (gol->parsed()) {
      gds::SystemDescription out = gds::goles_pds(goles_n, o.n_cap);
      emit(gds::system_to_json(out, "pds"), o.format);
    } else if (aud->parsed()) {
      audit_cfg.alpha_cap = o.alpha_cap;
      bool all_ok = true;
      for (const auto& r : gds::audit::run_all(audit_cfg)) {
        all_ok = all_ok && r.passed;
        std::printf("[%s] %d %-24s %6.2fs  %s\n", r.passed ? "PASS" : "FAIL", r.number,
                    r.name.c_str(), r.seconds, r.detail.c_str());
      }
      if (!all_ok) return 3;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (o.json_errors)
      std::cerr << json{{"error", e.what()}}.dump() << "\n";
    else
      std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
