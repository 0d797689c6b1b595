// Command-line front end: computes band structure quantities, single Otto or
// Stirling cycle reports, and figure-ready sweep datasets (CSV/JSON).
//
// Exit codes: 0 success, 2 usage/config error, 3 numerical non-convergence,
// 4 output I/O failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "topoheat/cycles.hpp"
#include "topoheat/material.hpp"
#include "topoheat/output.hpp"
#include "topoheat/sweep.hpp"

namespace {

using nlohmann::json;
using namespace topoheat;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumerics = 3;
constexpr int kExitIo = 4;

struct RunConfig {
  std::string command;
  MaterialParams material;
  CycleSpec cycle{40.0, 30.0, 0.0, 0.0};
  bool u_hot_set = false;
  bool u_cold_set = false;
  double point_k_meV = 0.0;
  double point_u_meV = 0.0;
  bool point_u_set = false;
  std::string sweep_cycle = "otto";
  std::string sweep_quantity = "work";
  std::string sweep_axis = "u_cold";
  GridSpec sweep_grid{0.0, 40.0, 161};
  GridSpec map_u_cold{0.0, 40.0, 161};
  GridSpec map_u_hot{0.0, 40.0, 161};
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int threads = 0;
  std::string output_path = "-";
  std::string output_format;  // empty = per-command default
  double v_f_m_per_s = 0.0;   // 0 = no SI conversion requested
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_keys(const json& node, std::initializer_list<const char*> allowed,
                  const std::string& where) {
  for (const auto& item : node.items()) {
    bool known = false;
    for (const char* key : allowed) {
      if (item.key() == key) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
    }
  }
}

double number_at(const json& node, const char* key, const std::string& where) {
  const json& v = node.at(key);
  if (!v.is_number()) {
    throw ConfigError(std::string(key) + " in " + where + " must be a number");
  }
  return v.get<double>();
}

GridSpec grid_from(const json& node, const std::string& where) {
  require_keys(node, {"start", "stop", "steps"}, where);
  GridSpec grid;
  if (node.contains("start")) grid.start = number_at(node, "start", where);
  if (node.contains("stop")) grid.stop = number_at(node, "stop", where);
  if (node.contains("steps")) {
    const json& v = node.at("steps");
    if (!v.is_number_integer()) {
      throw ConfigError("steps in " + where + " must be an integer");
    }
    grid.steps = v.get<int>();
  }
  return grid;
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse failure: ") + e.what());
  }
  require_keys(root,
               {"command", "material", "cycle", "point", "sweep", "map",
                "numerics", "output", "si"},
               "config root");
  if (root.contains("command")) {
    cfg.command = root.at("command").get<std::string>();
  }
  if (root.contains("material")) {
    const json& m = root.at("material");
    require_keys(m, {"lambda_so_meV"}, "material");
    if (m.contains("lambda_so_meV")) {
      cfg.material.lambda_so_meV = number_at(m, "lambda_so_meV", "material");
    }
  }
  if (root.contains("cycle")) {
    const json& c = root.at("cycle");
    require_keys(c, {"t_hot_K", "t_cold_K", "u_hot_meV", "u_cold_meV"}, "cycle");
    if (c.contains("t_hot_K")) cfg.cycle.t_hot_K = number_at(c, "t_hot_K", "cycle");
    if (c.contains("t_cold_K")) cfg.cycle.t_cold_K = number_at(c, "t_cold_K", "cycle");
    if (c.contains("u_hot_meV")) {
      cfg.cycle.u_hot_meV = number_at(c, "u_hot_meV", "cycle");
      cfg.u_hot_set = true;
    }
    if (c.contains("u_cold_meV")) {
      cfg.cycle.u_cold_meV = number_at(c, "u_cold_meV", "cycle");
      cfg.u_cold_set = true;
    }
  }
  if (root.contains("point")) {
    const json& pt = root.at("point");
    require_keys(pt, {"k_meV", "u_meV"}, "point");
    if (pt.contains("k_meV")) cfg.point_k_meV = number_at(pt, "k_meV", "point");
    if (pt.contains("u_meV")) {
      cfg.point_u_meV = number_at(pt, "u_meV", "point");
      cfg.point_u_set = true;
    }
  }
  if (root.contains("sweep")) {
    const json& s = root.at("sweep");
    require_keys(s, {"cycle", "quantity", "axis", "start", "stop", "steps"},
                 "sweep");
    if (s.contains("cycle")) cfg.sweep_cycle = s.at("cycle").get<std::string>();
    if (s.contains("quantity")) {
      cfg.sweep_quantity = s.at("quantity").get<std::string>();
    }
    if (s.contains("axis")) cfg.sweep_axis = s.at("axis").get<std::string>();
    GridSpec grid = cfg.sweep_grid;
    if (s.contains("start")) grid.start = number_at(s, "start", "sweep");
    if (s.contains("stop")) grid.stop = number_at(s, "stop", "sweep");
    if (s.contains("steps")) {
      if (!s.at("steps").is_number_integer()) {
        throw ConfigError("steps in sweep must be an integer");
      }
      grid.steps = s.at("steps").get<int>();
    }
    cfg.sweep_grid = grid;
  }
  if (root.contains("map")) {
    const json& m = root.at("map");
    require_keys(m, {"u_cold", "u_hot"}, "map");
    if (m.contains("u_cold")) cfg.map_u_cold = grid_from(m.at("u_cold"), "map.u_cold");
    if (m.contains("u_hot")) cfg.map_u_hot = grid_from(m.at("u_hot"), "map.u_hot");
  }
  if (root.contains("numerics")) {
    const json& n = root.at("numerics");
    require_keys(n, {"rel_tol", "abs_tol", "threads"}, "numerics");
    if (n.contains("rel_tol")) cfg.rel_tol = number_at(n, "rel_tol", "numerics");
    if (n.contains("abs_tol")) cfg.abs_tol = number_at(n, "abs_tol", "numerics");
    if (n.contains("threads")) {
      if (!n.at("threads").is_number_integer()) {
        throw ConfigError("threads must be an integer");
      }
      cfg.threads = n.at("threads").get<int>();
    }
  }
  if (root.contains("output")) {
    const json& o = root.at("output");
    require_keys(o, {"path", "format"}, "output");
    if (o.contains("path")) cfg.output_path = o.at("path").get<std::string>();
    if (o.contains("format")) cfg.output_format = o.at("format").get<std::string>();
  }
  if (root.contains("si")) {
    const json& s = root.at("si");
    require_keys(s, {"v_f_m_per_s"}, "si");
    if (s.contains("v_f_m_per_s")) {
      cfg.v_f_m_per_s = number_at(s, "v_f_m_per_s", "si");
    }
  }
}

json dump_config(const RunConfig& cfg) {
  json root;
  root["command"] = cfg.command;
  root["material"] = {{"lambda_so_meV", cfg.material.lambda_so_meV}};
  json cycle = {{"t_hot_K", cfg.cycle.t_hot_K}, {"t_cold_K", cfg.cycle.t_cold_K}};
  if (cfg.u_hot_set) cycle["u_hot_meV"] = cfg.cycle.u_hot_meV;
  if (cfg.u_cold_set) cycle["u_cold_meV"] = cfg.cycle.u_cold_meV;
  root["cycle"] = cycle;
  json point;
  point["k_meV"] = cfg.point_k_meV;
  if (cfg.point_u_set) point["u_meV"] = cfg.point_u_meV;
  root["point"] = point;
  root["sweep"] = {{"cycle", cfg.sweep_cycle},
                   {"quantity", cfg.sweep_quantity},
                   {"axis", cfg.sweep_axis},
                   {"start", cfg.sweep_grid.start},
                   {"stop", cfg.sweep_grid.stop},
                   {"steps", cfg.sweep_grid.steps}};
  root["map"] = {{"u_cold",
                  {{"start", cfg.map_u_cold.start},
                   {"stop", cfg.map_u_cold.stop},
                   {"steps", cfg.map_u_cold.steps}}},
                 {"u_hot",
                  {{"start", cfg.map_u_hot.start},
                   {"stop", cfg.map_u_hot.stop},
                   {"steps", cfg.map_u_hot.steps}}}};
  root["numerics"] = {{"rel_tol", cfg.rel_tol},
                      {"abs_tol", cfg.abs_tol},
                      {"threads", cfg.threads}};
  root["output"] = {{"path", cfg.output_path}, {"format", cfg.output_format}};
  if (cfg.v_f_m_per_s > 0.0) {
    root["si"] = {{"v_f_m_per_s", cfg.v_f_m_per_s}};
  }
  return root;
}

QuadratureSettings settings_from(const RunConfig& cfg) {
  QuadratureSettings q;
  q.rel_tol = cfg.rel_tol;
  q.abs_tol = cfg.abs_tol;
  return q;
}

std::string pick_format(const RunConfig& cfg, const char* fallback) {
  return cfg.output_format.empty() ? fallback : cfg.output_format;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError(message);
}

int emit(const RunConfig& cfg, const std::string& content) {
  if (!write_text(cfg.output_path, content, std::cout)) {
    std::cerr << "error: cannot write output to " << cfg.output_path << "\n";
    return kExitIo;
  }
  return kExitOk;
}

int run_gap(const RunConfig& cfg) {
  require(cfg.point_u_set, "gap requires --u");
  return emit(cfg, format_number(band_gap(cfg.point_u_meV, cfg.material)) + "\n");
}

int run_bands(const RunConfig& cfg) {
  require(cfg.point_u_set, "bands requires --u");
  const BandPair bands = band_energies(cfg.point_k_meV, cfg.point_u_meV, cfg.material);
  return emit(cfg, format_number(bands.e1_meV) + " " +
                       format_number(bands.e2_meV) + "\n");
}

int run_phase(const RunConfig& cfg) {
  require(cfg.point_u_set, "phase requires --u");
  return emit(cfg, std::string(phase_name(classify_phase(cfg.point_u_meV,
                                                         cfg.material))) + "\n");
}

int run_otto(const RunConfig& cfg) {
  require(cfg.u_hot_set && cfg.u_cold_set, "otto requires --u-hot and --u-cold");
  require(pick_format(cfg, "json") == "json", "otto reports are JSON only");
  const OttoReport report = otto_report(cfg.cycle, cfg.material, settings_from(cfg));
  SIConversion si{cfg.v_f_m_per_s};
  const std::string text =
      to_json(report, cfg.cycle, cfg.material,
              cfg.v_f_m_per_s > 0.0 ? &si : nullptr) + "\n";
  const int code = emit(cfg, text);
  if (code != kExitOk) return code;
  return report.numerics.converged ? kExitOk : kExitNumerics;
}

int run_stirling(const RunConfig& cfg) {
  require(cfg.u_hot_set && cfg.u_cold_set,
          "stirling requires --u-hot and --u-cold");
  require(pick_format(cfg, "json") == "json", "stirling reports are JSON only");
  const StirlingReport report =
      stirling_report(cfg.cycle, cfg.material, settings_from(cfg));
  SIConversion si{cfg.v_f_m_per_s};
  const std::string text =
      to_json(report, cfg.cycle, cfg.material,
              cfg.v_f_m_per_s > 0.0 ? &si : nullptr) + "\n";
  const int code = emit(cfg, text);
  if (code != kExitOk) return code;
  return report.numerics.converged && report.numerics.consistent ? kExitOk
                                                                 : kExitNumerics;
}

int run_map(const RunConfig& cfg) {
  const std::string format = pick_format(cfg, "csv");
  require(format == "csv" || format == "json", "format must be csv or json");
  const WorkMap map =
      otto_work_map(cfg.map_u_cold, cfg.map_u_hot, cfg.cycle.t_hot_K,
                    cfg.cycle.t_cold_K, cfg.material, settings_from(cfg),
                    cfg.threads);
  const int code = emit(cfg, format == "csv" ? to_csv(map) : to_json(map) + "\n");
  if (code != kExitOk) return code;
  return map.all_converged ? kExitOk : kExitNumerics;
}

int run_curve(const RunConfig& cfg) {
  const std::string format = pick_format(cfg, "csv");
  require(format == "csv" || format == "json", "format must be csv or json");
  require(cfg.sweep_cycle == "otto" || cfg.sweep_cycle == "stirling",
          "sweep cycle must be otto or stirling");
  require(cfg.sweep_quantity == "work" || cfg.sweep_quantity == "efficiency",
          "sweep quantity must be work or efficiency");
  const CycleKind kind =
      cfg.sweep_cycle == "otto" ? CycleKind::Otto : CycleKind::Stirling;

  SweepField swept;
  bool need_u_hot = true;
  bool need_u_cold = true;
  if (cfg.sweep_axis == "u_cold") {
    swept = SweepField::UCold;
    need_u_cold = false;
  } else if (cfg.sweep_axis == "u_hot") {
    swept = SweepField::UHot;
    need_u_hot = false;
  } else if (cfg.sweep_axis == "t_hot") {
    swept = SweepField::THot;
  } else if (cfg.sweep_axis == "t_cold") {
    swept = SweepField::TCold;
  } else {
    throw ConfigError("sweep axis must be one of u_cold, u_hot, t_hot, t_cold");
  }
  require(!need_u_hot || cfg.u_hot_set, "curve requires --u-hot");
  require(!need_u_cold || cfg.u_cold_set, "curve requires --u-cold");

  const Curve curve =
      cfg.sweep_quantity == "work"
          ? work_curve(kind, cfg.cycle, swept, cfg.sweep_grid, cfg.material,
                       settings_from(cfg), cfg.threads)
          : efficiency_curve(kind, cfg.cycle, swept, cfg.sweep_grid,
                             cfg.material, settings_from(cfg), cfg.threads);
  const int code =
      emit(cfg, format == "csv" ? to_csv(curve) : to_json(curve) + "\n");
  if (code != kExitOk) return code;
  return curve.all_converged ? kExitOk : kExitNumerics;
}

int dispatch(const RunConfig& cfg) {
  if (cfg.command == "gap") return run_gap(cfg);
  if (cfg.command == "bands") return run_bands(cfg);
  if (cfg.command == "phase") return run_phase(cfg);
  if (cfg.command == "otto") return run_otto(cfg);
  if (cfg.command == "stirling") return run_stirling(cfg);
  if (cfg.command == "map") return run_map(cfg);
  if (cfg.command == "curve") return run_curve(cfg);
  throw ConfigError("no command given; expected one of gap, bands, phase, "
                    "otto, stirling, map, curve");
}

// Options shared by the subcommands, each remembering whether it was set on
// the command line so it can override the config file.
struct FlagSet {
  CLI::Option* lambda_so = nullptr;
  CLI::Option* u = nullptr;
  CLI::Option* k = nullptr;
  CLI::Option* t_hot = nullptr;
  CLI::Option* t_cold = nullptr;
  CLI::Option* u_hot = nullptr;
  CLI::Option* u_cold = nullptr;
  CLI::Option* cycle = nullptr;
  CLI::Option* quantity = nullptr;
  CLI::Option* axis = nullptr;
  CLI::Option* start = nullptr;
  CLI::Option* stop = nullptr;
  CLI::Option* steps = nullptr;
  CLI::Option* u_cold_start = nullptr;
  CLI::Option* u_cold_stop = nullptr;
  CLI::Option* u_cold_steps = nullptr;
  CLI::Option* u_hot_start = nullptr;
  CLI::Option* u_hot_stop = nullptr;
  CLI::Option* u_hot_steps = nullptr;
  CLI::Option* rel_tol = nullptr;
  CLI::Option* abs_tol = nullptr;
  CLI::Option* threads = nullptr;
  CLI::Option* output = nullptr;
  CLI::Option* format = nullptr;
  CLI::Option* v_f = nullptr;

  double lambda_so_v = 30.0, u_v = 0.0, k_v = 0.0;
  double t_hot_v = 40.0, t_cold_v = 30.0, u_hot_v = 0.0, u_cold_v = 0.0;
  std::string cycle_v = "otto", quantity_v = "work", axis_v = "u_cold";
  double start_v = 0.0, stop_v = 40.0;
  int steps_v = 161;
  double uc_start_v = 0.0, uc_stop_v = 40.0;
  int uc_steps_v = 161;
  double uh_start_v = 0.0, uh_stop_v = 40.0;
  int uh_steps_v = 161;
  double rel_tol_v = 1e-9, abs_tol_v = 1e-14;
  int threads_v = 0;
  std::string output_v = "-", format_v;
  double v_f_v = 0.0;
};

void add_common(CLI::App* cmd, FlagSet& f) {
  f.lambda_so = cmd->add_option("--lambda-so", f.lambda_so_v,
                                "Spin-orbit coupling (meV)");
  f.rel_tol = cmd->add_option("--rel-tol", f.rel_tol_v, "Quadrature relative tolerance");
  f.abs_tol = cmd->add_option("--abs-tol", f.abs_tol_v, "Quadrature absolute floor");
  f.output = cmd->add_option("--output,-o", f.output_v, "Output path ('-' = stdout)");
  f.format = cmd->add_option("--format", f.format_v, "Output format: csv or json");
}

void add_cycle(CLI::App* cmd, FlagSet& f) {
  f.t_hot = cmd->add_option("--t-hot", f.t_hot_v, "Hot bath temperature (K)");
  f.t_cold = cmd->add_option("--t-cold", f.t_cold_v, "Cold bath temperature (K)");
  f.u_hot = cmd->add_option("--u-hot", f.u_hot_v, "Field potential, hot stroke (meV)");
  f.u_cold = cmd->add_option("--u-cold", f.u_cold_v, "Field potential, cold stroke (meV)");
}

void merge(const FlagSet& f, RunConfig& cfg) {
  const auto set_if = [](CLI::Option* opt, auto& dst, const auto& src) {
    if (opt != nullptr && opt->count() > 0) dst = src;
  };
  set_if(f.lambda_so, cfg.material.lambda_so_meV, f.lambda_so_v);
  if (f.u != nullptr && f.u->count() > 0) {
    cfg.point_u_meV = f.u_v;
    cfg.point_u_set = true;
  }
  set_if(f.k, cfg.point_k_meV, f.k_v);
  set_if(f.t_hot, cfg.cycle.t_hot_K, f.t_hot_v);
  set_if(f.t_cold, cfg.cycle.t_cold_K, f.t_cold_v);
  if (f.u_hot != nullptr && f.u_hot->count() > 0) {
    cfg.cycle.u_hot_meV = f.u_hot_v;
    cfg.u_hot_set = true;
  }
  if (f.u_cold != nullptr && f.u_cold->count() > 0) {
    cfg.cycle.u_cold_meV = f.u_cold_v;
    cfg.u_cold_set = true;
  }
  set_if(f.cycle, cfg.sweep_cycle, f.cycle_v);
  set_if(f.quantity, cfg.sweep_quantity, f.quantity_v);
  set_if(f.axis, cfg.sweep_axis, f.axis_v);
  set_if(f.start, cfg.sweep_grid.start, f.start_v);
  set_if(f.stop, cfg.sweep_grid.stop, f.stop_v);
  set_if(f.steps, cfg.sweep_grid.steps, f.steps_v);
  set_if(f.u_cold_start, cfg.map_u_cold.start, f.uc_start_v);
  set_if(f.u_cold_stop, cfg.map_u_cold.stop, f.uc_stop_v);
  set_if(f.u_cold_steps, cfg.map_u_cold.steps, f.uc_steps_v);
  set_if(f.u_hot_start, cfg.map_u_hot.start, f.uh_start_v);
  set_if(f.u_hot_stop, cfg.map_u_hot.stop, f.uh_stop_v);
  set_if(f.u_hot_steps, cfg.map_u_hot.steps, f.uh_steps_v);
  set_if(f.rel_tol, cfg.rel_tol, f.rel_tol_v);
  set_if(f.abs_tol, cfg.abs_tol, f.abs_tol_v);
  set_if(f.threads, cfg.threads, f.threads_v);
  set_if(f.output, cfg.output_path, f.output_v);
  set_if(f.format, cfg.output_format, f.format_v);
  set_if(f.v_f, cfg.v_f_m_per_s, f.v_f_v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum Otto and Stirling cycles on a gapped 2D Dirac material"};
  app.require_subcommand(0, 1);
  app.fallthrough();  // --config / --dump-config may follow a subcommand

  std::string config_path;
  bool dump = false;
  app.add_option("--config", config_path, "JSON config file (flags override it)");
  app.add_flag("--dump-config", dump,
               "Print the effective config as JSON and exit");

  FlagSet gap_f, bands_f, phase_f, otto_f, stirling_f, map_f, curve_f;

  CLI::App* gap_cmd = app.add_subcommand("gap", "Band gap at a field potential");
  add_common(gap_cmd, gap_f);
  gap_f.u = gap_cmd->add_option("--u", gap_f.u_v, "Field potential (meV)");

  CLI::App* bands_cmd = app.add_subcommand("bands", "Positive band energies at (k, u)");
  add_common(bands_cmd, bands_f);
  bands_f.u = bands_cmd->add_option("--u", bands_f.u_v, "Field potential (meV)");
  bands_f.k = bands_cmd->add_option("--k", bands_f.k_v, "Radial momentum (meV)");

  CLI::App* phase_cmd = app.add_subcommand("phase", "Phase classification at u");
  add_common(phase_cmd, phase_f);
  phase_f.u = phase_cmd->add_option("--u", phase_f.u_v, "Field potential (meV)");

  CLI::App* otto_cmd = app.add_subcommand("otto", "Quantum Otto cycle report");
  add_common(otto_cmd, otto_f);
  add_cycle(otto_cmd, otto_f);
  otto_f.v_f = otto_cmd->add_option("--v-f", otto_f.v_f_v,
                                    "Fermi velocity (m/s) for SI conversion");

  CLI::App* stirling_cmd = app.add_subcommand("stirling", "Stirling cycle report");
  add_common(stirling_cmd, stirling_f);
  add_cycle(stirling_cmd, stirling_f);
  stirling_f.v_f = stirling_cmd->add_option(
      "--v-f", stirling_f.v_f_v, "Fermi velocity (m/s) for SI conversion");

  CLI::App* map_cmd =
      app.add_subcommand("map", "Otto work map over (u_cold, u_hot)");
  add_common(map_cmd, map_f);
  map_f.t_hot = map_cmd->add_option("--t-hot", map_f.t_hot_v, "Hot bath (K)");
  map_f.t_cold = map_cmd->add_option("--t-cold", map_f.t_cold_v, "Cold bath (K)");
  map_f.u_cold_start = map_cmd->add_option("--u-cold-start", map_f.uc_start_v, "");
  map_f.u_cold_stop = map_cmd->add_option("--u-cold-stop", map_f.uc_stop_v, "");
  map_f.u_cold_steps = map_cmd->add_option("--u-cold-steps", map_f.uc_steps_v, "");
  map_f.u_hot_start = map_cmd->add_option("--u-hot-start", map_f.uh_start_v, "");
  map_f.u_hot_stop = map_cmd->add_option("--u-hot-stop", map_f.uh_stop_v, "");
  map_f.u_hot_steps = map_cmd->add_option("--u-hot-steps", map_f.uh_steps_v, "");
  map_f.threads = map_cmd->add_option("--threads", map_f.threads_v,
                                      "Worker threads (0 = OpenMP default)");

  CLI::App* curve_cmd =
      app.add_subcommand("curve", "Work or efficiency curve along one axis");
  add_common(curve_cmd, curve_f);
  add_cycle(curve_cmd, curve_f);
  curve_f.cycle = curve_cmd->add_option("--cycle", curve_f.cycle_v,
                                        "otto or stirling");
  curve_f.quantity = curve_cmd->add_option("--quantity", curve_f.quantity_v,
                                           "work or efficiency");
  curve_f.axis = curve_cmd->add_option("--sweep", curve_f.axis_v,
                                       "Swept field: u_cold, u_hot, t_hot, t_cold");
  curve_f.start = curve_cmd->add_option("--start", curve_f.start_v, "Axis start");
  curve_f.stop = curve_cmd->add_option("--stop", curve_f.stop_v, "Axis stop");
  curve_f.steps = curve_cmd->add_option("--steps", curve_f.steps_v, "Axis nodes");
  curve_f.threads = curve_cmd->add_option("--threads", curve_f.threads_v,
                                          "Worker threads (0 = OpenMP default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  RunConfig cfg;
  try {
    if (!config_path.empty()) apply_config_file(cfg, config_path);

    CLI::App* chosen = nullptr;
    FlagSet* flags = nullptr;
    const std::pair<CLI::App*, FlagSet*> table[] = {
        {gap_cmd, &gap_f},         {bands_cmd, &bands_f},
        {phase_cmd, &phase_f},     {otto_cmd, &otto_f},
        {stirling_cmd, &stirling_f}, {map_cmd, &map_f},
        {curve_cmd, &curve_f}};
    for (const auto& [cmd, fs] : table) {
      if (cmd->parsed()) {
        chosen = cmd;
        flags = fs;
      }
    }
    if (chosen != nullptr) {
      cfg.command = chosen->get_name();
      merge(*flags, cfg);
    }

    if (dump) {
      std::cout << dump_config(cfg).dump(2) << "\n";
      return kExitOk;
    }
    return dispatch(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "run with --help for usage\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
