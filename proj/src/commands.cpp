#include "shiner/commands.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "shiner/config.hpp"
#include "shiner/csv_io.hpp"
#include "shiner/density.hpp"
#include "shiner/engine.hpp"
#include "shiner/svg.hpp"

namespace shiner::cli {

namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RenderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

struct SimulateFlags {
  std::string config_path;
  std::optional<std::string> seed, steps, stride, mode, out_dir;
  unsigned threads = 1;
};

int cmd_simulate(const SimulateFlags& flags, std::ostream& out) {
  RunConfig config = flags.config_path.empty() ? RunConfig{} : parse_config(read_file(flags.config_path));
  const std::pair<const char*, const std::optional<std::string>*> overrides[] = {
      {"seed", &flags.seed}, {"steps", &flags.steps}, {"stride", &flags.stride},
      {"mode", &flags.mode}, {"out_dir", &flags.out_dir}};
  for (const auto& [key, value] : overrides) {
    if (*value) apply_config_value(config, key, **value);
  }
  config.validate();

  RunOptions options;
  options.master_seed = config.seed;
  options.region = config.region;
  options.n_steps = config.steps;
  options.snapshot_stride = config.stride;
  options.eps = config.eps;
  options.threads = resolve_threads(flags.threads);
  const auto snapshots = run(config.params, options);

  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec) throw IoError("cannot create '" + config.out_dir + "': " + ec.message());

  std::ostringstream snap_csv, metrics_csv;
  csv::write_snapshots(snap_csv, snapshots);
  std::vector<Metrics> metrics;
  for (const auto& s : snapshots) metrics.push_back(s.metrics);
  csv::write_metrics(metrics_csv, metrics);
  write_file(fs::path(config.out_dir) / "snapshots.csv", snap_csv.str());
  write_file(fs::path(config.out_dir) / "metrics.csv", metrics_csv.str());

  const auto& last = metrics.back();
  out << "mode=" << mode_name(config.params.mode()) << " steps=" << config.steps
      << " mean_dist=" << csv::format_float(last.mean_dist_to_rho)
      << " frac_within_eps=" << csv::format_float(last.frac_within_eps)
      << " clusters=" << last.cluster_count << '\n';
  return kOk;
}

struct DensityFlags {
  double x0 = 0.0;
  int t = 1;
  double c1 = 1.0;
  double c2 = 0.1;
  double grid_min = -60.0;
  double grid_max = 60.0;
  std::size_t grid_points = 6001;
  double eps = 1.0;
  std::string out_path;
  unsigned threads = 0;
};

int cmd_density(const DensityFlags& flags, std::ostream& out) {
  if (flags.t < 1) throw ConfigError("t", 0, "t must be at least 1");
  const density::KernelParams params{flags.c1, flags.c2};
  const density::GridSpec grid{flags.grid_min, flags.grid_max, flags.grid_points};
  const auto curves = density::pdf_series(flags.x0, flags.t, grid, params, resolve_threads(flags.threads));

  std::ostringstream csv_out;
  csv::write_density(csv_out, curves);
  write_file(flags.out_path, csv_out.str());

  out << "t,mass,mean,mass_near\n";
  for (const auto& f : curves) {
    const auto stats = density::grid_stats(f);
    out << f.t << ',' << csv::format_float(stats.mass) << ',' << csv::format_float(stats.mean) << ','
        << csv::format_float(density::mass_near(f, flags.eps)) << '\n';
  }
  return kOk;
}

struct MetricsFlags {
  std::string in_path;
  std::string config_path;
  std::string out_path;
  double eps = 0.15;
};

int cmd_metrics(const MetricsFlags& flags, std::ostream& out) {
  const RunConfig config = flags.config_path.empty() ? RunConfig{} : parse_config(read_file(flags.config_path));
  std::istringstream in(read_file(flags.in_path));
  const auto frames = csv::read_snapshots(in);
  std::vector<Metrics> metrics;
  for (const auto& frame : frames) {
    SwarmState state;
    state.t = frame.step;
    state.positions = frame.positions;
    metrics.push_back(compute_metrics(state, config.params, flags.eps));
  }
  std::ostringstream csv_out;
  csv::write_metrics(csv_out, metrics);
  if (flags.out_path.empty()) {
    out << csv_out.str();
  } else {
    write_file(flags.out_path, csv_out.str());
  }
  return kOk;
}

struct RenderFlags {
  std::string in_path;
  std::string out_path;
  long long step = 0;
  double rho_x = 0.0;
  double rho_y = 0.0;
};

int cmd_render(const RenderFlags& flags) {
  const std::string text = read_file(flags.in_path);
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  in.seekg(0);

  std::string svg_text;
  switch (csv::detect_kind(header)) {
    case csv::FileKind::kSnapshots: {
      const auto frames = csv::read_snapshots(in);
      const auto it = std::find_if(frames.begin(), frames.end(), [&](const csv::Frame& f) {
        return static_cast<long long>(f.step) == flags.step;
      });
      if (it == frames.end()) throw RenderError("step " + std::to_string(flags.step) + " not present in '" + flags.in_path + "'");
      svg_text = svg::render_swarm(it->positions, Position{flags.rho_x, flags.rho_y}, it->step);
      break;
    }
    case csv::FileKind::kDensity: {
      const auto curves = csv::read_density(in);
      const auto it = std::find_if(curves.begin(), curves.end(), [&](const csv::DensityCurve& c) {
        return c.t == flags.step;
      });
      if (it == curves.end()) throw RenderError("t = " + std::to_string(flags.step) + " not present in '" + flags.in_path + "'");
      svg_text = svg::render_density(*it);
      break;
    }
    case csv::FileKind::kUnknown:
      throw RenderError("unrecognised CSV header '" + header + "'");
  }
  write_file(flags.out_path, svg_text);
  return kOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Swarm navigation simulator and density propagator", "shiner"};
  app.require_subcommand(1);

  SimulateFlags sim;
  auto* simulate = app.add_subcommand("simulate", "Run the 2D swarm and write snapshots.csv / metrics.csv");
  simulate->add_option("--config", sim.config_path, "key = value config file");
  simulate->add_option("--seed", sim.seed, "Master seed");
  simulate->add_option("--steps", sim.steps, "Number of steps");
  simulate->add_option("--stride", sim.stride, "Snapshot stride");
  simulate->add_option("--mode", sim.mode, "none|env|social|both");
  simulate->add_option("--out", sim.out_dir, "Output directory");
  simulate->add_option("--threads", sim.threads, "Worker threads (0 = all cores)");

  DensityFlags dens;
  auto* density_cmd = app.add_subcommand("density", "Propagate the 1D location density");
  density_cmd->add_option("--x0", dens.x0, "Starting position")->required();
  density_cmd->add_option("--t", dens.t, "Last time step (curves for 1..t)")->required();
  density_cmd->add_option("--c1", dens.c1, "Speed scale")->capture_default_str();
  density_cmd->add_option("--c2", dens.c2, "Speed offset")->capture_default_str();
  density_cmd->add_option("--grid-min", dens.grid_min)->capture_default_str();
  density_cmd->add_option("--grid-max", dens.grid_max)->capture_default_str();
  density_cmd->add_option("--grid-points", dens.grid_points)->capture_default_str();
  density_cmd->add_option("--eps", dens.eps, "Radius for the mass_near statistic")->capture_default_str();
  density_cmd->add_option("--out", dens.out_path, "Density CSV path")->required();
  density_cmd->add_option("--threads", dens.threads, "Worker threads (0 = all cores)");

  MetricsFlags met;
  auto* metrics_cmd = app.add_subcommand("metrics", "Recompute metrics from a snapshots CSV");
  metrics_cmd->add_option("--in", met.in_path, "snapshots.csv")->required();
  metrics_cmd->add_option("--eps", met.eps, "Radius for frac_within_eps")->required();
  metrics_cmd->add_option("--config", met.config_path, "Config supplying r and rho");
  metrics_cmd->add_option("--out", met.out_path, "Write CSV here instead of stdout");

  RenderFlags ren;
  auto* render_cmd = app.add_subcommand("render", "Emit an SVG for one step of a snapshots or density CSV");
  render_cmd->add_option("--in", ren.in_path)->required();
  render_cmd->add_option("--step", ren.step, "Snapshot step, or t for density files")->required();
  render_cmd->add_option("--out", ren.out_path)->required();
  render_cmd->add_option("--rho-x", ren.rho_x)->capture_default_str();
  render_cmd->add_option("--rho-y", ren.rho_y)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (*simulate) return cmd_simulate(sim, out);
    if (*density_cmd) return cmd_density(dens, out);
    if (*metrics_cmd) return cmd_metrics(met, out);
    if (*render_cmd) return cmd_render(ren);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ParamError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const csv::CsvError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIoError;
  } catch (const density::GridError& e) {
    err << "grid error: " << e.what() << '\n';
    return kGridError;
  } catch (const RenderError& e) {
    err << "render error: " << e.what() << '\n';
    return kBadRenderRequest;
  }
  return kConfigError;
}

}  // namespace shiner::cli
