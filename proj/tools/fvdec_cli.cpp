// Command-line frontend: single runs, convergence studies, CFL sweeps and
// post-processing exports.  Exit codes: 0 success, 1 configuration error,
// 2 simulation crash.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fvdec/benchmarks.hpp"
#include "fvdec/io.hpp"

namespace fs = std::filesystem;
using namespace fvdec;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCrash = 2;

struct Options {
  std::string problem;
  int order = 3;
  std::string flux = "force-2";
  double sigma = 0.9;
  std::string cells;
  std::optional<double> tf;
  std::string out = ".";
  bool deterministic = false;
  double epsilon = kWenoEpsilon;
};

void add_common(CLI::App* app, Options& o, bool flux_list) {
  app->add_option("--problem", o.problem, "Problem identifier")->required();
  app->add_option("--order", o.order, "Order of accuracy")->check(CLI::IsMember({3, 5, 7}));
  app->add_option("--flux", o.flux,
                  flux_list ? "Flux, comma-separated list of fluxes, or 'all'"
                            : "force-ALPHA, rusanov, hll or exact-rs");
  app->add_option("--sigma", o.sigma, "Fraction of the maximum stable CFL number");
  app->add_option("--cells", o.cells, "Cell counts NX or NXxNY");
  app->add_option("--tf", o.tf, "Final time (overrides the problem's)");
  app->add_option("--out", o.out, "Output directory");
  app->add_flag("--deterministic", o.deterministic, "Request bitwise-reproducible output");
  app->add_option("--epsilon", o.epsilon, "WENO weight regularization");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || v < 1) throw Error(ErrorCode::InvalidArgument, "invalid " + what + " '" + s + "'");
  return v;
}

double parse_real(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size()) throw Error(ErrorCode::InvalidArgument, "invalid " + what + " '" + s + "'");
  return v;
}

std::pair<int, int> default_cells(const std::string& problem) {
  if (problem == "advection") return {160, 1};
  if (problem == "shock-turbulence") return {1500, 1};
  if (problem == "vortex") return {160, 160};
  if (problem == "vortex-long") return {50, 50};
  if (problem == "explosion") return {50, 50};
  if (problem == "shock-vortex" || problem == "shock-vortex-base") return {200, 100};
  return {100, 1};
}

std::pair<int, int> parse_cells(const std::string& text, const std::string& problem, int dim) {
  if (text.empty()) return default_cells(problem);
  const auto x = text.find('x');
  if (x == std::string::npos) {
    const int n = parse_int(text, "cell count");
    return {n, dim == 2 ? n : 1};
  }
  if (dim == 1) throw Error(ErrorCode::InvalidArgument, "NXxNY cell counts need a 2D problem");
  return {parse_int(text.substr(0, x), "cell count"), parse_int(text.substr(x + 1), "cell count")};
}

RunConfig make_config(const Options& o, int dim, const std::string& flux) {
  RunConfig c;
  c.order = o.order;
  c.flux = parse_flux(flux);
  c.sigma = o.sigma;
  c.final_time = o.tf;
  const auto [nx, ny] = parse_cells(o.cells, o.problem, dim);
  c.nx = nx;
  c.ny = ny;
  c.deterministic = o.deterministic;
  c.weno_epsilon = o.epsilon;
  validate_config(c, dim);
  return c;
}

Manifest base_manifest(const std::string& command, const Options& o, const RunConfig& c) {
  return {{"program", "fvdec"},
          {"command", command},
          {"problem", o.problem},
          {"order", std::to_string(c.order)},
          {"flux", flux_name(c.flux)},
          {"sigma", format_double(c.sigma)},
          {"cells", std::to_string(c.nx) + "x" + std::to_string(c.ny)},
          {"final_time", c.final_time ? format_double(*c.final_time) : "problem default"},
          {"weno_epsilon", format_double(c.weno_epsilon)},
          {"deterministic", o.deterministic ? "true" : "false"}};
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  return os;
}

void write_report(const fs::path& path, const RunReport& r, Manifest manifest) {
  std::ofstream os = open_output(path);
  write_manifest(os, manifest);
  os << "key,value\n";
  os << "status," << (r.crash ? "crashed" : "completed") << '\n';
  os << "steps," << r.steps << '\n';
  os << "final_time," << format_double(r.final_time) << '\n';
  os << "wall_seconds," << format_double(r.wall_seconds) << '\n';
  if (r.crash) {
    std::string cause = r.crash->cause;
    std::replace(cause.begin(), cause.end(), ',', ';');
    os << "crash_cause," << cause << '\n';
    os << "crash_time," << format_double(r.crash->time) << '\n';
    os << "crash_step," << r.crash->step << '\n';
  }
}

template <int Dim>
ProblemSpec<Dim> load_problem(const std::string& id) {
  if constexpr (Dim == 1) return problem_1d(id);
  else return problem_2d(id);
}

template <int Dim>
int do_run(const Options& o, bool reference, std::optional<double> cfl) {
  const ProblemSpec<Dim> problem = load_problem<Dim>(o.problem);
  const RunConfig c = make_config(o, Dim, o.flux);
  Manifest manifest = base_manifest("run", o, c);
  RunResult<Dim> res;
  if (reference) {
    const double ref_cfl = cfl.value_or(Dim == 1 ? 0.5 : 0.25);
    manifest = {{"program", "fvdec"},
                {"command", "run --reference"},
                {"problem", o.problem},
                {"scheme", "MUSCL minmod characteristic, exact Riemann solver, SSPRK2"},
                {"cells", std::to_string(c.nx) + "x" + std::to_string(c.ny)},
                {"cfl", format_double(ref_cfl)}};
    res = reference_solver<Dim>(problem, c.nx, c.ny, ref_cfl, c.final_time);
  } else {
    manifest.emplace_back("scheme", "WENO-DeC");
    res = run<Dim>(problem, c);
  }
  manifest.emplace_back("steps", std::to_string(res.report.steps));
  const fs::path dir(o.out);
  {
    std::ofstream os = open_output(dir / "field.csv");
    write_field_csv<Dim>(os, res.field, problem.gas, manifest);
  }
  if constexpr (Dim == 1) {
    if (reference) {
      std::ofstream os = open_output(dir / "profile.csv");
      write_profile_csv(os, res.field, problem.gas, manifest);
    }
  }
  write_report(dir / "report.csv", res.report, manifest);
  if (res.report.crash) {
    const CrashInfo& k = *res.report.crash;
    std::cerr << "simulation crash: " << k.cause << " (time " << format_double(k.time) << ", step "
              << k.step << ", " << to_string(k.code) << ")\n";
    return kExitCrash;
  }
  std::cout << "completed " << res.report.steps << " steps to t = " << format_double(res.report.final_time)
            << " in " << res.report.wall_seconds << " s; wrote " << (dir / "field.csv").string() << '\n';
  return kExitOk;
}

std::vector<std::string> expand_fluxes(const std::string& text, int dim) {
  if (text == "all") {
    std::vector<std::string> all = {"force-1", "force-2", "force-3", "force-5",
                                    "force-10", "rusanov", "hll", "exact-rs"};
    if (dim == 2) all.erase(all.begin());
    return all;
  }
  return split(text, ',');
}

template <int Dim>
int do_convergence(const Options& o, const std::string& meshes_text) {
  const ProblemSpec<Dim> problem = load_problem<Dim>(o.problem);
  if (!problem.exact)
    throw Error(ErrorCode::InvalidArgument, "problem '" + o.problem + "' has no exact solution");
  std::vector<int> meshes;
  for (const std::string& m : split(meshes_text, ',')) meshes.push_back(parse_int(m, "mesh size"));
  if (meshes.empty()) throw Error(ErrorCode::InvalidArgument, "empty mesh list");
  const std::vector<std::string> fluxes = expand_fluxes(o.flux, Dim);
  std::vector<RunConfig> configs;
  for (const std::string& f : fluxes) configs.push_back(make_config(o, Dim, f));
  for (const RunConfig& c : configs) {
    const std::vector<ConvergenceRow> rows = convergence_study<Dim>(problem, c, meshes);
    Manifest manifest = base_manifest("convergence", o, c);
    std::erase_if(manifest, [](const auto& kv) { return kv.first == "cells"; });
    manifest.emplace_back("meshes", meshes_text);
    const fs::path path = fs::path(o.out) / ("convergence_" + o.problem + "_order" +
                                             std::to_string(c.order) + "_" + flux_name(c.flux) + ".csv");
    std::ofstream os = open_output(path);
    write_convergence_csv(os, rows, manifest);
    std::cout << flux_name(c.flux) << ":";
    for (const ConvergenceRow& r : rows) {
      std::cout << "  N=" << r.n << ' ';
      if (r.crash) std::cout << "crash";
      else std::cout << "L1=" << r.errors.l1;
      if (r.order_l1) std::cout << " (" << *r.order_l1 << ")";
    }
    std::cout << "\n";
  }
  return kExitOk;
}

template <int Dim>
int do_sweep(const Options& o, const std::string& sigmas_text) {
  const ProblemSpec<Dim> problem = load_problem<Dim>(o.problem);
  std::vector<double> sigmas;
  for (const std::string& s : split(sigmas_text, ',')) sigmas.push_back(parse_real(s, "sigma"));
  for (const std::string& f : expand_fluxes(o.flux, Dim)) {
    const RunConfig base = make_config(o, Dim, f);
    std::vector<SweepRow> rows;
    for (double s : sigmas) {
      RunConfig c = base;
      c.sigma = s;
      validate_config(c, Dim);
      const RunResult<Dim> res = run<Dim>(problem, c);
      SweepRow row{s, !res.report.crash, res.report.steps, res.report.final_time,
                   res.report.crash ? res.report.crash->cause : ""};
      rows.push_back(row);
    }
    Manifest manifest = base_manifest("sweep-sigma", o, base);
    manifest.emplace_back("sigmas", sigmas_text);
    const fs::path path = fs::path(o.out) / ("sweep_" + o.problem + "_order" +
                                             std::to_string(base.order) + "_" + flux_name(base.flux) + ".csv");
    std::ofstream os = open_output(path);
    write_sweep_csv(os, rows, manifest);
    std::cout << flux_name(base.flux) << ": max stable sigma = " << max_stable_sigma(rows) << '\n';
  }
  return kExitOk;
}

int do_export(const std::string& in_dir, const std::string& what, const std::string& out_file,
              double K) {
  const fs::path src = fs::path(in_dir) / "field.csv";
  std::ifstream is(src);
  if (!is) throw Error(ErrorCode::InvalidArgument, "missing run output '" + src.string() + "'");
  Manifest manifest = read_manifest(is);
  is.clear();
  is.seekg(0);
  const int dim = std::stoi(manifest_value(manifest, "dim"));
  const GasModel gas{std::stod(manifest_value(manifest, "gamma"))};
  manifest.emplace_back("export", what);
  const fs::path out = out_file.empty() ? fs::path(in_dir) / (what + ".csv") : fs::path(out_file);
  if (dim == 1) {
    if (what != "profile" && what != "exact")
      throw Error(ErrorCode::InvalidArgument, "1D fields support '--what profile' or '--what exact'");
    CellField<1> field = read_field_csv<1>(is);
    if (what == "exact") {
      const ProblemSpec<1> problem = problem_1d(manifest_value(manifest, "problem"), gas);
      if (!problem.exact)
        throw Error(ErrorCode::InvalidArgument, "problem '" + problem.id + "' has no exact solution");
      const double t = field.time;
      field = exact_cell_averages<1>(problem, field.grid, 7, t);
    }
    std::ofstream os = open_output(out);
    write_profile_csv(os, field, gas, manifest);
  } else {
    const CellField<2> field = read_field_csv<2>(is);
    std::ofstream os = open_output(out);
    if (what == "schlieren") {
      manifest.emplace_back("K", format_double(K));
      write_schlieren_csv(os, schlieren_field(field, K), field.grid.nx, field.grid.ny, manifest);
    } else if (what == "diagonal") {
      write_slice_csv(os, slice_extract(field, {SliceKind::Diagonal, 0.0}), gas, manifest);
    } else if (what.rfind("slice-x=", 0) == 0) {
      write_slice_csv(os, slice_extract(field, {SliceKind::XConst, parse_real(what.substr(8), "slice")}),
                      gas, manifest);
    } else if (what.rfind("slice-y=", 0) == 0) {
      write_slice_csv(os, slice_extract(field, {SliceKind::YConst, parse_real(what.substr(8), "slice")}),
                      gas, manifest);
    } else {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown export '" + what + "' (schlieren, diagonal, slice-x=C, slice-y=C)");
    }
  }
  std::cout << "wrote " << out.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"High-order WENO-DeC finite-volume solver for the Euler equations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "",
                 "TOML file; options go in a section named after the subcommand, e.g. [run]");

  Options run_opts;
  bool reference = false;
  std::optional<double> ref_cfl;
  CLI::App* run_cmd = app.add_subcommand("run", "Run one simulation and write field.csv and report.csv");
  add_common(run_cmd, run_opts, false);
  run_cmd->add_flag("--reference", reference, "Use the second-order MUSCL reference scheme");
  run_cmd->add_option("--cfl", ref_cfl, "CFL number of the reference scheme");

  Options conv_opts;
  std::string meshes = "160,320,640";
  CLI::App* conv_cmd = app.add_subcommand("convergence", "Convergence table against the exact solution");
  add_common(conv_cmd, conv_opts, true);
  conv_cmd->add_option("--meshes", meshes, "Comma-separated mesh sizes");

  Options sweep_opts;
  std::string sigmas = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  CLI::App* sweep_cmd = app.add_subcommand("sweep-sigma", "Completed/crashed status over a sigma grid");
  add_common(sweep_cmd, sweep_opts, true);
  sweep_cmd->add_option("--sigmas", sigmas, "Comma-separated sigma values");

  std::string in_dir, what, out_file;
  double K = 80.0;
  CLI::App* export_cmd = app.add_subcommand("export", "Schlieren image or slices of a finished run");
  export_cmd->add_option("--in", in_dir, "Run output directory containing field.csv")->required();
  export_cmd->add_option("--what", what, "schlieren, diagonal, slice-x=C, slice-y=C (2D); profile or exact (1D)")
      ->required();
  export_cmd->add_option("--out", out_file, "Output file (default: IN/WHAT.csv)");
  export_cmd->add_option("--k", K, "Schlieren contrast constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      return problem_dimension(run_opts.problem) == 1 ? do_run<1>(run_opts, reference, ref_cfl)
                                                      : do_run<2>(run_opts, reference, ref_cfl);
    }
    if (*conv_cmd) {
      return problem_dimension(conv_opts.problem) == 1 ? do_convergence<1>(conv_opts, meshes)
                                                       : do_convergence<2>(conv_opts, meshes);
    }
    if (*sweep_cmd) {
      return problem_dimension(sweep_opts.problem) == 1 ? do_sweep<1>(sweep_opts, sigmas)
                                                        : do_sweep<2>(sweep_opts, sigmas);
    }
    return do_export(in_dir, what, out_file, K);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << " (" << to_string(e.code()) << ")\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}
