#include <CLI11.hpp>
#include <rapidjson/stringbuffer.h>
#include <rapidjson/writer.h>

#include <filesystem>
#include <fstream>
#include <ostream>

#include "etg/errors.hpp"
#include "etg_cli/commands.hpp"

namespace etg::cli {

namespace {

struct Options {
  std::string config;
  std::string delta;
  std::string x0;
  int steps = 0;
  std::string mode;
  double nu1 = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::string> tolerances;
  std::string out = ".";
  bool obj = false;
  int resolution = 64;
  double extent = 2.0;
  int samples = 256;
};

struct RunOptions {
  CLI::Option* delta;
  CLI::Option* x0;
  CLI::Option* steps;
  CLI::Option* mode;
  CLI::Option* nu1;
  CLI::Option* seed;
};

RunOptions add_run_options(CLI::App& sub, Options& o) {
  sub.add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
  RunOptions r{};
  r.delta = sub.add_option("--delta", o.delta, "step parameters d1,d2,d3");
  r.x0 = sub.add_option("--x0", o.x0, "initial state x1,x2,x3");
  r.steps = sub.add_option("--steps", o.steps, "number of steps");
  r.mode = sub.add_option("--mode", o.mode, "map | elliptic | involutions | sqrt");
  r.nu1 = sub.add_option("--nu1", o.nu1, "first involution shift (default nu/2)");
  r.seed = sub.add_option("--seed", o.seed, "seed for sampled checks");
  sub.add_option("--tolerance", o.tolerances, "per-suite tolerance as name=value");
  sub.add_option("--out", o.out, "output directory");
  return r;
}

RunConfig build_config(const Options& o, const RunOptions& r) {
  RunConfig c = o.config.empty() ? RunConfig{} : load_config(o.config);
  if (r.delta->count() > 0) c.delta = parse_triple(o.delta);
  if (r.x0->count() > 0) c.x0 = parse_triple(o.x0);
  if (r.steps->count() > 0) c.steps = o.steps;
  if (r.mode->count() > 0) c.mode = parse_mode(o.mode);
  if (r.nu1->count() > 0) c.nu1 = o.nu1;
  if (r.seed->count() > 0) c.seed = o.seed;
  for (const std::string& t : o.tolerances) {
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw Error(ErrorKind::InvalidConfig, "tolerance must be given as name=value: '" + t + "'");
    }
    try {
      std::size_t used = 0;
      const std::string value = t.substr(eq + 1);
      const double v = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
      c.tolerances[t.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidConfig, "cannot parse tolerance '" + t + "'");
    }
  }
  validate(c);
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& content, std::ostream& out) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw Error(ErrorKind::InvalidConfig, "cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw Error(ErrorKind::InvalidConfig, "failed writing '" + path.string() + "'");
  out << path.string() << "\n";
}

std::string error_json(std::string_view name, std::string_view message) {
  rapidjson::StringBuffer buf;
  rapidjson::Writer<rapidjson::StringBuffer> w(buf);
  w.StartObject();
  w.Key("error");
  w.String(name.data(), static_cast<rapidjson::SizeType>(name.size()));
  w.Key("message");
  w.String(message.data(), static_cast<rapidjson::SizeType>(message.size()));
  w.EndObject();
  return std::string(buf.GetString(), buf.GetSize());
}

std::string safe_name(std::string label) {
  for (char& ch : label) {
    if (ch == '=' || ch == '+' || ch == '-') ch = '_';
  }
  return label;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Euler top: trajectories, invariant checks and geometry export", "etg"};
  app.require_subcommand(1, 1);

  Options o;
  CLI::App* evolve_cmd = app.add_subcommand("evolve", "write trajectory.csv and trajectory.json");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the invariant suites into report.json");
  CLI::App* geometry_cmd = app.add_subcommand("geometry", "export quadrics, curves and generators");
  CLI::App* config_cmd = app.add_subcommand("config", "print the normalized configuration");
  const RunOptions re = add_run_options(*evolve_cmd, o);
  const RunOptions rv = add_run_options(*verify_cmd, o);
  const RunOptions rg = add_run_options(*geometry_cmd, o);
  const RunOptions rc = add_run_options(*config_cmd, o);
  geometry_cmd->add_flag("--obj", o.obj, "also write OBJ meshes and polylines");
  geometry_cmd->add_option("--resolution", o.resolution, "mesh resolution per direction")
      ->check(CLI::PositiveNumber);
  geometry_cmd->add_option("--extent", o.extent, "ruling parameter range |v| <= extent")
      ->check(CLI::PositiveNumber);
  geometry_cmd->add_option("--samples", o.samples, "samples per curve component")
      ->check(CLI::Range(2, 1 << 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("InvalidConfig", e.what()) << "\n";
    return 2;
  }

  try {
    const std::filesystem::path dir(o.out);
    if (*config_cmd) {
      out << serialize_config(build_config(o, rc));
      return 0;
    }
    if (*evolve_cmd) {
      const RunConfig c = build_config(o, re);
      const Trajectory t = evolve(c);
      std::filesystem::create_directories(dir);
      write_file(dir / "trajectory.csv", trajectory_csv(t), out);
      write_file(dir / "trajectory.json", trajectory_json(c, t), out);
      return 0;
    }
    if (*verify_cmd) {
      const RunConfig c = build_config(o, rv);
      const VerifyReport r = verify(c);
      std::filesystem::create_directories(dir);
      write_file(dir / "report.json", report_json(c, r), out);
      for (const SuiteResult& s : r.suites) {
        if (!s.pass) {
          err << error_json("VerificationFailure", "suite '" + s.name + "' exceeded its tolerance")
              << "\n";
        }
      }
      return r.all_pass() ? 0 : 1;
    }
    const RunConfig c = build_config(o, rg);
    GeometryOptions opt;
    opt.resolution = o.resolution;
    opt.extent = o.extent;
    opt.curve_samples = o.samples;
    const GeometryBundle b = geometry(c, opt);
    std::filesystem::create_directories(dir);
    write_file(dir / "geometry.json", bundle_json(c, b), out);
    if (o.obj) {
      for (const LabeledQuadric& q : b.quadrics) {
        const std::string mesh = quadric_obj(q, o.resolution, o.extent);
        if (!mesh.empty()) write_file(dir / ("quadric_" + safe_name(q.label) + ".obj"), mesh, out);
      }
      write_file(dir / "curves.obj", polylines_obj(b.curves), out);
      write_file(dir / "generators.obj", segments_obj(b.generators), out);
    }
    return 0;
  } catch (const Error& e) {
    err << error_json(e.name(), e.what()) << "\n";
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    err << error_json("InvalidConfig", e.what()) << "\n";
    return 2;
  }
}

}  // namespace etg::cli
