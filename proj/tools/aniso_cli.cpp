// Command-line front end over the C API. Exit codes: 0 pass, 1 quantitative
// failure, 2 input or usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "aniso/aniso.h"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct RunConfig {
  std::string matrix;
  std::string measure;
  double ratio = 0.0;
  double p = 1.0;
  int k_min = -8;
  int k_max = 8;
  std::uint64_t seed = 7;
  int resolution = 0;
  double threshold = std::numeric_limits<double>::infinity();
  std::string out;
  std::string csv;
  std::string suite;
};

struct UsageError {
  std::string name;
  std::string message;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out += c;
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError{"ParseError", "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError{"InvalidArgument", "cannot write " + path};
  out << text;
}

void check(aniso_status status) {
  if (status != ANISO_OK) throw UsageError{aniso_status_name(status), aniso_last_error()};
}

struct StringDeleter {
  void operator()(char* s) const { aniso_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct GeometryDeleter {
  void operator()(aniso_geometry* g) const { aniso_geometry_free(g); }
};
struct MeasureDeleter {
  void operator()(aniso_measure* m) const { aniso_measure_free(m); }
};

std::unique_ptr<aniso_geometry, GeometryDeleter> load_geometry(const std::string& path, double ratio) {
  if (path.empty()) throw UsageError{"InvalidArgument", "--matrix is required"};
  const std::string text = read_file(path);
  aniso_geometry* g = nullptr;
  check(aniso_geometry_from_json(text.c_str(), ratio, &g));
  return std::unique_ptr<aniso_geometry, GeometryDeleter>(g);
}

int cmd_geometry(const RunConfig& cfg) {
  auto geometry = load_geometry(cfg.matrix, cfg.ratio);
  char* json = nullptr;
  check(aniso_geometry_report(geometry.get(), &json));
  OwnedString owned(json);
  write_output(cfg.out, json);
  return kPass;
}

int cmd_criterion(const RunConfig& cfg) {
  if (!(cfg.p >= 1.0) || !std::isfinite(cfg.p)) throw UsageError{"InvalidExponent", "--p must be >= 1"};
  if (cfg.k_min > cfg.k_max) throw UsageError{"InvalidRange", "--k-min exceeds --k-max"};
  if (cfg.measure.empty()) throw UsageError{"InvalidArgument", "--measure is required"};
  auto geometry = load_geometry(cfg.matrix, cfg.ratio);
  const std::string text = read_file(cfg.measure);
  aniso_measure* raw = nullptr;
  check(aniso_measure_from_json(geometry.get(), text.c_str(), cfg.seed, &raw));
  std::unique_ptr<aniso_measure, MeasureDeleter> measure(raw);

  aniso_criterion_result result{};
  char* json = nullptr;
  char* csv = nullptr;
  check(aniso_criterion(geometry.get(), measure.get(), cfg.p, cfg.k_min, cfg.k_max, &result, &json,
                        cfg.csv.empty() ? nullptr : &csv));
  OwnedString owned_json(json), owned_csv(csv);
  write_output(cfg.out, json);
  if (!cfg.csv.empty()) write_output(cfg.csv, csv);
  if (!result.interior)
    std::cerr << "warning: sup attained at the endpoint k = " << result.argmax_k
              << "; widen the k range\n";
  return result.sup_value <= cfg.threshold ? kPass : kFail;
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.suite.empty()) throw UsageError{"InvalidArgument", "a suite name is required"};
  if (cfg.resolution != 0 && cfg.resolution < 64)
    throw UsageError{"InvalidArgument", "--resolution must be >= 64"};
  std::string matrix_text;
  if (!cfg.matrix.empty()) matrix_text = read_file(cfg.matrix);
  int passed = 0;
  char* json = nullptr;
  check(aniso_verify(cfg.suite.c_str(), cfg.seed, cfg.resolution,
                     matrix_text.empty() ? nullptr : matrix_text.c_str(), &passed, &json));
  OwnedString owned(json);
  write_output(cfg.out, json);
  return passed ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Anisotropic multiplier criterion toolkit"};
  app.set_version_flag("--version", std::string(aniso_version()));
  app.require_subcommand(1);
  RunConfig cfg;

  auto* geometry = app.add_subcommand("geometry", "Dilation, ellipsoid and rectangle report");
  geometry->add_option("--matrix", cfg.matrix, "Matrix JSON file")->required();
  geometry->add_option("--ratio", cfg.ratio, "Ellipsoid series parameter r (0 = sqrt(m_minus))");
  geometry->add_option("--out", cfg.out, "Output file (default stdout)");

  auto* criterion = app.add_subcommand("criterion", "Evaluate the lattice or annulus criterion");
  criterion->add_option("--matrix", cfg.matrix, "Matrix JSON file")->required();
  criterion->add_option("--measure", cfg.measure, "Measure JSON file")->required();
  criterion->add_option("--ratio", cfg.ratio, "Ellipsoid series parameter r (0 = sqrt(m_minus))");
  criterion->add_option("--p", cfg.p, "Exponent p >= 1")->capture_default_str();
  criterion->add_option("--k-min", cfg.k_min, "Smallest scale")->capture_default_str();
  criterion->add_option("--k-max", cfg.k_max, "Largest scale")->capture_default_str();
  criterion->add_option("--seed", cfg.seed, "Seed for density discretization")->capture_default_str();
  criterion->add_option("--threshold", cfg.threshold, "Exit 1 when the sup exceeds this");
  criterion->add_option("--out", cfg.out, "JSON output file (default stdout)");
  criterion->add_option("--csv", cfg.csv, "Per-scale CSV output file");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite,--suite", cfg.suite, "Suite name");
  verify->add_option("--matrix", cfg.matrix, "Matrix JSON file replacing the default of its dimension");
  verify->add_option("--seed", cfg.seed, "Seed")->capture_default_str();
  verify->add_option("--resolution", cfg.resolution, "Resolution per axis (0 = suite default)");
  verify->add_option("--out", cfg.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*geometry) return cmd_geometry(cfg);
    if (*criterion) return cmd_criterion(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.name << ": " << e.message << "\n";
    const std::string object =
        "{\"error\": \"" + json_escape(e.name) + "\", \"message\": \"" + json_escape(e.message) + "\"}\n";
    try {
      write_output(cfg.out, object);
    } catch (const UsageError&) {
      std::cout << object;
    }
    return kUsage;
  }
}
