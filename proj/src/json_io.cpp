#include "aniso/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aniso/error.hpp"

namespace aniso {

const char* library_version() noexcept { return ANISO_VERSION_STRING; }

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

namespace {

double number(const Json& v, const char* what) {
  if (!v.is_number()) fail(ErrorCode::ParseError, std::string(what) + " must be a number");
  return v.get<double>();
}

long long integer(const Json& v, const char* what) {
  if (!v.is_number_integer()) fail(ErrorCode::ParseError, std::string(what) + " must be an integer");
  return v.get<long long>();
}

}  // namespace

Matrix matrix_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("matrix")) fail(ErrorCode::ParseError, "missing \"matrix\"");
  const Json& rows = doc.at("matrix");
  if (!rows.is_array() || rows.empty()) fail(ErrorCode::ParseError, "\"matrix\" must be a nonempty array");
  const std::size_t n = rows.size();
  for (const Json& row : rows)
    if (!row.is_array() || row.size() != n) fail(ErrorCode::ParseError, "\"matrix\" must be square");
  if (n > 2) fail(ErrorCode::UnsupportedDimension, "only 1x1 and 2x2 matrices are supported");
  if (n == 1) return Matrix::from_scalar(number(rows[0][0], "matrix entry"));
  return Matrix::from_rows(number(rows[0][0], "matrix entry"), number(rows[0][1], "matrix entry"),
                           number(rows[1][0], "matrix entry"), number(rows[1][1], "matrix entry"));
}

Json matrix_to_json(const Matrix& m) {
  if (m.dim() == 1) return Json::array({Json::array({m(0, 0)})});
  return Json::array({Json::array({m(0, 0), m(0, 1)}), Json::array({m(1, 0), m(1, 1)})});
}

PointMeasure measure_from_json(const Json& doc, const GeometryContext& ctx,
                               std::uint64_t default_seed) {
  if (!doc.is_object()) fail(ErrorCode::ParseError, "measure must be a JSON object");
  const int d = ctx.dim();
  if (doc.contains("density")) {
    const Json& spec = doc.at("density");
    if (!spec.is_object()) fail(ErrorCode::ParseError, "\"density\" must be an object");
    const std::string type = spec.value("type", std::string("rho_power"));
    if (type != "rho_power") fail(ErrorCode::ParseError, "unknown density type " + type);
    const double gamma = spec.contains("gamma") ? number(spec.at("gamma"), "gamma") : 1.0;
    const long long k_min = spec.contains("k_min") ? integer(spec.at("k_min"), "k_min") : -6;
    const long long k_max = spec.contains("k_max") ? integer(spec.at("k_max"), "k_max") : 6;
    const long long n = spec.contains("samples_per_shell")
                            ? integer(spec.at("samples_per_shell"), "samples_per_shell")
                            : 4096;
    const std::uint64_t seed = spec.contains("seed")
                                   ? static_cast<std::uint64_t>(integer(spec.at("seed"), "seed"))
                                   : default_seed;
    if (k_min < -1000 || k_max > 1000 || n > 10000000)
      fail(ErrorCode::InvalidRange, "density parameters out of range");
    return discretize_density(gamma, ctx.adjoint, static_cast<int>(k_min), static_cast<int>(k_max),
                              static_cast<int>(n), seed);
  }
  if (!doc.contains("points") || !doc.contains("weights"))
    fail(ErrorCode::ParseError, "measure needs \"points\" and \"weights\" or \"density\"");
  const Json& pts = doc.at("points");
  const Json& ws = doc.at("weights");
  if (!pts.is_array() || !ws.is_array()) fail(ErrorCode::ParseError, "points and weights must be arrays");
  std::vector<Point> points;
  std::vector<double> weights;
  for (const Json& p : pts) {
    if (d == 1 && p.is_number()) {
      points.push_back({p.get<double>(), 0.0});
      continue;
    }
    if (!p.is_array() || static_cast<int>(p.size()) != d)
      fail(ErrorCode::ParseError, "each point needs " + std::to_string(d) + " coordinates");
    points.push_back({number(p[0], "coordinate"), d == 2 ? number(p[1], "coordinate") : 0.0});
  }
  for (const Json& w : ws) weights.push_back(number(w, "weight"));
  return PointMeasure::make(d, std::move(points), std::move(weights));
}

namespace {

Json ellipsoid_json(const QuasiNormContext& ctx, const Rectangle& rect, double ratio) {
  Json out;
  out["Q"] = matrix_to_json(ctx.ellipsoid().shape);
  out["contraction_ratio"] = ctx.ellipsoid().contraction_ratio;
  out["series_ratio"] = ratio;
  Json h = Json::array();
  for (int i = 0; i < ctx.dim(); ++i) h.push_back(rect.half_widths[i]);
  out["half_widths"] = h;
  return out;
}

}  // namespace

Json geometry_report(const GeometryContext& ctx) {
  const DilationParams& p = ctx.primal.params();
  Json out;
  out["version"] = library_version();
  out["matrix"] = matrix_to_json(p.matrix);
  out["dimension"] = p.dimension;
  out["b"] = p.det_modulus;
  out["m_minus"] = p.min_modulus;
  out["m_plus"] = p.max_modulus;
  out["lambda_minus"] = p.lambda_minus;
  out["lambda_plus"] = p.lambda_plus;
  out["zeta_minus"] = p.zeta_minus;
  out["zeta_plus"] = p.zeta_plus;
  const Json primal = ellipsoid_json(ctx.primal, ctx.rectangle, ctx.series_ratio);
  out["Q"] = primal["Q"];
  out["contraction_ratio"] = primal["contraction_ratio"];
  out["half_widths"] = primal["half_widths"];
  out["series_ratio"] = ctx.series_ratio;
  out["M"] = ctx.M;
  out["N"] = ctx.N;
  out["adjoint"] = ellipsoid_json(ctx.adjoint, ctx.adjoint_rectangle, ctx.adjoint_series_ratio);
  return out;
}

Json criterion_report_json(const CriterionReport& r) {
  Json out;
  out["version"] = library_version();
  out["mode"] = r.mode;
  out["p"] = r.p;
  if (r.mode == "lattice") out["q"] = r.q;
  out["k_range"] = Json::array({r.k_min, r.k_max});
  Json per_k = Json::array();
  for (const auto& [k, v] : r.per_k) per_k.push_back(Json{{"k", k}, {"value", v}});
  out["per_k"] = per_k;
  out["sup_value"] = r.sup_value;
  out["argmax_k"] = r.argmax_k;
  out["interior"] = r.interior;
  return out;
}

std::string criterion_csv(const CriterionReport& r) {
  std::string out = "k,value\n";
  for (const auto& [k, v] : r.per_k) out += std::to_string(k) + "," + Json(v).dump() + "\n";
  return out;
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace aniso
