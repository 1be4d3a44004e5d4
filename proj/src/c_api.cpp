#include "aniso/aniso.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>

#include "aniso/error.hpp"
#include "aniso/geometry.hpp"
#include "aniso/json_io.hpp"
#include "aniso/measure.hpp"
#include "aniso/suites.hpp"

struct aniso_geometry {
  aniso::GeometryContext ctx;
};

struct aniso_measure {
  aniso::PointMeasure mu;
};

namespace {

thread_local std::string last_error;

template <class F>
aniso_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ANISO_OK;
  } catch (const aniso::Error& e) {
    last_error = e.what();
    return static_cast<aniso_status>(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return ANISO_INTERNAL_ERROR;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) aniso::fail(aniso::ErrorCode::InvalidArgument, what);
}

}  // namespace

extern "C" {

const char* aniso_version(void) { return aniso::library_version(); }

const char* aniso_status_name(aniso_status status) {
  if (status == ANISO_OK) return "Ok";
  if (status == ANISO_INTERNAL_ERROR) return "InternalError";
  if (status < ANISO_NOT_EXPANSIVE || status > ANISO_UNKNOWN_SUITE) return "Unknown";
  return aniso::error_name(static_cast<aniso::ErrorCode>(status));
}

const char* aniso_last_error(void) { return last_error.c_str(); }

void aniso_string_free(char* s) { std::free(s); }

namespace {

std::optional<double> ratio_arg(double series_ratio) {
  if (series_ratio == 0.0) return std::nullopt;
  return series_ratio;
}

}  // namespace

aniso_status aniso_geometry_create(int dim, const double* entries, double series_ratio,
                                   aniso_geometry** out) {
  return guarded([&] {
    require(entries != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    if (dim != 1 && dim != 2)
      aniso::fail(aniso::ErrorCode::UnsupportedDimension, "dimension must be 1 or 2");
    const aniso::Matrix m = dim == 1 ? aniso::Matrix::from_scalar(entries[0])
                                     : aniso::Matrix::from_rows(entries[0], entries[1], entries[2], entries[3]);
    *out = new aniso_geometry{aniso::GeometryContext::build(m, ratio_arg(series_ratio))};
  });
}

aniso_status aniso_geometry_from_json(const char* json, double series_ratio, aniso_geometry** out) {
  return guarded([&] {
    require(json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    const aniso::Matrix m = aniso::matrix_from_json(aniso::parse_json_text(json));
    *out = new aniso_geometry{aniso::GeometryContext::build(m, ratio_arg(series_ratio))};
  });
}

void aniso_geometry_free(aniso_geometry* geometry) { delete geometry; }

int aniso_geometry_dim(const aniso_geometry* geometry) {
  return geometry == nullptr ? 0 : geometry->ctx.dim();
}

aniso_status aniso_geometry_report(const aniso_geometry* geometry, char** json_out) {
  return guarded([&] {
    require(geometry != nullptr && json_out != nullptr, "null argument");
    *json_out = copy_string(aniso::dump_json(aniso::geometry_report(geometry->ctx)));
  });
}

aniso_status aniso_geometry_scale_index(const aniso_geometry* geometry, int adjoint, const double* x,
                                        int* out) {
  return guarded([&] {
    require(geometry != nullptr && x != nullptr && out != nullptr, "null argument");
    const auto& q = adjoint ? geometry->ctx.adjoint : geometry->ctx.primal;
    const aniso::Point p{x[0], q.dim() == 2 ? x[1] : 0.0};
    require(p[0] != 0.0 || p[1] != 0.0, "scale index is undefined at the origin");
    *out = q.scale_index(p);
  });
}

aniso_status aniso_measure_create(const aniso_geometry* geometry, size_t count, const double* points,
                                  const double* weights, aniso_measure** out) {
  return guarded([&] {
    require(geometry != nullptr && out != nullptr, "null argument");
    require(count == 0 || (points != nullptr && weights != nullptr), "null argument");
    *out = nullptr;
    const int d = geometry->ctx.dim();
    std::vector<aniso::Point> pts(count);
    std::vector<double> ws(weights, weights + count);
    for (size_t i = 0; i < count; ++i) pts[i] = {points[d * i], d == 2 ? points[d * i + 1] : 0.0};
    *out = new aniso_measure{aniso::PointMeasure::make(d, std::move(pts), std::move(ws))};
  });
}

aniso_status aniso_measure_from_json(const aniso_geometry* geometry, const char* json, uint64_t default_seed,
                                     aniso_measure** out) {
  return guarded([&] {
    require(geometry != nullptr && json != nullptr && out != nullptr, "null argument");
    *out = nullptr;
    *out = new aniso_measure{aniso::measure_from_json(aniso::parse_json_text(json), geometry->ctx, default_seed)};
  });
}

void aniso_measure_free(aniso_measure* measure) { delete measure; }

size_t aniso_measure_size(const aniso_measure* measure) { return measure == nullptr ? 0 : measure->mu.size(); }

aniso_status aniso_criterion(const aniso_geometry* geometry, const aniso_measure* measure, double p,
                             int k_min, int k_max, aniso_criterion_result* result, char** json_out,
                             char** csv_out) {
  return guarded([&] {
    require(geometry != nullptr && measure != nullptr, "null argument");
    if (measure->mu.dim != geometry->ctx.dim())
      aniso::fail(aniso::ErrorCode::InvalidArgument, "measure and matrix dimensions differ");
    const aniso::CriterionReport rep = aniso::criterion_report(measure->mu, geometry->ctx, k_min, k_max, p);
    std::string json, csv;
    if (json_out != nullptr) json = aniso::dump_json(aniso::criterion_report_json(rep));
    if (csv_out != nullptr) csv = aniso::criterion_csv(rep);
    if (result != nullptr) *result = {rep.sup_value, rep.argmax_k, rep.interior ? 1 : 0};
    if (json_out != nullptr) *json_out = copy_string(json);
    if (csv_out != nullptr) {
      try {
        *csv_out = copy_string(csv);
      } catch (...) {
        if (json_out != nullptr) std::free(*json_out);
        throw;
      }
    }
  });
}

size_t aniso_suite_count(void) { return aniso::suite_names().size(); }

const char* aniso_suite_name(size_t index) {
  const auto& names = aniso::suite_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

aniso_status aniso_verify(const char* suite, uint64_t seed, int resolution, const char* matrix_json,
                          int* passed, char** json_out) {
  return guarded([&] {
    require(suite != nullptr, "null suite name");
    aniso::SuiteConfig cfg;
    cfg.seed = seed;
    cfg.resolution = resolution;
    if (matrix_json != nullptr) cfg.matrix = aniso::matrix_from_json(aniso::parse_json_text(matrix_json));
    const aniso::SuiteReport rep = aniso::run_suite(suite, cfg);
    if (passed != nullptr) *passed = rep.passed ? 1 : 0;
    if (json_out != nullptr) *json_out = copy_string(aniso::dump_json(aniso::suite_report_json(rep)));
  });
}

}  // extern "C"
