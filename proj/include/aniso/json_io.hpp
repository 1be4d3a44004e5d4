#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "aniso/geometry.hpp"
#include "aniso/measure.hpp"

namespace aniso {

using Json = nlohmann::json;

// Parsing throws ParseError on malformed input and UnsupportedDimension for
// matrices that are not 1x1 or 2x2.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

// {"matrix": [[a, b], [c, d]]} or {"matrix": [[a]]}.
Matrix matrix_from_json(const Json& doc);
Json matrix_to_json(const Matrix& m);

// {"points": [...], "weights": [...]} or
// {"density": {"type": "rho_power", "gamma": g, "k_min": a, "k_max": b,
//              "samples_per_shell": n, "seed": s}}.
// default_seed applies when the density block has no seed.
PointMeasure measure_from_json(const Json& doc, const GeometryContext& ctx,
                               std::uint64_t default_seed = 7);

Json geometry_report(const GeometryContext& ctx);
Json criterion_report_json(const CriterionReport& report);
// "k,value" lines with a header.
std::string criterion_csv(const CriterionReport& report);

// Stable serialization: sorted keys, two-space indent, shortest round-trip
// floats, trailing newline.
std::string dump_json(const Json& doc);

const char* library_version() noexcept;

}  // namespace aniso
