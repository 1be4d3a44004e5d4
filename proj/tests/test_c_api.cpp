#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "aniso/aniso.h"

TEST_SUITE("c_api") {

TEST_CASE("version and status names") {
  CHECK(std::strlen(aniso_version()) > 0);
  CHECK(std::string(aniso_status_name(ANISO_OK)) == "Ok");
  CHECK(std::string(aniso_status_name(ANISO_NOT_EXPANSIVE)) == "NotExpansive");
  CHECK(std::string(aniso_status_name(ANISO_UNKNOWN_SUITE)) == "UnknownSuite");
  aniso_string_free(nullptr);
}

TEST_CASE("geometry handle") {
  const double entries[] = {1.5, 0.5, 0.25, 2.0};
  aniso_geometry* g = nullptr;
  REQUIRE(aniso_geometry_create(2, entries, 0.0, &g) == ANISO_OK);
  CHECK(aniso_geometry_dim(g) == 2);
  char* json = nullptr;
  REQUIRE(aniso_geometry_report(g, &json) == ANISO_OK);
  CHECK(std::string(json).find("\"M\": 3") != std::string::npos);
  aniso_string_free(json);
  const double x[] = {0.0, 0.0};
  int k = 0;
  CHECK(aniso_geometry_scale_index(g, 0, x, &k) == ANISO_INVALID_ARGUMENT);
  CHECK(std::strlen(aniso_last_error()) > 0);
  const double y[] = {3.0, 1.0};
  CHECK(aniso_geometry_scale_index(g, 1, y, &k) == ANISO_OK);
  aniso_geometry_free(g);
  aniso_geometry_free(nullptr);
}

TEST_CASE("geometry errors") {
  const double shear[] = {1.0, 1.0, 0.0, 1.0};
  aniso_geometry* g = nullptr;
  CHECK(aniso_geometry_create(2, shear, 0.0, &g) == ANISO_NOT_EXPANSIVE);
  CHECK(g == nullptr);
  const double single[] = {0.0};
  CHECK(aniso_geometry_create(1, single, 0.0, &g) == ANISO_SINGULAR);
  CHECK(aniso_geometry_create(3, single, 0.0, &g) == ANISO_UNSUPPORTED_DIMENSION);
  CHECK(aniso_geometry_create(2, nullptr, 0.0, &g) == ANISO_INVALID_ARGUMENT);
  CHECK(aniso_geometry_from_json("{\"matrix\": [[2]", 0.0, &g) == ANISO_PARSE_ERROR);
  CHECK(aniso_geometry_from_json("{\"matrix\": [[2]]}", 5.0, &g) == ANISO_INVALID_RATIO);
  CHECK(aniso_geometry_from_json("{\"matrix\": [[2]]}", 1.2, &g) == ANISO_OK);
  CHECK(aniso_geometry_dim(g) == 1);
  aniso_geometry_free(g);
}

TEST_CASE("measure and criterion") {
  aniso_geometry* g = nullptr;
  REQUIRE(aniso_geometry_from_json("{\"matrix\": [[1.5, 0.5], [0.25, 2.0]]}", 0.0, &g) == ANISO_OK);
  const double pts[] = {3.0, -1.0};
  const double ws[] = {0.7};
  aniso_measure* mu = nullptr;
  REQUIRE(aniso_measure_create(g, 1, pts, ws, &mu) == ANISO_OK);
  CHECK(aniso_measure_size(mu) == 1);
  aniso_criterion_result r{};
  char* json = nullptr;
  char* csv = nullptr;
  REQUIRE(aniso_criterion(g, mu, 1.0, -20, 20, &r, &json, &csv) == ANISO_OK);
  CHECK(r.sup_value == doctest::Approx(0.7));
  CHECK(std::string(json).find("\"lattice\"") != std::string::npos);
  CHECK(std::string(csv).rfind("k,value\n", 0) == 0);
  aniso_string_free(json);
  aniso_string_free(csv);
  CHECK(aniso_criterion(g, mu, 0.5, -2, 2, &r, nullptr, nullptr) == ANISO_INVALID_EXPONENT);
  CHECK(aniso_criterion(g, mu, 1.0, 2, -2, &r, nullptr, nullptr) == ANISO_INVALID_RANGE);
  aniso_measure_free(mu);

  const double neg[] = {-1.0};
  CHECK(aniso_measure_create(g, 1, pts, neg, &mu) == ANISO_INVALID_ARGUMENT);
  REQUIRE(aniso_measure_from_json(g, "{\"density\": {\"k_min\": -1, \"k_max\": 1, \"samples_per_shell\": 8}}",
                                  5, &mu) == ANISO_OK);
  CHECK(aniso_measure_size(mu) == 24);
  REQUIRE(aniso_criterion(g, mu, 2.0, -1, 1, &r, nullptr, nullptr) == ANISO_OK);
  CHECK(r.sup_value > 0.0);
  aniso_measure_free(mu);
  aniso_geometry_free(g);
}

TEST_CASE("verify through the C interface") {
  REQUIRE(aniso_suite_count() == 10);
  CHECK(aniso_suite_name(100) == nullptr);
  CHECK(std::string(aniso_suite_name(0)).size() > 0);
  int passed = 0;
  char* json = nullptr;
  CHECK(aniso_verify("no-such-suite", 7, 0, nullptr, &passed, &json) == ANISO_UNKNOWN_SUITE);
  REQUIRE(aniso_verify("partition", 7, 0, nullptr, &passed, &json) == ANISO_OK);
  CHECK(passed == 1);
  CHECK(std::string(json).find("\"suite\": \"partition\"") != std::string::npos);
  aniso_string_free(json);
  CHECK(aniso_verify("partition", 7, 0, "{\"matrix\": [[1, 1], [0, 1]]}", &passed, nullptr) ==
        ANISO_NOT_EXPANSIVE);
}

}  // TEST_SUITE
