#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aniso/json_io.hpp"
#include "aniso/matrix.hpp"

namespace aniso {

struct SuiteConfig {
  std::uint64_t seed = 7;
  // Atom and transform resolution per axis; 0 selects the suite default.
  int resolution = 0;
  // Replaces the default matrix of the same dimension.
  std::optional<Matrix> matrix;
};

struct SuiteReport {
  std::string name;
  bool passed = false;
  std::map<std::string, double> metrics;
  SuiteConfig config;
};

// atom-decay, sobolev-1d, sobolev-2d, bochner-riesz, partition, lemma-h1,
// lemma-lr, psi-necessity, sufficiency-e2e, p-sufficiency.
const std::vector<std::string>& suite_names();

// Throws UnknownSuite for other names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

Json suite_report_json(const SuiteReport& report);

// Defaults shared by the suites and the tests.
Matrix default_matrix(int dim);

}  // namespace aniso
