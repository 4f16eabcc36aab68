#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cspin/boosts.hpp"

namespace cspin {

struct VerifyConfig {
  std::uint64_t seed = 0;
  double tol = kDefaultTol;
  std::size_t samples = 10000;
  /// Boost used by the induced suite.
  BoostMethod method = BoostMethod::Beta3;
};

enum class Comparison { AtMost, GreaterThan, AtLeast };

struct PropertyResult {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  Comparison comparison = Comparison::AtMost;
  std::size_t samples = 0;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<PropertyResult> properties;
  bool pass() const;
};

/// clifford, spin, orbit, boost, cocycle, measure, induced.
const std::vector<std::string>& suite_names();

/*!
 * Runs one suite, or every suite for "all", in declaration order.
 * Throws UsageError for an unknown name or samples == 0 or tol <= 0.
 *
 * Sample counts: `samples` for the bulk properties, samples/10 (at least 1)
 * for the measure suite and the real mass-shell checks, and a
 * ceil(sqrt(samples)) x ceil(sqrt(samples)) grid for the induced group law.
 */
std::vector<SuiteReport> run_verify(std::string_view suite, const VerifyConfig& cfg);

bool all_pass(const std::vector<SuiteReport>& reports);

std::string_view to_string(Comparison c);

nlohmann::json report_json(std::string_view suite, const VerifyConfig& cfg, const std::vector<SuiteReport>& reports);

}  // namespace cspin
