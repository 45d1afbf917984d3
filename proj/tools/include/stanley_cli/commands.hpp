#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include <json.hpp>

#include "stanley/filtration.hpp"
#include "stanley/homology.hpp"

namespace stanley::cli {

using json = nlohmann::json;

enum ExitCode : int { kOk = 0, kViolation = 1, kUsage = 2, kCapExceeded = 3 };

/// Exactly one source must be set.
struct Input {
  std::string fixture;
  std::string complex_path;
  std::string ideal_path;
};

struct Options {
  CoefficientField field = CoefficientField::rationals();
  /// Lower bound for the sdepth search.
  std::optional<int> target;
  int threads = 1;
  std::uint64_t box_cap = kDefaultBoxCap;
};

struct Outcome {
  int exit_code = kOk;
  json report;
};

Outcome analyze(const Input& in, const Options& opts);
/// kind in {partition, decomposition, shelling, filtration}. An empty
/// `artifact_path` uses the artifact recorded with the fixture.
Outcome verify(const std::string& kind, const Input& in, const std::string& artifact_path,
               const Options& opts);
/// `subst` is a comma-separated monomial list or a file holding one.
Outcome gorenstein(int m, const std::string& subst, bool verify_witnesses, const Options& opts);
Outcome random_instance(std::uint64_t seed, int n, const std::string& model);
Outcome clean(const Input& in, bool pretty, const Options& opts);

/// Runs `fn`, turning parse/usage errors into exit 2 and cap overruns into 3.
Outcome guarded(const std::function<Outcome()>& fn);

/// Human-readable rendering of a report.
std::string render_text(const json& report);

}  // namespace stanley::cli
