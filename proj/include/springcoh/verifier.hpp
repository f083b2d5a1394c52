#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "springcoh/budget.hpp"
#include "springcoh/cache.hpp"
#include "springcoh/partition.hpp"

namespace springcoh {

inline constexpr const char* kVersion = "1.0.0";

enum class CheckStatus { kPass, kFail, kSkippedResource };
std::string to_string(CheckStatus status);

/// Outcome of one named check at one partition. A failure always carries
/// both compared payloads.
struct CheckResult {
  std::string check;
  std::string sigma;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json left;
  nlohmann::json right;
  std::string note;
  double millis = 0;
};

struct VerifyOptions {
  int n = 3;
  /// Empty selects every known check.
  std::vector<std::string> checks;
  Budget budget;
  std::optional<std::chrono::seconds> timeout_per_sigma;
  int jobs = 1;
  const Cache* cache = nullptr;
};

/// formula1, nfactorial, gorenstein, theorem1_duality, lemma1_socle,
/// kostant, spaltenstein, theorem2_hilbert, theorem2_character,
/// top_irreducible -- in this order.
const std::vector<std::string>& known_checks();

/// Validates names (UsageError on unknown ones) and returns them in
/// canonical order without duplicates.
std::vector<std::string> normalize_checks(const std::vector<std::string>& requested);

/// Runs the selected checks at one partition.
std::vector<CheckResult> run_checks(const Partition& sigma, const VerifyOptions& options);

/// Runs the selected checks at every partition of options.n; partitions
/// are distributed over options.jobs workers, results come back in
/// partition order.
std::vector<CheckResult> verify(const VerifyOptions& options);

/// 0 all pass, 1 any failure, 3 resource skips without failure.
int exit_code(const std::vector<CheckResult>& results);

/// {command, n, results, versions}. Timing fields are dropped when
/// include_timing is false, which makes reports byte-comparable.
nlohmann::json report_json(const std::string& command, int n, const std::vector<CheckResult>& results,
                           bool include_timing = true);

/// Inspection models for the hilbert and character subcommands.
///   apolarity-Y / apolarity-X: the side subalgebras of the inverse system of sigma
///   apolarity-bigraded: the full bigraded table (hilbert only)
///   orbit: the translate-intersection ring of the dual of sigma
///   levi: the Levi quotient with sigma itself as block data
///   coinvariant: C[z_1..z_n] modulo e_1..e_n
enum class Model { kApolarityY, kApolarityX, kApolarityBigraded, kOrbit, kLevi, kCoinvariant };
Model parse_model(const std::string& name);
std::string to_string(Model model);

nlohmann::json hilbert_report(const Partition& sigma, Model model, const VerifyOptions& options);
/// Per-degree class functions with decompositions; with graded == false
/// only the sum over degrees is reported.
nlohmann::json character_report(const Partition& sigma, Model model, bool graded, const VerifyOptions& options);

}  // namespace springcoh
