// Command-line front end: verify | hilbert | character | cache-info.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "springcoh/errors.hpp"
#include "springcoh/verifier.hpp"

namespace {

using namespace springcoh;
using nlohmann::json;

constexpr int kExitUsage = 2;

struct CommonFlags {
  bool json_output = false;
  std::string out_path;
  std::string cache_dir;
  int jobs = 1;
  std::size_t max_pairs = Budget{}.max_pairs;
  std::size_t max_block = Budget{}.max_block_dim;
  int timeout_secs = 0;
  std::string log_level = "warn";
};

void add_common(CLI::App* app, CommonFlags& f) {
  app->add_flag("--json", f.json_output, "Emit JSON instead of text");
  app->add_option("--out", f.out_path, "Write the report to PATH instead of stdout");
  app->add_option("--cache-dir", f.cache_dir, std::string("Cache directory (falls back to $") + kCacheDirEnv + ")");
  app->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app->add_option("--max-pairs", f.max_pairs, "Buchberger S-pair cap")->check(CLI::PositiveNumber);
  app->add_option("--max-block", f.max_block, "Largest catalecticant block dimension")->check(CLI::PositiveNumber);
  app->add_option("--timeout-secs", f.timeout_secs, "Wall-clock limit per partition (0 = none)")
      ->check(CLI::NonNegativeNumber);
  app->add_option("--log-level", f.log_level, "trace|debug|info|warn|error|off");
}

void emit(const CommonFlags& f, const std::string& text) {
  if (f.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.out_path);
  if (!out) throw UsageError("cannot open --out path '" + f.out_path + "'");
  out << text;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string payload_text(const json& j) { return j.is_null() ? "-" : j.dump(); }

std::string verify_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.check.size());
  for (const auto& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.check << std::setw(14) << ("(" + r.sigma + ")")
        << std::setw(18) << to_string(r.status);
    if (r.status == CheckStatus::kFail) out << payload_text(r.left) << " vs " << payload_text(r.right);
    if (!r.note.empty()) out << "  " << r.note;
    out << '\n';
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_default_logger(spdlog::stderr_color_mt("springcoh"));

  CLI::App app{"Exact verification of Springer fiber cohomology models"};
  app.require_subcommand(1);

  CommonFlags flags;
  int n = 0;
  std::string checks;
  std::string sigma_text;
  std::string model_name;
  bool graded = false;

  auto* verify_cmd = app.add_subcommand("verify", "Run verification checks over all partitions of n");
  verify_cmd->add_option("--n", n, "Size of the partitions")->required();
  verify_cmd->add_option("--checks", checks, "Comma-separated subset of checks (default: all)");
  add_common(verify_cmd, flags);

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Print graded dimensions of a model");
  hilbert_cmd->add_option("--sigma", sigma_text, "Partition, e.g. 2,2,1")->required();
  hilbert_cmd->add_option("--model", model_name,
                          "apolarity-Y|apolarity-X|apolarity-bigraded|orbit|levi|coinvariant")
      ->required();
  add_common(hilbert_cmd, flags);

  auto* character_cmd = app.add_subcommand("character", "Print S_n characters of a model");
  character_cmd->add_option("--sigma", sigma_text, "Partition, e.g. 2,2,1")->required();
  character_cmd->add_option("--model", model_name, "apolarity-Y|apolarity-X|orbit|levi|coinvariant")->required();
  character_cmd->add_flag("--graded", graded, "Report each degree separately");
  add_common(character_cmd, flags);

  auto* info_cmd = app.add_subcommand("cache-info", "Describe the cache directory");
  add_common(info_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    spdlog::set_level(spdlog::level::from_str(flags.log_level));
    const std::optional<Cache> cache =
        Cache::configure(flags.cache_dir.empty() ? std::nullopt : std::optional<std::string>(flags.cache_dir));

    VerifyOptions options;
    options.budget.max_pairs = flags.max_pairs;
    options.budget.max_block_dim = flags.max_block;
    if (flags.timeout_secs > 0) options.timeout_per_sigma = std::chrono::seconds(flags.timeout_secs);
    options.jobs = flags.jobs;
    options.cache = cache ? &*cache : nullptr;

    if (*verify_cmd) {
      options.n = n;
      options.checks = split_commas(checks);
      const auto results = verify(options);
      emit(flags, flags.json_output ? report_json("verify", n, results).dump(2) + "\n" : verify_text(results));
      return exit_code(results);
    }
    if (*hilbert_cmd || *character_cmd) {
      const Partition sigma = Partition::parse(sigma_text);
      if (sigma.n() > 6) throw UsageError("partitions of n > 6 are not supported");
      const Model model = parse_model(model_name);
      if (flags.timeout_secs > 0) options.budget = options.budget.with_timeout(*options.timeout_per_sigma);
      const json report =
          *hilbert_cmd ? hilbert_report(sigma, model, options) : character_report(sigma, model, graded, options);
      if (flags.json_output) {
        emit(flags, report.dump(2) + "\n");
      } else {
        std::ostringstream out;
        for (const auto& [key, value] : report.items()) out << std::left << std::setw(14) << key << value.dump() << '\n';
        emit(flags, out.str());
      }
      return 0;
    }
    if (*info_cmd) {
      if (!cache) throw UsageError(std::string("no cache configured (use --cache-dir or $") + kCacheDirEnv + ")");
      const auto info = cache->info();
      json report{{"command", "cache-info"},
                  {"dir", cache->dir().string()},
                  {"schema", cache->schema_version()},
                  {"entries", info.entries},
                  {"bytes", info.bytes}};
      if (flags.json_output) {
        emit(flags, report.dump(2) + "\n");
      } else {
        std::ostringstream out;
        out << "dir      " << cache->dir().string() << "\nschema   " << cache->schema_version() << "\nentries  "
            << info.entries << "\nbytes    " << info.bytes << '\n';
        emit(flags, out.str());
      }
      return 0;
    }
  } catch (const UsageError& e) {
    spdlog::error("{}", e.what());
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    spdlog::error("resource limit: {}", e.what());
    return 3;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return kExitUsage;
}
