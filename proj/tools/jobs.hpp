#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace cherednik::cli {

enum ExitCode : int { kOk = 0, kValidation = 1, kComputation = 2, kMismatch = 3 };

struct JobConfig {
  std::string subcommand;
  int m = 2;
  int r = 0;  // 0 means r = m
  int n = 2;
  std::uint32_t p = 7;
  std::string tau = "trivial";
  int hbar = 0;
  std::string mode = "specialized";
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int dmax = -1;
  std::string out = "json";

  // dunkl
  std::string poly;
  int component = 1;
  // arr, betti
  std::string kind;
  int i = 1;
  // koszul, transition
  std::string fixture;
  bool gamma0 = false;
  // sweep
  std::vector<int> ms, rs, ns;
  std::vector<std::uint32_t> ps;
  std::vector<std::string> taus;
  int jobs = 1;
  bool inject_mismatch = false;

  int effective_r() const { return r == 0 ? m : r; }
};

/// Raised for invalid configurations (exit 1); computation failures keep their library error (exit 2).
struct ValidationError {
  std::string code;
  std::string message;
};

/// Throws ValidationError unless the configuration can be dispatched.
void validate(const JobConfig& config);

/// The fields that determine the result, with sorted keys.
nlohmann::json canonical(const JobConfig& config);

/// Hex SHA-256 of canonical(config).dump().
std::string digest(const JobConfig& config);

struct JobResult {
  nlohmann::json artifact;
  bool mismatch = false;
  bool from_cache = false;
};

/// Computes one job; no cache involved.
JobResult compute(const JobConfig& config);

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// CHEREDNIK_CACHE when set, else the flag value, else ".cherednik-cache".
  static std::filesystem::path resolve(const std::string& flag);

  std::optional<nlohmann::json> load(const std::string& key) const;
  void store(const std::string& key, const nlohmann::json& artifact) const;
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
};

/// Serves the job from the cache unless fresh, otherwise computes and stores it.
JobResult run(const JobConfig& config, const Cache& cache, bool fresh);

struct SweepRow {
  JobConfig config;
  std::string status;  // ok, mismatch, invalid, error
  std::vector<std::int64_t> series;
  int top_degree = -1;
  std::optional<bool> certified;
  std::optional<bool> oracle_match;
  std::string note;
  double wall_ms = 0;
};

/// Expands the grid (every combination of ms, rs, ns, ps, taus) into lmod jobs.
std::vector<JobConfig> expand_sweep(const JobConfig& config);

/// Runs every job on a pool of config.jobs workers. Rows keep grid order.
std::vector<SweepRow> run_sweep(const JobConfig& config, const Cache& cache, bool fresh);

std::string format_sweep(const std::vector<SweepRow>& rows, const std::string& out);
std::string format_artifact(const nlohmann::json& artifact, const std::string& out);
nlohmann::json error_record(const std::string& code, const std::string& message, int exit_code);

}  // namespace cherednik::cli
