#include <filesystem>
#include <random>

#include <nlohmann/json.hpp>

#include "jobs.hpp"
#include "support.hpp"

using namespace cherednik::cli;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("cherednik-test-" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

JobConfig lmod(int m, int r, int n, std::uint32_t p, const std::string& tau) {
  JobConfig c;
  c.subcommand = "lmod";
  c.m = m;
  c.r = r;
  c.n = n;
  c.p = p;
  c.tau = tau;
  return c;
}

std::string validation_code(const JobConfig& c) {
  try {
    validate(c);
  } catch (const ValidationError& e) {
    return e.code;
  }
  return "";
}

}  // namespace

TEST_CASE("cached results are byte-identical to fresh ones over random configurations") {
  const Cache cache(scratch_dir("cache"));
  std::mt19937 rng(2024);
  const std::vector<std::uint32_t> primes{5, 7, 11, 13};
  int done = 0;
  while (done < 20) {
    const int m = 2 + static_cast<int>(rng() % 4);
    const std::uint32_t p = primes[rng() % primes.size()];
    if ((2 * m) % p == 0) continue;
    const auto names = std::vector<std::string>{"trivial", "sign", "rho:1"};
    auto c = lmod(m, m, 2, p, names[rng() % names.size()]);
    c.hbar = static_cast<int>(rng() % 2);
    if (validation_code(c) != "") continue;
    const auto first = run(c, cache, false);
    CHECK_FALSE(first.from_cache);
    const auto second = run(c, cache, false);
    CHECK(second.from_cache);
    CHECK(first.artifact.dump() == second.artifact.dump());
    const auto fresh = run(c, cache, true);
    CHECK_FALSE(fresh.from_cache);
    CHECK(fresh.artifact.dump() == first.artifact.dump());
    ++done;
  }
}

TEST_CASE("cache keys depend on every result-determining field") {
  const auto a = lmod(3, 3, 2, 7, "trivial");
  auto b = a;
  CHECK(digest(a) == digest(b));
  b.hbar = 1;
  CHECK(digest(a) != digest(b));
  b = a;
  b.seeds = {4, 5, 6};
  CHECK(digest(a) != digest(b));
  b = a;
  b.out = "csv";
  CHECK(digest(a) == digest(b));
}

TEST_CASE("invalid configurations are rejected with a code") {
  CHECK(validation_code(lmod(3, 3, 2, 3, "trivial")) == "CharacteristicDividesM");
  CHECK(validation_code(lmod(4, 3, 2, 7, "trivial")) != "");
  CHECK(validation_code(lmod(3, 3, 2, 9, "trivial")) != "");
  CHECK(validation_code(lmod(3, 3, 2, 7, "nonsense")) != "");
  CHECK(validation_code(lmod(3, 3, 2, 7, "trivial")) == "");
}

TEST_CASE("sweeps keep grid order and flag invalid rows") {
  JobConfig c;
  c.subcommand = "sweep";
  c.ms = {3, 4};
  c.ns = {2};
  c.ps = {3, 7};
  c.taus = {"trivial"};
  c.jobs = 2;
  const auto jobs = expand_sweep(c);
  REQUIRE(jobs.size() == 4);
  const auto rows = run_sweep(c, Cache(scratch_dir("sweep")), false);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].config.m == 3);
  CHECK(rows[0].config.p == 3);
  CHECK(rows[0].status == "invalid");
  CHECK(rows[1].status == "ok");
  CHECK(rows[1].series == std::vector<std::int64_t>{1, 2, 2, 1});
  const auto csv = format_sweep(rows, "csv");
  CHECK(csv.find("invalid") != std::string::npos);
  JobConfig empty = c;
  empty.ms.clear();
  const auto header = format_sweep(run_sweep(empty, Cache(scratch_dir("empty")), false), "csv");
  CHECK(std::count(header.begin(), header.end(), '\n') == 1);
}

TEST_CASE("injected mismatches are reported") {
  auto c = lmod(3, 3, 2, 7, "trivial");
  CHECK_FALSE(compute(c).mismatch);
  c.inject_mismatch = true;
  CHECK(compute(c).mismatch);
}
