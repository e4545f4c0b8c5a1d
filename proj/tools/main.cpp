#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cherednik/error.hpp"
#include "jobs.hpp"

using cherednik::cli::JobConfig;

namespace {

void group_options(CLI::App* sub, JobConfig& c) {
  sub->add_option("--m", c.m, "m in G(m,r,n)");
  sub->add_option("--r", c.r, "r in G(m,r,n); defaults to m");
  sub->add_option("--n", c.n, "rank n");
  sub->add_option("--p", c.p, "characteristic");
  sub->add_option("--tau", c.tau, "representation name (trivial, sign, rho:i, gamma:i, specht:3,1, pullback:...)");
  sub->add_option("--hbar", c.hbar, "0 or 1");
  sub->add_option("--mode", c.mode, "specialized or symbolic");
  sub->add_option("--seed", c.seeds, "parameter seeds (repeatable)");
  sub->add_option("--dmax", c.dmax, "degree cap");
}

int emit_error(const std::string& code, const std::string& message, int exit_code) {
  std::cout << cherednik::cli::error_record(code, message, exit_code).dump() << "\n";
  std::cerr << "error: " << message << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simple modules of rational Cherednik algebras of G(m,r,n) in positive characteristic"};
  app.require_subcommand(1);
  JobConfig c;
  std::string cache_dir;
  bool fresh = false;
  app.add_option("--out", c.out, "json, csv or ascii")->check(CLI::IsMember({"json", "csv", "ascii"}));
  app.add_option("--cache-dir", cache_dir, "result cache directory (CHEREDNIK_CACHE takes precedence)");
  app.add_flag("--fresh", fresh, "recompute even when a cached result exists");
  app.add_option("--jobs", c.jobs, "worker threads for sweep");
  app.add_flag("--inject-mismatch", c.inject_mismatch, "perturb the reference values (exercises the mismatch path)");
  app.fallthrough();

  auto* lmod = app.add_subcommand("lmod", "compute L(tau), certify it and compare with closed forms");
  group_options(lmod, c);

  auto* dunkl = app.add_subcommand("dunkl", "apply every Dunkl operator to f (x) e_k");
  group_options(dunkl, c);
  dunkl->add_option("--poly", c.poly, "polynomial in x, y, z, w or x1..xn")->required();
  dunkl->add_option("--component", c.component, "basis vector e_k of tau (1-based)");

  auto* arr = app.add_subcommand("arr", "arrangement ideal Hilbert function against its closed form");
  arr->add_option("--kind", c.kind, "I, T or J")->required();
  arr->add_option("--n", c.n);
  arr->add_option("--i", c.i);
  arr->add_option("--m", c.m);
  arr->add_option("--p", c.p);
  arr->add_option("--dmax", c.dmax, "degree bound (default 10)");

  auto* betti = app.add_subcommand("betti", "graded Betti numbers of L(tau) or of an arrangement quotient");
  group_options(betti, c);
  betti->add_option("--kind", c.kind, "I or T for an arrangement quotient instead of L(tau)");
  betti->add_option("--i", c.i);

  auto* transition = app.add_subcommand("transition", "transition matrix of G(m,m,2)");
  transition->add_option("--m", c.m);
  transition->add_option("--p", c.p);
  transition->add_option("--seed", c.seeds);

  auto* degen = app.add_subcommand("degen", "compare L(tau) for G(m,r,n) with G(r,r,n)");
  group_options(degen, c);

  auto* koszul = app.add_subcommand("koszul", "matrix Koszul conditions for a fixture or the gamma:0 matrices");
  koszul->add_option("--fixture", c.fixture, "JSON file with matrices per characteristic");
  koszul->add_flag("--gamma0", c.gamma0, "use the gamma:0 matrices of G(m,m,3)");
  koszul->add_option("--m", c.m);
  koszul->add_option("--p", c.p);
  koszul->add_option("--seed", c.seeds);

  auto* sweep = app.add_subcommand("sweep", "grid of lmod jobs with a summary table");
  sweep->add_option("--m", c.ms)->expected(0, -1);
  sweep->add_option("--r", c.rs)->expected(0, -1);
  sweep->add_option("--n", c.ns)->expected(0, -1);
  sweep->add_option("--p", c.ps)->expected(0, -1);
  sweep->add_option("--tau", c.taus)->expected(0, -1);
  sweep->add_option("--hbar", c.hbar);
  sweep->add_option("--seed", c.seeds);
  sweep->add_option("--dmax", c.dmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return emit_error("InvalidArguments", e.what(), cherednik::cli::kValidation);
  }
  c.subcommand = app.get_subcommands().front()->get_name();

  try {
    cherednik::cli::validate(c);
    const cherednik::cli::Cache cache(cherednik::cli::Cache::resolve(cache_dir));
    if (c.subcommand == "sweep") {
      const auto rows = cherednik::cli::run_sweep(c, cache, fresh);
      std::cout << cherednik::cli::format_sweep(rows, c.out);
      int code = cherednik::cli::kOk;
      for (const auto& row : rows) {
        if (row.status == "mismatch") code = cherednik::cli::kMismatch;
        else if (row.status == "error" && code != cherednik::cli::kMismatch) code = cherednik::cli::kComputation;
        else if (row.status == "invalid" && code == cherednik::cli::kOk) code = cherednik::cli::kValidation;
      }
      return code;
    }
    const auto res = cherednik::cli::run(c, cache, fresh);
    if (res.from_cache) std::cerr << "served from cache\n";
    std::cout << cherednik::cli::format_artifact(res.artifact, c.out);
    return res.mismatch ? cherednik::cli::kMismatch : cherednik::cli::kOk;
  } catch (const cherednik::cli::ValidationError& e) {
    return emit_error(e.code, e.message, cherednik::cli::kValidation);
  } catch (const cherednik::Error& e) {
    return emit_error(std::string(cherednik::to_string(e.code())), e.what(), cherednik::cli::kComputation);
  } catch (const std::exception& e) {
    return emit_error("Internal", e.what(), cherednik::cli::kComputation);
  }
}
