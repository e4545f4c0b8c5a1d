#include <algorithm>
#include <exception>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "common.hpp"

namespace acceptance {

std::string fixture_path(const std::string& name) { return std::string(CHEREDNIK_FIXTURE_DIR) + "/" + name; }

}  // namespace acceptance

int main(int argc, char** argv) {
  using namespace acceptance;
  CLI::App app{"Acceptance checks"};
  std::vector<std::string> only;
  bool list = false;
  app.add_option("--only", only, "run only these criteria (e.g. 3, 4a)");
  app.add_flag("--list", list, "list criteria and exit");
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> all;
  for (auto part : {dihedral_criteria(), rank_criteria(), misc_criteria()})
    for (auto& c : part) all.push_back(std::move(c));

  if (list) {
    for (const auto& c : all) std::cout << c.id << "  " << c.title << "\n";
    return 0;
  }

  int failed = 0, ran = 0;
  for (const auto& c : all) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    ++ran;
    Outcome o;
    const Stopwatch clock;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what(), {}};
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << ": " << o.detail << " ("
              << std::fixed << std::setprecision(2) << clock.seconds() << " s)\n";
    if (!o.pass)
      for (const auto& line : o.analysis) std::cout << "      " << line << "\n";
    if (!o.pass) ++failed;
  }
  if (ran == 0) {
    std::cerr << "no criterion matched\n";
    return 2;
  }
  return failed == 0 ? 0 : 1;
}
