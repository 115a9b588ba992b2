/**
 * @file acceptance.cpp
 * @brief Runs the standard suite and prints one PASS or FAIL line per acceptance criterion.
 */
#include <chrono>
#include <iomanip>
#include <iostream>
#include <map>

#include "orthochar/verify.hpp"

using namespace orthochar;

namespace {

struct Tally {
  int match = 0, mismatch = 0, skipped = 0;
  double seconds = 0;
  std::vector<std::string> failures;
};

const std::map<int, std::string> kTitles{
    {1, "order formulas"},
    {2, "four-orbit structure and inertia groups"},
    {3, "Clifford completeness of Irr(P)"},
    {4, "character values on U"},
    {5, "centralizer orders of z_0, z_1, z_2"},
    {6, "parabolic subgroup intersections"},
    {7, "induction from RQ_K and the Mackey formula"},
    {8, "Steinberg restriction"},
    {9, "SO_5 restriction table"},
    {10, "component-degree tables"},
    {11, "SO_7 Type 1 and Type 0 table"},
    {12, "symbol combinatorics and Harish-Chandra identities"},
    {13, "property suites"},
};

const std::map<int, double> kBudgets{{3, 120}, {6, 300}, {9, 300}, {11, 1800}};

}  // namespace

int main() {
  std::map<int, Tally> tally;
  for (const auto& job : suite_jobs("standard")) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckList checks;
    try {
      checks = job.run();
    } catch (const std::exception& e) {
      checks.push_back(make_bool_check("job completed", job.id, false, e.what()));
    }
    Tally& t = tally[job.criterion];
    t.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& c : checks) {
      switch (c.status) {
        case CheckResult::Status::Match: ++t.match; break;
        case CheckResult::Status::Skipped: ++t.skipped; break;
        case CheckResult::Status::Mismatch:
          ++t.mismatch;
          t.failures.push_back(job.id + ": " + c.claim + " [" + c.params + "] expected " + c.expected + ", computed " +
                               c.computed);
          break;
      }
    }
  }

  bool all = true;
  for (const auto& [k, title] : kTitles) {
    const Tally& t = tally[k];
    const auto budget = kBudgets.find(k);
    const bool in_budget = budget == kBudgets.end() || t.seconds <= budget->second;
    const bool pass = t.mismatch == 0 && t.match > 0 && in_budget;
    all &= pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << std::setw(2) << k << ": " << title << " (" << t.match
              << " match, " << t.mismatch << " mismatch, " << t.skipped << " skipped, " << std::fixed
              << std::setprecision(1) << t.seconds << " s";
    if (budget != kBudgets.end()) std::cout << ", budget " << budget->second << " s";
    std::cout << ")\n";
    for (const auto& f : t.failures) std::cout << "    " << f << "\n";
  }
  return all ? 0 : 1;
}
