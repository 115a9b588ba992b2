/**
 * @file verify.hpp
 * @brief Verification suites over the restriction tables, the property suites
 * below the group-theoretic layer, and report assembly.
 */
#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "orthochar/check.hpp"
#include "orthochar/clifford.hpp"
#include "orthochar/symbols.hpp"

namespace orthochar {

/** One row of a restriction table: per type, payload names of the components. */
struct RestrictionRow {
  std::string label;
  /** Type 1, 0, +, - payload tokens; "Xi*" stands for every degree-2 character and "(nu3)" exists for odd q only. */
  std::array<std::vector<std::string>, 4> payloads;
};

/** A row of the SO_7 table: the Type 1 payload and the Type 0 payload split at level 5. */
struct Restriction7Row {
  std::string label;
  std::vector<std::string> type1;
  std::array<std::vector<std::string>, 4> type0;
};

/** Component degrees theta^1(1), theta^0(1), theta^+(1), theta^-(1) as polynomials in q. */
struct ComponentDegreeRow {
  std::string label;
  std::array<Poly, 4> degrees;
};

const std::vector<RestrictionRow>& so5_restriction_table();
const std::vector<Restriction7Row>& so7_restriction_table();
const std::vector<ComponentDegreeRow>& component_degree_table(int n);

/** Full decomposition of chi_l restricted to P: payload names with multiplicities per type. */
struct DecompositionRecord {
  UnipotentLabel label;
  std::array<std::vector<std::pair<std::string, int>>, 4> components;
  std::array<Rational, 4> degrees;
};

DecompositionRecord decomposition_record(const OrthoContext& ctx, const UnipotentLabel& label);
nlohmann::json record_json(const DecompositionRecord& r);
/** One CSV line per (q, label, type, payload) with its multiplicity, after an optional header line. */
std::string records_csv(int q, const std::vector<DecompositionRecord>& records, bool header = true);

/** The SO_5 restriction table at q. */
CheckList verify_so5_table(int q, const std::vector<RestrictionRow>& rows = so5_restriction_table());
/** Component degrees by component_split and by the values on z, against the table. */
CheckList verify_component_degree_table(int n, int q, const std::vector<ComponentDegreeRow>& rows);
CheckList verify_component_degree_table(int n, int q);
/** The SO_7 Type 1 and Type 0 table, Gamma, and the partial Type +- statements. */
CheckList verify_so7_table(int q, const std::vector<Restriction7Row>& rows = so7_restriction_table());
/** Type +- components of every unipotent character of SO_7(q) restricted to P_7, with degree consistency checks. */
std::vector<DecompositionRecord> compute_new_pm_components(int q, CheckList* checks = nullptr);
/** JSON document for compute_new_pm_components, flagged as having no reference data. */
nlohmann::json new_pm_json(int q, const std::vector<DecompositionRecord>& records);

/** Exhaustive field axioms for GF(q). */
CheckList check_field_axioms(int q);
/** Ring axioms of the cyclotomic numbers on seeded random elements. */
CheckList check_cyclotomic_axioms(unsigned seed, int samples);
/** Frobenius reciprocity on seeded random pairs for P_n inside SO_n(q). */
CheckList check_frobenius(int n, int q, unsigned seed, int samples);
/** Row and column orthogonality of the Dixon table of SO_n(q) and of L^pm. */
CheckList check_table_orthogonality(int n, int q);
/** Orders of GO^pm_{2m}(q) by isometry search against the closed formula. */
CheckList check_go_orders(int m, int q);

struct ReportEntry {
  std::string id;
  int criterion = 0;
  CheckResult result;
};

class VerificationReport {
 public:
  void add(const std::string& id, int criterion, const CheckList& checks);
  const std::vector<ReportEntry>& entries() const { return entries_; }
  bool ok() const;
  int count(CheckResult::Status s) const;
  /** 0 when nothing mismatched, 1 otherwise. */
  int exit_code() const { return ok() ? 0 : 1; }
  nlohmann::json to_json() const;
  std::string csv() const;

 private:
  std::vector<ReportEntry> entries_;
};

/** A named batch of checks for one acceptance criterion. */
struct SuiteJob {
  std::string id;
  int criterion;
  std::function<CheckList()> run;
};

/** Jobs of "quick", "standard" or "extended"; throws std::invalid_argument for other names. */
std::vector<SuiteJob> suite_jobs(const std::string& level);
/** Runs the jobs in order, printing one progress line per job to log when given. */
VerificationReport run_suite(const std::string& level, std::ostream* log = nullptr);

}  // namespace orthochar
