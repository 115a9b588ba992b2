/**
 * @file test_verify.cpp
 * @brief Restriction tables, fault injection, records and reports.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orthochar/verify.hpp"

using namespace orthochar;

TEST_CASE("SO_5 restriction table at q = 2 and q = 3") {
  CHECK(all_ok(verify_so5_table(2)));
  CHECK(all_ok(verify_so5_table(3)));
}

TEST_CASE("table rows from the examples") {
  auto ctx = OrthoContext::get(5, 3);
  DecompositionRecord r = decomposition_record(*ctx, UnipotentLabel::parse("[1^2,-,1]"));
  using C = std::vector<std::pair<std::string, int>>;
  CHECK(r.components[0] == C{{"[1,-,1]", 1}});
  CHECK(r.components[1] == C{{"1psi[[-,-,1]]", 1}});
  CHECK(r.components[2].empty());
  CHECK(r.components[3] == C{{"1", 1}});
  DecompositionRecord cusp = decomposition_record(*ctx, UnipotentLabel::parse("[-,-,3]"));
  CHECK(cusp.components[3] == C{{"nu1", 1}});
  CHECK(cusp.components[0].empty());
  DecompositionRecord st2 = decomposition_record(*OrthoContext::get(5, 2), UnipotentLabel::parse("[-,1^2,1]"));
  for (const auto& [nm, k] : st2.components[2]) CHECK(nm != "nu3");
}

TEST_CASE("corrupted table rows are reported") {
  auto rows = so5_restriction_table();
  rows[3].payloads[2] = {"nu1"};
  CheckList c = verify_so5_table(2, rows);
  int bad = 0;
  for (const auto& x : c) bad += x.status == CheckResult::Status::Mismatch;
  CHECK(bad == 1);
  VerificationReport report;
  report.add("so5-restriction-table (5,2)", 9, c);
  CHECK(report.exit_code() == 1);
  CHECK(report.to_json()["mismatch"] == 1);
  CHECK(report.csv().find("mismatch") != std::string::npos);

  auto degrees = component_degree_table(5);
  degrees[0].degrees[0] = Poly(2);
  CHECK_FALSE(all_ok(verify_component_degree_table(5, 2, degrees)));
}

TEST_CASE("component-degree table for SO_5") {
  CHECK(all_ok(verify_component_degree_table(5, 2)));
  CHECK(all_ok(verify_component_degree_table(5, 3)));
}

TEST_CASE("records serialize") {
  auto ctx = OrthoContext::get(5, 2);
  std::vector<DecompositionRecord> recs;
  for (const auto& row : unipotent_rows(5)) recs.push_back(decomposition_record(*ctx, row.label));
  std::string csv = records_csv(2, recs);
  CHECK(csv.rfind("q,label,type,payload,multiplicity\n", 0) == 0);
  CHECK(csv.find("2,\"[-,-,3]\",-,\"nu1\",1") != std::string::npos);
  nlohmann::json j = record_json(recs[0]);
  CHECK(j["label"] == "[2,-,1]");
  CHECK(j["components"]["1"]["degree"] == "1");
}

TEST_CASE("suites") {
  CHECK_THROWS_AS(suite_jobs("bogus"), std::invalid_argument);
  CHECK(suite_jobs("quick").size() < suite_jobs("standard").size());
  CHECK(suite_jobs("standard").size() < suite_jobs("extended").size());
  VerificationReport a = run_suite("quick");
  VerificationReport b = run_suite("quick");
  CHECK(a.ok());
  CHECK(a.exit_code() == 0);
  CHECK(a.to_json().dump() == b.to_json().dump());
}
