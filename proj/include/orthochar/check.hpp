/**
 * @file check.hpp
 * @brief A single verified claim: identifier, parameters, status and the compared values.
 */
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace orthochar {

struct CheckResult {
  enum class Status { Match, Mismatch, Skipped };

  std::string claim;
  std::string params;
  Status status = Status::Match;
  std::string expected;
  std::string computed;

  bool ok() const { return status != Status::Mismatch; }
  std::string status_name() const {
    switch (status) {
      case Status::Match: return "match";
      case Status::Mismatch: return "mismatch";
      default: return "skipped";
    }
  }
  nlohmann::json to_json() const {
    return {{"claim", claim}, {"params", params}, {"status", status_name()},
            {"expected", expected}, {"computed", computed}};
  }
};

using CheckList = std::vector<CheckResult>;

/** Match when expected equals computed. */
inline CheckResult make_check(std::string claim, std::string params, std::string expected,
                              std::string computed) {
  CheckResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.status = expected == computed ? CheckResult::Status::Match : CheckResult::Status::Mismatch;
  r.expected = std::move(expected);
  r.computed = std::move(computed);
  return r;
}

inline CheckResult make_bool_check(std::string claim, std::string params, bool holds,
                                   std::string detail = "") {
  CheckResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.status = holds ? CheckResult::Status::Match : CheckResult::Status::Mismatch;
  r.expected = "holds";
  r.computed = holds ? "holds" : (detail.empty() ? "fails" : detail);
  return r;
}

inline CheckResult make_skipped(std::string claim, std::string params, std::string reason) {
  CheckResult r;
  r.claim = std::move(claim);
  r.params = std::move(params);
  r.status = CheckResult::Status::Skipped;
  r.computed = std::move(reason);
  return r;
}

inline bool all_ok(const CheckList& l) {
  for (const auto& c : l)
    if (!c.ok()) return false;
  return true;
}

}  // namespace orthochar
