/**
 * @file orthochar.cpp
 * @brief Command-line front end: verification suites, Irr(P_n), restrictions of
 * unipotent characters, group and context dumps.
 *
 * Exit status 0 when every checked identity holds, 1 on a mismatch or a
 * failed computation, 2 on a usage or configuration error.
 */
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <stdexcept>

#include "orthochar/clifford.hpp"
#include "orthochar/ortho.hpp"
#include "orthochar/symbols.hpp"
#include "orthochar/verify.hpp"

using namespace orthochar;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

ContextPtr context_for(int n, int q) {
  if (n != 3 && n != 5 && n != 7) throw UsageError("n must be 3, 5 or 7");
  try {
    field_of_order(q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return OrthoContext::get(n, q);
}

const OrthoContext& enumerable_context(int n, int q) {
  ContextPtr ctx = context_for(n, q);
  if (!ctx->p_enumerable()) throw UsageError("P_" + std::to_string(n) + "(" + std::to_string(q) + ") exceeds the enumeration bound");
  return *ctx;
}

int print_checks(const CheckList& checks) {
  int bad = 0;
  for (const auto& c : checks) {
    std::cout << std::left << std::setw(9) << c.status_name() << c.claim << " [" << c.params << "]";
    if (c.status != CheckResult::Status::Match) std::cout << "\n    expected: " << c.expected << "\n    computed: " << c.computed;
    std::cout << "\n";
    bad += c.status == CheckResult::Status::Mismatch;
  }
  std::cout << checks.size() << " checks, " << bad << " mismatches\n";
  return bad ? 1 : 0;
}

std::vector<std::pair<int, int>> decomposition_tuples(const std::string& level) {
  if (level == "quick") return {{5, 2}};
  return {{5, 2}, {5, 3}, {7, 2}};
}

int cmd_verify(const std::string& level, const std::string& json_path, const std::string& csv_path,
               std::string new_json_path) {
  VerificationReport report = run_suite(level, &std::cout);
  std::cout << "\n"
            << report.count(CheckResult::Status::Match) << " match, " << report.count(CheckResult::Status::Mismatch)
            << " mismatch, " << report.count(CheckResult::Status::Skipped) << " skipped\n";
  if (!json_path.empty()) {
    nlohmann::json j = report.to_json();
    j["suite"] = level;
    write_file(json_path, j.dump(2));
    if (new_json_path.empty() && level != "quick") {
      std::filesystem::path p(json_path);
      new_json_path = (p.parent_path() / (p.stem().string() + ".new-pm.json")).string();
    }
  }
  if (!csv_path.empty()) {
    std::string csv;
    for (auto [n, q] : decomposition_tuples(level)) {
      const OrthoContext& ctx = *OrthoContext::get(n, q);
      std::vector<DecompositionRecord> records;
      for (const auto& row : unipotent_rows(n)) records.push_back(decomposition_record(ctx, row.label));
      csv += records_csv(q, records, csv.empty());
    }
    write_file(csv_path, csv);
  }
  if (!new_json_path.empty()) {
    if (level == "quick") throw UsageError("the Type +- components of SO_7(2) are computed by the standard and extended suites");
    write_file(new_json_path, new_pm_json(2, compute_new_pm_components(2)).dump(2));
    std::cout << "Type +- components of SO_7(2) restrictions written to " << new_json_path
              << " (no reference values exist for them)\n";
  }
  return report.exit_code();
}

int cmd_irr_p(int n, int q, const std::string& json_path) {
  const auto& cc = CliffordContext::of(enumerable_context(n, q));
  if (!json_path.empty()) write_file(json_path, cc.irr_json().dump(2));
  std::cout << "Irr(P_" << n << ") at q = " << q << ": " << cc.irr().size() << " characters\n";
  for (const auto& e : cc.irr())
    std::cout << "  " << std::left << std::setw(8) << ("Type " + ptype_symbol(e.label.type)) << std::setw(36)
              << e.label.name << " degree " << rational_to_string(e.chi.degree()) << "\n";
  return 0;
}

int cmd_restrict(int n, int q, const std::string& label, const std::string& json_path) {
  if (n != 5 && n != 7) throw UsageError("restrictions are available for n = 5 and n = 7");
  const OrthoContext& ctx = enumerable_context(n, q);
  UnipotentLabel l;
  try {
    l = UnipotentLabel::parse(label);
    unipotent_row(l);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (2 * l.rank() + 1 != n) throw UsageError(l.str() + " is not a unipotent label of SO_" + std::to_string(n));
  DecompositionRecord r = decomposition_record(ctx, l);
  if (!json_path.empty()) write_file(json_path, record_json(r).dump(2));
  std::cout << "chi_" << l.str() << " restricted to P_" << n << " at q = " << q << "\n";
  for (PType t : kPTypes) {
    std::cout << "  Type " << ptype_symbol(t) << " (degree " << rational_to_string(r.degrees[static_cast<int>(t)]) << "): ";
    const auto& comps = r.components[static_cast<int>(t)];
    if (comps.empty()) std::cout << "0";
    for (size_t i = 0; i < comps.size(); ++i)
      std::cout << (i ? " + " : "") << (comps[i].second == 1 ? "" : std::to_string(comps[i].second) + "*")
                << comps[i].first;
    std::cout << "\n";
  }
  return 0;
}

int cmd_dump_group(const std::string& kind, int n, int q, const std::string& out_path) {
  nlohmann::json j;
  if (kind == "go-plus" || kind == "go-minus") {
    if (n % 2) throw UsageError("GO^pm_n needs even n");
    j = go_even_group(n / 2, q, kind == "go-plus")->to_json();
  } else {
    ContextPtr ctx = context_for(n, q);
    if (kind == "so") {
      if (!ctx->g_enumerable()) throw UsageError("SO_" + std::to_string(n) + "(" + std::to_string(q) + ") exceeds the enumeration bound");
      j = ctx->G().to_json();
    } else {
      const OrthoContext& c = enumerable_context(n, q);
      if (kind == "p") j = c.P().to_json();
      else if (kind == "u") j = c.U().to_json();
      else j = c.L().to_json();
    }
  }
  if (out_path.empty()) std::cout << j.dump(2) << "\n";
  else write_file(out_path, j.dump(2));
  return 0;
}

int cmd_symbols_table(int n, int q, const std::string& json_path) {
  if (n != 1 && n != 3 && n != 5 && n != 7) throw UsageError("label tables exist for n = 1, 3, 5 and 7");
  nlohmann::json rows = nlohmann::json::array();
  std::cout << std::left << std::setw(12) << "label" << std::setw(26) << "symbol" << std::setw(34) << "degree"
            << "at q = " << q << "\n";
  for (const auto& r : unipotent_rows(n)) {
    const std::string d = rational_to_string(r.degree.eval(q));
    std::cout << std::setw(12) << r.label.str() << std::setw(26) << r.symbol.str() << std::setw(34) << r.degree.str()
              << d << "\n";
    nlohmann::json row = {{"label", r.label.str()}, {"symbol", r.symbol.str()}, {"degree", r.degree.str()},
                          {"degree_at_q", d}};
    if (r.has_z) {
      const auto& z = q % 2 ? r.z_odd : r.z_even;
      row["values_on_z"] = {z[0].str(), z[1].str(), z[2].str()};
    }
    rows.push_back(row);
  }
  if (!json_path.empty()) write_file(json_path, nlohmann::json{{"n", n}, {"q", q}, {"rows", rows}}.dump(2));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character theory of SO_n(q) and its maximal parabolic subgroup P_n"};
  app.require_subcommand(1);
  int n = 5, q = 2;
  std::string suite = "standard", json_path, csv_path, new_json_path, label, kind = "so", out_path;

  auto add_nq = [&](CLI::App* c) {
    c->add_option("--n", n, "Dimension n")->required();
    c->add_option("--q", q, "Field order q")->required();
  };

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "quick, standard or extended")
      ->check(CLI::IsMember({"quick", "standard", "extended"}));
  verify->add_option("--json", json_path, "Write the report as JSON");
  verify->add_option("--csv", csv_path, "Write the decomposition tables as CSV");
  verify->add_option("--new-json", new_json_path, "Write the Type +- components of SO_7(2) restrictions");

  auto* irr_p = app.add_subcommand("irr-p", "List Irr(P_n)");
  add_nq(irr_p);
  irr_p->add_option("--json", json_path, "Write the characters as JSON");

  auto* restrict_cmd = app.add_subcommand("restrict", "Decompose a unipotent character restricted to P_n");
  add_nq(restrict_cmd);
  restrict_cmd->add_option("--label", label, "Unipotent label such as [1,1,1]")->required();
  restrict_cmd->add_option("--json", json_path, "Write the decomposition as JSON");

  auto* dump_group = app.add_subcommand("dump-group", "Dump a matrix group as JSON");
  dump_group->add_option("--kind", kind, "so, p, u, l, go-plus or go-minus")
      ->check(CLI::IsMember({"so", "p", "u", "l", "go-plus", "go-minus"}));
  add_nq(dump_group);
  dump_group->add_option("--out", out_path, "Output file instead of standard output");

  auto* ortho = app.add_subcommand("ortho", "Parabolic data");
  ortho->require_subcommand(1);
  auto* ortho_dump = ortho->add_subcommand("dump", "Orders, generators and distinguished elements as JSON");
  add_nq(ortho_dump);

  auto* clifford = app.add_subcommand("clifford", "Irr(P_n) by Clifford theory");
  clifford->require_subcommand(1);
  auto* clifford_irr = clifford->add_subcommand("irr", "List Irr(P_n) by type");
  add_nq(clifford_irr);
  clifford_irr->add_option("--json", json_path, "Write the characters as JSON");
  auto* clifford_thm = clifford->add_subcommand("verify-induction", "Check the induction identities from RQ_K");
  clifford_thm->alias("verify-thm42");
  add_nq(clifford_thm);

  auto* symbols = app.add_subcommand("symbols", "Unipotent label tables");
  symbols->require_subcommand(1);
  auto* symbols_table = symbols->add_subcommand("table", "Labels, symbols and degrees");
  add_nq(symbols_table);
  symbols_table->add_option("--json", json_path, "Write the table as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, json_path, csv_path, new_json_path);
    if (*irr_p || *clifford_irr) return cmd_irr_p(n, q, json_path);
    if (*restrict_cmd) return cmd_restrict(n, q, label, json_path);
    if (*dump_group) return cmd_dump_group(kind, n, q, out_path);
    if (*ortho_dump) {
      std::cout << context_for(n, q)->dump().dump(2) << "\n";
      return 0;
    }
    if (*clifford_thm) return print_checks(check_rqk_induction(enumerable_context(n, q)));
    if (*symbols_table) return cmd_symbols_table(n, q, json_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
