// ddbar: cohomology reports for double complexes of invariant forms.
//
// Exit codes: 0 success (or the Lemma holds), 1 the Lemma fails (lemma
// command only), 2 input error.
#include <iostream>

#include <CLI11.hpp>

#include "ddbar/catalog.hpp"
#include "ddbar/report.hpp"

namespace {

using namespace ddbar;

constexpr int kInputError = 2;

void print_json(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_report(const std::string& target, bool json, const ReportOptions& opts) {
  const Report r = build_report(resolve(target), opts);
  if (json) {
    print_json(render_json(r));
  } else {
    std::cout << render_text(r);
  }
  return 0;
}

int cmd_lemma(const std::string& target, bool json) {
  const CatalogEntry e = resolve(target);
  const LemmaVerdict v = lemma_verdict(complex_of(e));
  if (json) {
    nlohmann::ordered_json j;
    j["name"] = e.key;
    j["holds"] = v.holds();
    j["natural_map_injective"] = v.by_natural_map;
    j["delta_vanishes"] = v.by_delta;
    j["bott_chern_equals_aeppli"] = v.by_bc_equals_a;
    j["criteria_agree"] = v.agree();
    print_json(j);
  } else {
    std::cout << e.key << ": " << lemma_line(v) << "\n";
  }
  return v.holds() ? 0 : 1;
}

int cmd_symplectic(const std::string& target, bool json, const ReportOptions& opts) {
  const CatalogEntry e = resolve(target);
  if (e.kind != ModelKind::Symplectic) {
    throw CapabilityError("\"" + e.key + "\" is a " + to_string(e.kind) + " model, not a symplectic one");
  }
  return cmd_report(target, json, opts);
}

int cmd_validate(const std::string& target, bool json) {
  const auto builtin = find_builtin(target);
  const CatalogEntry e = builtin ? *builtin : parse_file(target);
  const auto results = check_entry(e);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok;
  if (json) {
    nlohmann::ordered_json j;
    j["name"] = e.key;
    j["kind"] = to_string(e.kind);
    j["valid"] = ok;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : results) checks.push_back({{"identity", r.identity}, {"ok", r.ok}, {"detail", r.detail}});
    j["checks"] = std::move(checks);
    print_json(j);
  } else {
    std::cout << e.key << " (" << to_string(e.kind) << ")\n";
    for (const auto& r : results) {
      std::cout << (r.ok ? "  PASS " : "  FAIL ") << r.identity;
      if (!r.ok && !r.detail.empty()) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
  }
  if (!ok) {
    for (const auto& r : results) {
      if (!r.ok) {
        std::cerr << "error: " << r.identity << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
        break;
      }
    }
  }
  return ok ? 0 : kInputError;
}

int cmd_list(bool json) {
  if (json) {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& e : builtins()) {
      list.push_back({{"key", e.key}, {"kind", to_string(e.kind)}, {"provenance", e.provenance}});
    }
    print_json(list);
    return 0;
  }
  for (const auto& e : builtins()) {
    std::cout << e.key << "  [" << to_string(e.kind) << "]  " << e.provenance << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddbar: Bott-Chern, Aeppli and Dolbeault invariants of double complexes"};
  app.require_subcommand(1);

  bool json = false;
  std::string target;
  std::string degrees;
  int window = 2;
  app.add_flag("--json", json, "machine-readable output");

  auto add_target = [&](CLI::App* cmd) {
    cmd->add_option("target", target, "built-in key or model file")->required();
    cmd->add_flag("--json", json, "machine-readable output");
  };

  CLI::App* report = app.add_subcommand("report", "full cohomology report");
  add_target(report);
  report->add_option("--degrees", degrees, "restrict degree rows to k1..k2");
  report->add_option("--window", window, "shear window Q for symplectic models")->check(CLI::NonNegativeNumber);

  CLI::App* lemma = app.add_subcommand("lemma", "ddbar-Lemma verdict (exit 1 when it fails)");
  add_target(lemma);

  CLI::App* symplectic = app.add_subcommand("symplectic", "Tseng-Yau report for a symplectic model");
  add_target(symplectic);
  symplectic->add_option("--degrees", degrees, "restrict degree rows to k1..k2");
  symplectic->add_option("--window", window, "shear window Q")->check(CLI::NonNegativeNumber);

  CLI::App* validate = app.add_subcommand("validate", "check every structural identity");
  add_target(validate);

  CLI::App* list = app.add_subcommand("list", "enumerate built-in models");
  list->add_flag("--json", json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    ReportOptions opts;
    opts.window = window;
    if (!degrees.empty()) opts.degrees = parse_degree_range(degrees);
    if (*report) return cmd_report(target, json, opts);
    if (*lemma) return cmd_lemma(target, json);
    if (*symplectic) return cmd_symplectic(target, json, opts);
    if (*validate) return cmd_validate(target, json);
    if (*list) return cmd_list(json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
