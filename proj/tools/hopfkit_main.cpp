// hopfkit command-line front end.  Talks to the engine exclusively through
// the C ABI (hopfkit/capi.h); the verification logic lives behind that wall.
//
// Exit codes: 0 if every applicable check passed; 1 if a check failed or a
// presentation violated a Hopf axiom (the witness is printed); 2 for usage,
// parse, and unknown-preset errors.
#include <cstdio>
#include <fstream>
#include <string>

#include "CLI11.hpp"
#include "hopfkit/capi.h"

namespace {

struct CommonFlags {
  int window = 0;
  int degree = 0;
  long order_bound = 0;
  std::string field;
  std::string json_path;

  hk_options options() const {
    hk_options opts{};
    opts.window = window;
    opts.degree = degree;
    opts.order_bound = order_bound;
    opts.field = field.empty() ? nullptr : field.c_str();
    return opts;
  }
};

void add_common_flags(CLI::App* cmd, CommonFlags* flags, bool with_json) {
  cmd->add_option("--window", flags->window,
                  "Bicrossproduct truncation window |k| <= K")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--degree", flags->degree,
                  "PBW degree window for the quantum coordinate ring")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--order-bound", flags->order_bound,
                  "Search bound for antipode/grouplike order measurements")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--field", flags->field,
                  "Base field for group presets: Q, Fp:<p>, cyclotomic:<n>");
  if (with_json)
    cmd->add_option("--json", flags->json_path,
                    "Also write the machine-readable report to PATH");
}

int exit_code_for(hk_status status) {
  switch (status) {
    case HK_OK: return 0;
    case HK_ERR_AXIOM_FAILURE:
    case HK_ERR_INTERNAL: return 1;
    default: return 2;  // parse, unknown preset, invalid argument, io
  }
}

bool write_text(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) return false;
  out << text;
  out.flush();
  return out.good();
}

// Prints the table, optionally writes the JSON report, frees the handle.
int emit_report(hk_report* report, const std::string& json_path) {
  char* table = hk_report_table(report);
  if (table != nullptr) {
    std::fputs(table, stdout);
    hk_string_free(table);
  }
  int rc = hk_report_ok(report) ? 0 : 1;
  if (!json_path.empty()) {
    char* json = hk_report_json(report);
    const bool written = json != nullptr && write_text(json_path, json);
    hk_string_free(json);
    if (!written) {
      std::fprintf(stderr, "error: could not write report to %s\n",
                   json_path.c_str());
      rc = 2;
    }
  }
  hk_report_free(report);
  return rc;
}

int fail_with_diagnostic(hk_status status) {
  std::fprintf(stderr, "error: %s\n", hk_last_error());
  return exit_code_for(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "hopfkit: exact verification of integral identities, distinguished "
      "grouplikes, and Radford's fourth-power formula for Hopf algebras"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(hk_version()); });

  std::string target, battery, what, preset, out_path;
  CommonFlags flags;

  CLI::App* verify = app.add_subcommand(
      "verify", "Run a verification battery against a preset or algebra file");
  verify->add_option("target", target,
                     "Preset (sweedler, taft:<n>, group:C<n>, group:S3, "
                     "dual:<t>, op:<t>, cop:<t>, tensor:<t>:<t>, bicross:<n>, "
                     "qsl2) or path to an algebra file")
      ->required();
  verify->add_option("battery", battery, "axioms|integrals|radford|mainss|all")
      ->required();
  add_common_flags(verify, &flags, /*with_json=*/true);

  CLI::App* inspect = app.add_subcommand(
      "inspect", "Print computed objects in coordinates as a report");
  inspect->add_option("target", target, "Preset or algebra file path")
      ->required();
  inspect->add_option("what", what, "integrals|grouplikes|nakayama|orders")
      ->required();
  add_common_flags(inspect, &flags, /*with_json=*/true);

  CLI::App* exp = app.add_subcommand(
      "export", "Write a finite-dimensional preset as an algebra file");
  exp->add_option("preset", preset, "Finite-dimensional preset name")
      ->required();
  exp->add_option("--out", out_path, "Destination path")->required();
  exp->add_option("--field", flags.field,
                  "Base field for group presets: Q, Fp:<p>, cyclotomic:<n>");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help/version or the usage error
    return rc == 0 ? 0 : 2;
  }

  const hk_options opts = flags.options();

  if (verify->parsed()) {
    hk_report* report = nullptr;
    const hk_status st = hk_verify(target.c_str(), battery.c_str(), &opts, &report);
    if (st != HK_OK) return fail_with_diagnostic(st);
    return emit_report(report, flags.json_path);
  }

  if (inspect->parsed()) {
    hk_report* report = nullptr;
    const hk_status st = hk_inspect(target.c_str(), what.c_str(), &opts, &report);
    if (st != HK_OK) return fail_with_diagnostic(st);
    return emit_report(report, flags.json_path);
  }

  // export
  char* text = nullptr;
  const hk_status st = hk_export_preset(preset.c_str(), &opts, &text);
  if (st != HK_OK) return fail_with_diagnostic(st);
  const bool written = write_text(out_path, text);
  hk_string_free(text);
  if (!written) {
    std::fprintf(stderr, "error: could not write %s\n", out_path.c_str());
    return 2;
  }
  return 0;
}
