// Exercises the C ABI from C++: status-code mapping, handle lifetime,
// option plumbing, and agreement between the accessors and the JSON body.
// Links only the shared library, exactly like an external consumer.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cctype>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "hopfkit/capi.h"

namespace {

using report_ptr = std::unique_ptr<hk_report, decltype(&hk_report_free)>;
using string_ptr = std::unique_ptr<char, decltype(&hk_string_free)>;

report_ptr verify(const char* target, const char* battery, hk_status& st,
                  const hk_options* opts = nullptr) {
  hk_report* raw = nullptr;
  st = hk_verify(target, battery, opts, &raw);
  return report_ptr(raw, &hk_report_free);
}

report_ptr inspect(const char* target, const char* what, hk_status& st,
                   const hk_options* opts = nullptr) {
  hk_report* raw = nullptr;
  st = hk_inspect(target, what, opts, &raw);
  return report_ptr(raw, &hk_report_free);
}

std::string json_of(const hk_report* r) {
  string_ptr s(hk_report_json(r), &hk_string_free);
  REQUIRE(s != nullptr);
  return std::string(s.get());
}

std::string table_of(const hk_report* r) {
  string_ptr s(hk_report_table(r), &hk_string_free);
  REQUIRE(s != nullptr);
  return std::string(s.get());
}

std::filesystem::path temp_file(const char* name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  REQUIRE(out.good());
  out << text;
}

}  // namespace

TEST_CASE("version and clean error state") {
  REQUIRE(hk_version() != nullptr);
  std::string v = hk_version();
  CHECK(v.find('.') != std::string::npos);
  for (char ch : v) CHECK((std::isdigit(static_cast<unsigned char>(ch)) || ch == '.'));
  REQUIRE(hk_last_error() != nullptr);
}

TEST_CASE("verify produces a report whose accessors mirror the JSON") {
  hk_status st;
  report_ptr rep = verify("sweedler", "all", st);
  REQUIRE(st == HK_OK);
  REQUIRE(rep != nullptr);
  CHECK(hk_report_ok(rep.get()) == 1);
  CHECK(std::string(hk_last_error()).empty());

  const size_t n = hk_report_size(rep.get());
  REQUIRE(n > 10);
  std::string json = json_of(rep.get());
  CHECK(json.find(std::string("\"engine\":\"hopfkit ") + hk_version() + "\"") !=
        std::string::npos);
  CHECK(json.find("\"checks\":" + std::to_string(n)) != std::string::npos);

  bool saw_s4 = false;
  for (size_t i = 0; i < n; ++i) {
    const char* name = hk_check_name(rep.get(), i);
    const char* status = hk_check_status(rep.get(), i);
    const char* detail = hk_check_detail(rep.get(), i);
    REQUIRE(name != nullptr);
    REQUIRE(status != nullptr);
    REQUIRE(detail != nullptr);
    REQUIRE(hk_check_witness(rep.get(), i) != nullptr);
    if (std::strcmp(name, "s4-radford-formula") == 0) saw_s4 = true;
    // Every check the accessors expose appears verbatim in the JSON body.
    CHECK(json.find("\"check\":\"" + std::string(name) + "\"") != std::string::npos);
  }
  CHECK(saw_s4);

  // Out-of-range indices and NULL handles degrade to NULL/0, never UB.
  CHECK(hk_check_name(rep.get(), n) == nullptr);
  CHECK(hk_check_status(rep.get(), n) == nullptr);
  CHECK(hk_report_ok(nullptr) == 0);
  CHECK(hk_report_size(nullptr) == 0);
  CHECK(hk_report_json(nullptr) == nullptr);
  CHECK(hk_report_table(nullptr) == nullptr);

  std::string table = table_of(rep.get());
  CHECK(table.find("status: pass") != std::string::npos);
  CHECK(table.find("s4-radford-formula") != std::string::npos);
}

TEST_CASE("two runs through the ABI are byte-identical") {
  hk_status st1, st2;
  report_ptr a = verify("taft:3", "all", st1);
  report_ptr b = verify("taft:3", "all", st2);
  REQUIRE(st1 == HK_OK);
  REQUIRE(st2 == HK_OK);
  CHECK(json_of(a.get()) == json_of(b.get()));
  CHECK(table_of(a.get()) == table_of(b.get()));

  char* e1 = nullptr;
  char* e2 = nullptr;
  REQUIRE(hk_export_preset("taft:3", nullptr, &e1) == HK_OK);
  REQUIRE(hk_export_preset("taft:3", nullptr, &e2) == HK_OK);
  CHECK(std::string(e1) == std::string(e2));
  hk_string_free(e1);
  hk_string_free(e2);
}

TEST_CASE("options thread through to the engine") {
  hk_status st;
  hk_options opts{};

  opts.window = 3;
  report_ptr bic = verify("bicross:2", "axioms", st, &opts);
  REQUIRE(st == HK_OK);
  CHECK(json_of(bic.get()).find("\"window\":\"window |k| <= 3\"") != std::string::npos);

  opts = hk_options{};
  opts.degree = 3;
  report_ptr qsl = verify("qsl2", "axioms", st, &opts);
  REQUIRE(st == HK_OK);
  CHECK(json_of(qsl.get()).find("\"window\":\"degree <= 3\"") != std::string::npos);

  opts = hk_options{};
  opts.order_bound = 7;
  report_ptr ord = inspect("sweedler", "orders", st, &opts);
  REQUIRE(st == HK_OK);
  CHECK(json_of(ord.get()).find("bound 7") != std::string::npos);

  opts = hk_options{};
  opts.field = "Fp:5";
  report_ptr c5 = verify("group:C5", "mainss", st, &opts);
  REQUIRE(st == HK_OK);
  CHECK(hk_report_ok(c5.get()) == 1);
  CHECK(json_of(c5.get()).find("\"target\":\"group:C5/Fp:5\"") != std::string::npos);

  // Zero-initialized options mean engine defaults: same result as NULL.
  hk_options zeros{};
  report_ptr with_zeros = verify("sweedler", "axioms", st, &zeros);
  REQUIRE(st == HK_OK);
  report_ptr with_null = verify("sweedler", "axioms", st);
  REQUIRE(st == HK_OK);
  CHECK(json_of(with_zeros.get()) == json_of(with_null.get()));
}

TEST_CASE("status codes map the failure classes") {
  hk_status st;

  report_ptr unknown = verify("nonesuch", "axioms", st);
  CHECK(st == HK_ERR_UNKNOWN_PRESET);
  CHECK(unknown == nullptr);
  CHECK(std::string(hk_last_error()).find("unknown preset") != std::string::npos);

  verify("sweedler", "nonesuch", st);
  CHECK(st == HK_ERR_UNKNOWN_PRESET);

  inspect("sweedler", "nonesuch", st);
  CHECK(st == HK_ERR_UNKNOWN_PRESET);

  // --field applies to group presets only.
  hk_options opts{};
  opts.field = "Fp:5";
  verify("sweedler", "axioms", st, &opts);
  CHECK(st == HK_ERR_INVALID_ARGUMENT);
  CHECK(!std::string(hk_last_error()).empty());

  // Infinite-dimensional targets have no structure-constant file.
  char* text = nullptr;
  CHECK(hk_export_preset("qsl2", nullptr, &text) == HK_ERR_INVALID_ARGUMENT);
  CHECK(text == nullptr);

  // NULL arguments are rejected, not dereferenced.
  hk_report* raw = nullptr;
  CHECK(hk_verify(nullptr, "axioms", nullptr, &raw) == HK_ERR_INVALID_ARGUMENT);
  CHECK(hk_verify("sweedler", nullptr, nullptr, &raw) == HK_ERR_INVALID_ARGUMENT);
  CHECK(hk_verify("sweedler", "axioms", nullptr, nullptr) == HK_ERR_INVALID_ARGUMENT);
  CHECK(hk_inspect(nullptr, "orders", nullptr, &raw) == HK_ERR_INVALID_ARGUMENT);
  CHECK(hk_export_preset(nullptr, nullptr, &text) == HK_ERR_INVALID_ARGUMENT);
}

TEST_CASE("file targets route parse and axiom failures through the ABI") {
  hk_status st;

  // Round trip: export a preset, reload it from disk by path.
  char* text_raw = nullptr;
  REQUIRE(hk_export_preset("group:C2", nullptr, &text_raw) == HK_OK);
  string_ptr guard(text_raw, &hk_string_free);
  std::string text(text_raw);

  const auto good = temp_file("hopfkit_capi_roundtrip.jsonl");
  write_file(good, text);
  report_ptr loaded = verify(good.string().c_str(), "axioms", st);
  REQUIRE(st == HK_OK);
  CHECK(hk_report_ok(loaded.get()) == 1);

  // Flip S(g) to -g: still invertible, so the axiom battery itself trips.
  const std::string entry = "{\"record\":\"antipode\",\"i\":1,\"j\":1,\"c\":\"1\"}";
  const auto pos = text.find(entry);
  REQUIRE(pos != std::string::npos);
  std::string tampered = text;
  tampered.replace(pos, entry.size(),
                   "{\"record\":\"antipode\",\"i\":1,\"j\":1,\"c\":\"-1\"}");
  const auto bad = temp_file("hopfkit_capi_tamper.jsonl");
  write_file(bad, tampered);
  verify(bad.string().c_str(), "axioms", st);
  CHECK(st == HK_ERR_AXIOM_FAILURE);
  CHECK(std::string(hk_last_error()).find("antipode") != std::string::npos);

  // Malformed line: parse error with a line-numbered diagnostic.
  const auto garbage = temp_file("hopfkit_capi_garbage.jsonl");
  write_file(garbage, text + "this is not json\n");
  verify(garbage.string().c_str(), "axioms", st);
  CHECK(st == HK_ERR_PARSE);
  CHECK(std::string(hk_last_error()).find("invalid JSON") != std::string::npos);

  std::filesystem::remove(good);
  std::filesystem::remove(bad);
  std::filesystem::remove(garbage);
}

TEST_CASE("inspect topics work through the ABI") {
  hk_status st;
  report_ptr gl = inspect("taft:3", "grouplikes", st);
  REQUIRE(st == HK_OK);
  CHECK(hk_report_ok(gl.get()) == 1);
  std::string json = json_of(gl.get());
  CHECK(json.find("\"command\":\"inspect\"") != std::string::npos);
  CHECK(json.find("order-g") != std::string::npos);

  report_ptr nak = inspect("qsl2", "nakayama", st);
  REQUIRE(st == HK_OK);
  CHECK(json_of(nak.get()).find("nakayama-chi-a") != std::string::npos);
}
