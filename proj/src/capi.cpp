// C ABI over the driver layer.  Exceptions stop here: every entry point
// catches, records a thread-local diagnostic, and returns a status code.
#include "hopfkit/capi.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "hopfkit/driver.hpp"
#include "hopfkit/report.hpp"
#include "hopfkit/scalar.hpp"

struct hk_report {
  hopfkit::ReportDocument doc;
};

namespace {

thread_local std::string g_last_error;

hk_status status_of(hopfkit::errc code) {
  using hopfkit::errc;
  switch (code) {
    case errc::parse_error: return HK_ERR_PARSE;
    case errc::unknown_preset: return HK_ERR_UNKNOWN_PRESET;
    case errc::invalid_argument:
    case errc::out_of_range:
    case errc::field_mismatch:
    case errc::degenerate_q:
    case errc::algebra_mismatch: return HK_ERR_INVALID_ARGUMENT;
    case errc::axiom_failure: return HK_ERR_AXIOM_FAILURE;
    case errc::io_error: return HK_ERR_IO;
    default: return HK_ERR_INTERNAL;
  }
}

hopfkit::DriverOptions convert(const hk_options* options) {
  hopfkit::DriverOptions opts;
  if (options == nullptr) return opts;
  if (options->window > 0) opts.window = options->window;
  if (options->degree > 0) opts.degree = options->degree;
  if (options->order_bound > 0)
    opts.order_bound = static_cast<unsigned long>(options->order_bound);
  if (options->field != nullptr && *options->field != '\0')
    opts.field = options->field;
  return opts;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs `body`, translating exceptions into status codes + g_last_error.
template <class Body>
hk_status guarded(Body&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const hopfkit::error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return HK_ERR_INTERNAL;
  }
}

const hopfkit::CheckResult* check_at(const hk_report* r, size_t index) {
  if (r == nullptr || index >= r->doc.report.checks.size()) return nullptr;
  return &r->doc.report.checks[index];
}

}  // namespace

extern "C" {

const char* hk_version(void) { return hopfkit::engine_version(); }

const char* hk_last_error(void) { return g_last_error.c_str(); }

hk_status hk_verify(const char* target, const char* battery,
                    const hk_options* options, hk_report** out) {
  if (target == nullptr || battery == nullptr || out == nullptr) {
    g_last_error = "hk_verify: null argument";
    return HK_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> hk_status {
    hopfkit::ReportDocument doc =
        hopfkit::cmd_verify(target, battery, convert(options));
    *out = new hk_report{std::move(doc)};
    return HK_OK;
  });
}

hk_status hk_inspect(const char* target, const char* what,
                     const hk_options* options, hk_report** out) {
  if (target == nullptr || what == nullptr || out == nullptr) {
    g_last_error = "hk_inspect: null argument";
    return HK_ERR_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&]() -> hk_status {
    hopfkit::ReportDocument doc =
        hopfkit::cmd_inspect(target, what, convert(options));
    *out = new hk_report{std::move(doc)};
    return HK_OK;
  });
}

hk_status hk_export_preset(const char* preset, const hk_options* options,
                           char** out_text) {
  if (preset == nullptr || out_text == nullptr) {
    g_last_error = "hk_export_preset: null argument";
    return HK_ERR_INVALID_ARGUMENT;
  }
  *out_text = nullptr;
  return guarded([&]() -> hk_status {
    std::string text = hopfkit::export_preset(preset, convert(options));
    *out_text = dup_string(text);
    if (*out_text == nullptr) {
      g_last_error = "out of memory";
      return HK_ERR_INTERNAL;
    }
    return HK_OK;
  });
}

int hk_report_ok(const hk_report* r) {
  return (r != nullptr && r->doc.ok()) ? 1 : 0;
}

char* hk_report_json(const hk_report* r) {
  if (r == nullptr) return nullptr;
  return dup_string(r->doc.json());
}

char* hk_report_table(const hk_report* r) {
  if (r == nullptr) return nullptr;
  return dup_string(r->doc.table());
}

size_t hk_report_size(const hk_report* r) {
  return r == nullptr ? 0 : r->doc.report.checks.size();
}

const char* hk_check_name(const hk_report* r, size_t index) {
  const hopfkit::CheckResult* c = check_at(r, index);
  return c == nullptr ? nullptr : c->name.c_str();
}

const char* hk_check_status(const hk_report* r, size_t index) {
  const hopfkit::CheckResult* c = check_at(r, index);
  return c == nullptr ? nullptr : hopfkit::to_string(c->status);
}

const char* hk_check_witness(const hk_report* r, size_t index) {
  const hopfkit::CheckResult* c = check_at(r, index);
  return c == nullptr ? nullptr : c->witness.c_str();
}

const char* hk_check_detail(const hk_report* r, size_t index) {
  const hopfkit::CheckResult* c = check_at(r, index);
  return c == nullptr ? nullptr : c->detail.c_str();
}

void hk_report_free(hk_report* r) { delete r; }

void hk_string_free(char* s) { std::free(s); }

}  // extern "C"
