/* hopfkit C API: the stable ABI boundary over the exact-arithmetic Hopf
 * algebra engine.  Every entry point returns an hk_status; results come back
 * through opaque handles or malloc'd strings, never by throwing.  The header
 * is plain C so the library can be consumed without a C++ toolchain.
 *
 * Conventions:
 *   - All functions are thread-compatible: distinct threads may call into the
 *     library concurrently as long as they do not share an hk_report.
 *   - Strings returned as `char*` are owned by the caller; release them with
 *     hk_string_free.  Strings returned as `const char*` are borrowed — they
 *     stay valid for the lifetime of the report (check accessors) or have
 *     static/thread-local storage (hk_version, hk_last_error).
 *   - On failure the thread-local message from hk_last_error carries the
 *     diagnostic (including axiom-failure witnesses and parse locations).
 */
#ifndef HOPFKIT_CAPI_H
#define HOPFKIT_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status code returned by every fallible entry point. */
typedef enum hk_status {
  HK_OK = 0,
  HK_ERR_PARSE = 1,            /* malformed algebra file or scalar literal */
  HK_ERR_UNKNOWN_PRESET = 2,   /* unresolvable target, battery, or topic */
  HK_ERR_INVALID_ARGUMENT = 3, /* option out of range or inapplicable */
  HK_ERR_AXIOM_FAILURE = 4,    /* presentation violates a Hopf axiom */
  HK_ERR_IO = 5,               /* file could not be read */
  HK_ERR_INTERNAL = 6          /* anything else; see hk_last_error */
} hk_status;

/* Options shared by verify/inspect/export.  Zero-initialize, then set only
 * the fields you need; a nonpositive value (or NULL field) selects the
 * engine default.
 *   window      truncation window |k| <= window for bicrossproduct targets
 *   degree      PBW degree window for the quantum coordinate ring
 *   order_bound search bound for antipode/grouplike order measurements
 *   field       base field for group presets: "Q", "Fp:<p>", "cyclotomic:<n>"
 */
typedef struct hk_options {
  int window;
  int degree;
  long order_bound;
  const char* field;
} hk_options;

/* Opaque verification report produced by hk_verify / hk_inspect. */
typedef struct hk_report hk_report;

/* Semantic version of the engine, e.g. "0.1.0".  Static storage. */
const char* hk_version(void);

/* Diagnostic for the most recent failing call on this thread; empty string
 * if the last call succeeded.  Thread-local storage — do not free. */
const char* hk_last_error(void);

/* Run a verification battery against a target.
 *   target   preset ("sweedler", "taft:3", "group:C5", "dual:sweedler",
 *            "tensor:group:C2:group:C2", "bicross:2", "qsl2", ...) or a path
 *            to a structure-constant algebra file
 *   battery  "axioms" | "integrals" | "radford" | "mainss" | "all"
 * On success stores a new report in *out; release with hk_report_free. */
hk_status hk_verify(const char* target, const char* battery,
                    const hk_options* options, hk_report** out);

/* Compute and print the requested objects as a report of value entries.
 *   what  "integrals" | "grouplikes" | "nakayama" | "orders"             */
hk_status hk_inspect(const char* target, const char* what,
                     const hk_options* options, hk_report** out);

/* Serialize a finite-dimensional preset in the line-oriented algebra file
 * format.  On success stores a malloc'd NUL-terminated string in *out_text;
 * release with hk_string_free. */
hk_status hk_export_preset(const char* preset, const hk_options* options,
                           char** out_text);

/* 1 if the report contains no failing check (not-applicable entries do not
 * count against it), 0 otherwise or if r is NULL. */
int hk_report_ok(const hk_report* r);

/* Machine-readable report: one JSON object per line, header first.
 * Malloc'd; release with hk_string_free.  NULL only on allocation failure. */
char* hk_report_json(const hk_report* r);

/* Human-readable fixed-width table.  Malloc'd; release with hk_string_free. */
char* hk_report_table(const hk_report* r);

/* Number of checks in the report (0 if r is NULL). */
size_t hk_report_size(const hk_report* r);

/* Per-check accessors; index must be < hk_report_size(r), else NULL.
 * Returned strings are borrowed from the report — do not free, and do not
 * use them after hk_report_free. */
const char* hk_check_name(const hk_report* r, size_t index);
const char* hk_check_status(const hk_report* r, size_t index); /* "pass" | "fail" | "not-applicable" */
const char* hk_check_witness(const hk_report* r, size_t index);
const char* hk_check_detail(const hk_report* r, size_t index);

/* Release a report.  NULL is a no-op. */
void hk_report_free(hk_report* r);

/* Release a string returned through a `char*` out-parameter.  NULL is a
 * no-op. */
void hk_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* HOPFKIT_CAPI_H */
