/* Compiled as plain C: proves the public header needs no C++ toolchain and
 * the shared library is usable end to end from C. */
#include "hopfkit/capi.h"

#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                      \
  do {                                                                    \
    if (!(cond)) {                                                        \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);     \
      failures++;                                                         \
    }                                                                     \
  } while (0)

int main(void) {
  hk_report* rep = NULL;
  hk_status st;
  char* json = NULL;
  char* table = NULL;
  size_t i, n;

  EXPECT(hk_version() != NULL);
  EXPECT(strlen(hk_version()) >= 5);
  EXPECT(hk_last_error() != NULL);

  /* A full battery through the ABI. */
  st = hk_verify("sweedler", "all", NULL, &rep);
  EXPECT(st == HK_OK);
  EXPECT(rep != NULL);
  EXPECT(hk_report_ok(rep) == 1);
  EXPECT(hk_last_error()[0] == '\0');
  n = hk_report_size(rep);
  EXPECT(n > 10);
  for (i = 0; i < n; i++) {
    const char* status = hk_check_status(rep, i);
    EXPECT(hk_check_name(rep, i) != NULL);
    EXPECT(status != NULL);
    EXPECT(strcmp(status, "pass") == 0 || strcmp(status, "fail") == 0 ||
           strcmp(status, "not-applicable") == 0);
    EXPECT(hk_check_witness(rep, i) != NULL);
    EXPECT(hk_check_detail(rep, i) != NULL);
  }
  EXPECT(hk_check_name(rep, n) == NULL);

  json = hk_report_json(rep);
  EXPECT(json != NULL);
  EXPECT(json[0] == '{');
  EXPECT(strstr(json, "\"engine\":\"hopfkit ") != NULL);
  table = hk_report_table(rep);
  EXPECT(table != NULL);
  EXPECT(strstr(table, "status: pass") != NULL);
  hk_string_free(json);
  hk_string_free(table);
  hk_report_free(rep);
  rep = NULL;

  /* Options pass through: truncation window for the bicrossproduct. */
  {
    hk_options opts = {0, 0, 0, NULL};
    opts.window = 3;
    st = hk_verify("bicross:2", "axioms", &opts, &rep);
    EXPECT(st == HK_OK);
    EXPECT(hk_report_ok(rep) == 1);
    json = hk_report_json(rep);
    EXPECT(json != NULL && strstr(json, "window |k| <= 3") != NULL);
    hk_string_free(json);
    hk_report_free(rep);
    rep = NULL;
  }

  /* Failure path: status code plus thread-local diagnostic. */
  st = hk_verify("nonesuch", "axioms", NULL, &rep);
  EXPECT(st == HK_ERR_UNKNOWN_PRESET);
  EXPECT(rep == NULL);
  EXPECT(hk_last_error()[0] != '\0');

  st = hk_verify(NULL, "axioms", NULL, &rep);
  EXPECT(st == HK_ERR_INVALID_ARGUMENT);

  /* Export is available from C too. */
  {
    char* text = NULL;
    st = hk_export_preset("sweedler", NULL, &text);
    EXPECT(st == HK_OK);
    EXPECT(text != NULL);
    EXPECT(strncmp(text, "{\"record\":\"hopf\"", 16) == 0);
    hk_string_free(text);
  }

  /* NULL handles are inert. */
  EXPECT(hk_report_ok(NULL) == 0);
  EXPECT(hk_report_size(NULL) == 0);
  EXPECT(hk_check_name(NULL, 0) == NULL);
  hk_report_free(NULL);
  hk_string_free(NULL);

  if (failures > 0) {
    fprintf(stderr, "%d smoke-test failure(s)\n", failures);
    return 1;
  }
  printf("capi smoke test: all checks passed\n");
  return 0;
}
