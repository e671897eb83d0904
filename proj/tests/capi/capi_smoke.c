#include <stdio.h>
#include <string.h>

#include "unicorn/unicorn.h"

static int failures = 0;

static void expect(int cond, const char* what) {
  if (!cond) {
    fprintf(stderr, "FAIL: %s\n", what);
    ++failures;
  }
}

int main(void) {
  uc_context* ctx = uc_context_new();
  uc_report* r = NULL;
  uc_status s;

  expect(ctx != NULL, "context allocation");
  expect(strcmp(uc_status_name(UC_ERR_RESOURCE), "resource") == 0, "status names");
  expect(strstr(uc_commands(), "torus.holy") != NULL, "command list");

  s = uc_run(ctx, "torus.holy", "{\"lattice\": \"d4\"}", &r);
  expect(s == UC_OK, "D4 holy report runs");
  if (s == UC_OK) {
    expect(strstr(uc_report_json(r), "\"deep_holes\": 24") != NULL, "24 deep holes");
    expect(strstr(uc_report_json(r), "\"cosets\": 3") != NULL, "3 cosets");
    uc_report_free(r);
  }

  s = uc_run(ctx, "orthotope.grid", "{\"u\": [\"1\", \"2\"]}", &r);
  expect(s == UC_OK, "grid code");
  if (s == UC_OK) {
    expect(strncmp(uc_report_csv(r), "x0,x1\n0,0\n", 10) == 0, "grid CSV");
    uc_report_free(r);
  }

  s = uc_run(ctx, "orthotope.grid", "{\"u\": [0.5]}", &r);
  expect(s == UC_ERR_VALIDATION, "floating point input rejected");
  expect(strncmp(uc_context_last_error(ctx), "/u/0:", 5) == 0, "error carries a JSON pointer");

  s = uc_run(ctx, "no.such.command", "{}", &r);
  expect(s == UC_ERR_VALIDATION, "unknown command");

  s = uc_run(ctx, "orthotope.grid", "{not json", &r);
  expect(s == UC_ERR_ARGUMENT, "bad JSON text");

  expect(uc_context_set_budget(ctx, 10) == UC_OK, "set budget");
  s = uc_run(ctx, "orthotope.oracle", "{\"u\": [\"3\", \"3\"], \"n\": 16}", &r);
  expect(s == UC_ERR_RESOURCE, "tiny budget exhausts");

  expect(uc_run(NULL, "x", "{}", &r) == UC_ERR_ARGUMENT, "null context");
  uc_context_free(ctx);

  if (failures == 0) printf("capi smoke: all checks passed\n");
  return failures == 0 ? 0 : 1;
}
