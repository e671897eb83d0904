#ifndef UNICORN_UNICORN_H
#define UNICORN_UNICORN_H

/* C interface to the unicorn library. Every entry point is thread compatible:
 * distinct contexts may be used concurrently, a single context may not. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define UC_API __declspec(dllexport)
#else
#define UC_API __attribute__((visibility("default")))
#endif

typedef enum uc_status {
  UC_OK = 0,
  UC_ERR_VALIDATION = 1,   /* malformed request or input outside the domain */
  UC_ERR_DOMAIN = 2,
  UC_ERR_PRECONDITION = 3,
  UC_ERR_RESOURCE = 4,     /* the work budget ran out */
  UC_ERR_PRECISION = 5,    /* certified arithmetic hit the precision ceiling */
  UC_ERR_UNSUPPORTED = 6,
  UC_ERR_INTERNAL = 7,
  UC_ERR_ARGUMENT = 8      /* null pointer or unparsable JSON text */
} uc_status;

typedef struct uc_context uc_context;
typedef struct uc_report uc_report;

UC_API const char* uc_version(void);
UC_API const char* uc_status_name(uc_status status);

UC_API uc_context* uc_context_new(void);
UC_API void uc_context_free(uc_context* ctx);

/* Work-unit cap for every following run (default 2e9). */
UC_API uc_status uc_context_set_budget(uc_context* ctx, uint64_t cap);
/* Precision ceiling in bits for certified comparisons (default 2^20). */
UC_API uc_status uc_context_set_precision_bits(uc_context* ctx, uint64_t bits);
UC_API uc_status uc_context_set_seed(uc_context* ctx, uint64_t seed);

/* Message of the last failed call on this context, or "" after a success. */
UC_API const char* uc_context_last_error(const uc_context* ctx);

/* Runs a command such as "torus.holy" on a JSON request object. On success
 * *out receives a report owned by the caller. */
UC_API uc_status uc_run(uc_context* ctx, const char* command, const char* request_json, uc_report** out);

/* Newline separated list of command names; owned by the library. */
UC_API const char* uc_commands(void);

/* The report as pretty-printed JSON, or CSV of its code coordinates. The
 * strings live as long as the report. */
UC_API const char* uc_report_json(const uc_report* report);
UC_API const char* uc_report_csv(const uc_report* report);
UC_API void uc_report_free(uc_report* report);

#ifdef __cplusplus
}
#endif

#endif
