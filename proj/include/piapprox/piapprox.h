/* piapprox: high-precision pi approximants, error metrics and benchmark tables. */
#ifndef PIAPPROX_PIAPPROX_H
#define PIAPPROX_PIAPPROX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(PIAPPROX_BUILDING)
#define PA_API __declspec(dllexport)
#else
#define PA_API __declspec(dllimport)
#endif
#else
#define PA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pa_status {
  PA_OK = 0,
  PA_ERR_INVALID_ARGUMENT = 1,
  PA_ERR_DIVISION_BY_ZERO = 2,
  PA_ERR_DOMAIN = 3,
  PA_ERR_PARSE = 4,
  PA_ERR_REFERENCE_INTEGRITY = 5,
  PA_ERR_REPORT_SHAPE = 6,
  PA_ERR_NULL_POINTER = 7,
  PA_ERR_OUT_OF_MEMORY = 8,
  PA_ERR_INTERNAL = 9
} pa_status;

typedef enum pa_method {
  PA_METHOD_WALLIS = 0,
  PA_METHOD_LEIBNIZ = 1,
  PA_METHOD_NEWTON_ARCSINE = 2,
  PA_METHOD_EULER_CF = 3,
  PA_METHOD_VIETE = 4,
  PA_METHOD_ZETA2 = 5,
  PA_METHOD_ZETA4 = 6,
  PA_METHOD_ZETA6 = 7,
  PA_METHOD_ZETA8 = 8
} pa_method;

typedef enum pa_format { PA_FORMAT_MARKDOWN = 0, PA_FORMAT_CSV = 1, PA_FORMAT_PLOT = 2 } pa_format;

/* pa_run_render flags */
#define PA_RENDER_NO_TIMING 1u /* elapsed_ns written as 0 */

typedef struct pa_context pa_context;     /* working + guard decimal places */
typedef struct pa_number pa_number;       /* exact decimal fixed-point value */
typedef struct pa_generator pa_generator; /* resumable approximant sequence */
typedef struct pa_reference pa_reference; /* reference value of pi */
typedef struct pa_schedule pa_schedule;   /* strictly increasing sample indices */
typedef struct pa_run pa_run;             /* records of a run, comparison or built-in table */

typedef struct pa_record {
  pa_method method;
  uint64_t n;
  const char* value;          /* at working_dp; owned by the run */
  const char* signed_err_pct; /* at working_dp; owned by the run */
  const char* abs_err_pct;    /* at working_dp; owned by the run */
  int digits_correct;
  int64_t elapsed_ns;
} pa_record;

/* Message for the last failing call on this thread; "" after success. */
PA_API const char* pa_last_error(void);
PA_API const char* pa_status_name(pa_status status);
/* Frees strings returned through char** out parameters. */
PA_API void pa_string_free(char* s);

/* Precision. guard_dp < 0 selects the default guard for max_n. */
PA_API pa_status pa_context_new(int working_dp, int guard_dp, uint64_t max_n, pa_context** out);
PA_API void pa_context_free(pa_context* ctx);
PA_API int pa_context_working_dp(const pa_context* ctx);
PA_API int pa_context_guard_dp(const pa_context* ctx);

/* Numbers */
PA_API pa_status pa_number_parse(const char* text, pa_number** out);
PA_API void pa_number_free(pa_number* x);
/* Rounded half-even to dp decimals; dp < 0 prints every stored digit. */
PA_API pa_status pa_number_to_string(const pa_number* x, int dp, char** out);
PA_API pa_status pa_number_add(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_number_sub(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_number_mul(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_number_div(const pa_number* a, const pa_number* b, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_number_sqrt(const pa_number* x, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_number_nth_root(const pa_number* x, unsigned degree, const pa_context* ctx, pa_number** out);
/* -1, 0 or 1 */
PA_API pa_status pa_number_compare(const pa_number* a, const pa_number* b, int* out);

/* Methods */
PA_API pa_status pa_method_from_name(const char* name, pa_method* out);
PA_API const char* pa_method_name(pa_method method);
PA_API pa_status pa_approximant(pa_method method, uint64_t n, const pa_context* ctx, pa_number** out);
PA_API pa_status pa_generator_new(pa_method method, const pa_context* ctx, pa_generator** out);
PA_API void pa_generator_free(pa_generator* gen);
PA_API pa_status pa_generator_advance_to(pa_generator* gen, uint64_t n);
PA_API pa_status pa_generator_index(const pa_generator* gen, uint64_t* out);
PA_API pa_status pa_generator_value(const pa_generator* gen, pa_number** out);

/* Reference pi. literal may be NULL for the computed reference. */
PA_API pa_status pa_reference_new(const pa_context* ctx, const char* literal, pa_reference** out);
PA_API void pa_reference_free(pa_reference* ref);
PA_API pa_status pa_reference_value(const pa_reference* ref, pa_number** out);
PA_API pa_status pa_pct_error(const pa_number* x, const pa_reference* ref, const pa_context* ctx,
                              pa_number** signed_out, pa_number** abs_out);
PA_API pa_status pa_digits_correct(const pa_number* x, const pa_reference* ref, int* out);

/* Schedules: comma list of N or start:stop:step. */
PA_API pa_status pa_schedule_parse(const char* expr, pa_schedule** out);
PA_API void pa_schedule_free(pa_schedule* schedule);
PA_API size_t pa_schedule_size(const pa_schedule* schedule);
PA_API uint64_t pa_schedule_max(const pa_schedule* schedule);

/* Runs */
PA_API pa_status pa_run_new(pa_method method, const pa_schedule* schedule, const pa_context* ctx,
                            const pa_reference* ref, pa_run** out);
/* thresholds: comma list of strictly decreasing abs-error percentages, or NULL.
   threads 0 uses PIAPPROX_THREADS or the hardware concurrency. */
PA_API pa_status pa_compare_new(const pa_method* methods, size_t count, const pa_schedule* schedule,
                                const pa_context* ctx, const pa_reference* ref, const char* thresholds,
                                unsigned threads, pa_run** out);
/* Reproduces built-in table id (1..7) with its preset schedule and precision. */
PA_API pa_status pa_table_new(int id, const char* reference_literal, unsigned threads, pa_run** out);
PA_API void pa_run_free(pa_run* run);
PA_API size_t pa_run_size(const pa_run* run);
PA_API pa_status pa_run_record(const pa_run* run, size_t index, pa_record* out);
/* First n below threshold t for method m; *reached = 0 if not within the schedule. */
PA_API pa_status pa_run_crossover(const pa_run* run, size_t method_index, size_t threshold_index, int* reached,
                                  uint64_t* n);
PA_API pa_status pa_run_render(const pa_run* run, pa_format format, unsigned flags, char** out);

/* Comparison presets: leibniz-newton, viete-eulercf, wallis-newton, wallis-zeta2, newton-zeta8.
   Strings are static. */
PA_API pa_status pa_compare_preset(const char* name, pa_method* first, pa_method* second, const char** schedule,
                                   const char** thresholds);

PA_API pa_status pa_time_to_digits(pa_method method, int target_digits, const pa_context* ctx,
                                   const pa_reference* ref, uint64_t step_budget, int* reached, uint64_t* n,
                                   int64_t* elapsed_ns);

/* Invariant checks plus the golden-table audit. *passed is 1 only if every
   check passes and every normative golden cell matches. */
PA_API pa_status pa_selftest(unsigned threads, int* passed, char** report);

#ifdef __cplusplus
}
#endif

#endif
