#ifndef LFCSIM_H
#define LFCSIM_H

/* C interface to the two-area load-frequency simulation library.
 *
 * Every function returning int gives LFC_OK on success or a status code;
 * lfc_last_error() returns a thread-local message for the most recent
 * failure on the calling thread. Objects come back through out-pointers
 * and are released with the matching _free call. Strings returned through
 * char** out-params are heap copies; release them with lfc_string_free.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LFCSIM_API __declspec(dllexport)
#else
#define LFCSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

enum {
    LFC_OK = 0,
    LFC_ERR_PARSE = 1,      /* malformed or unknown-key config */
    LFC_ERR_VALIDATION = 2, /* well-formed config violating an invariant */
    LFC_ERR_IO = 3,
    LFC_ERR_ARG = 4,        /* null pointer or out-of-range argument */
    LFC_ERR_INTERNAL = 5
};

typedef struct lfc_scenario lfc_scenario; /* opaque */
typedef struct lfc_result lfc_result;     /* opaque */

/* Per-run tracking-error aggregates; index 0/1 = area 1/2. */
typedef struct lfc_metrics {
    double sum_abs_e[2];
    double sum_sq_e[2];
    double max_abs_e[2];
    uint64_t seed;
    int diverged;
} lfc_metrics;

LFCSIM_API const char* lfc_version(void);
LFCSIM_API const char* lfc_last_error(void);

/* --- scenario construction ------------------------------------------- */

LFCSIM_API int lfc_scenario_default(lfc_scenario** out);
LFCSIM_API int lfc_scenario_preset(const char* name, lfc_scenario** out);
LFCSIM_API int lfc_scenario_parse(const char* json_text, lfc_scenario** out);
LFCSIM_API void lfc_scenario_free(lfc_scenario* s);

LFCSIM_API int lfc_scenario_set_controller(lfc_scenario* s, const char* kind);
LFCSIM_API int lfc_scenario_set_seed(lfc_scenario* s, uint64_t seed);
LFCSIM_API int lfc_scenario_set_horizon(lfc_scenario* s, double horizon);

LFCSIM_API int lfc_scenario_to_json(const lfc_scenario* s, char** out_text);
LFCSIM_API int lfc_scenario_name(const lfc_scenario* s, char** out_text);

/* Resolved defaults plus the built-in presets, as a JSON document. */
LFCSIM_API int lfc_defaults_json(char** out_text);

LFCSIM_API void lfc_string_free(char* text);

/* --- running ---------------------------------------------------------- */

/* Single closed-loop run. lfc_run uses the scenario's base seed. */
LFCSIM_API int lfc_run(const lfc_scenario* s, lfc_metrics* out);
LFCSIM_API int lfc_run_seeded(const lfc_scenario* s, uint64_t seed,
                              lfc_metrics* out);

/* n_runs independent runs seeded base_seed + k. The result also carries
 * the base-seed run's full trajectory for CSV export. */
LFCSIM_API int lfc_run_monte_carlo(const lfc_scenario* s, int n_runs,
                                   lfc_result** out);
LFCSIM_API void lfc_result_free(lfc_result* r);

/* --- result access ---------------------------------------------------- */

LFCSIM_API int lfc_result_count(const lfc_result* r, int* out);
LFCSIM_API int lfc_result_diverged_count(const lfc_result* r, int* out);
LFCSIM_API int lfc_result_aggregate(const lfc_result* r, lfc_metrics* out);
LFCSIM_API int lfc_result_run(const lfc_result* r, int k, lfc_metrics* out);

LFCSIM_API int lfc_result_timeseries_csv(const lfc_result* r, char** out_text);
LFCSIM_API int lfc_result_per_run_csv(const lfc_result* r, char** out_text);
LFCSIM_API int lfc_result_summary_json(const lfc_result* r, int include_runs,
                                       char** out_text);
LFCSIM_API int lfc_result_summary_text(const lfc_result* r, char** out_text);

#ifdef __cplusplus
}
#endif

#endif /* LFCSIM_H */
