#include "lfcsim.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "../core/engine.hpp"
#include "../core/errors.hpp"
#include "../core/report.hpp"
#include "../core/scenario.hpp"

using namespace lfcsim;

struct lfc_scenario {
    Scenario s;
};

struct lfc_result {
    Scenario s;  // the scenario the runs came from, for report headers
    MonteCarloResult mc;
    TimeSeries base_run;
};

namespace {

thread_local std::string g_last_error;

int fail(int code, const char* what) {
    g_last_error = what;
    return code;
}

// Maps the library's exception types onto the status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return LFC_OK;
    } catch (const ParseError& e) {
        return fail(LFC_ERR_PARSE, e.what());
    } catch (const ValidationError& e) {
        return fail(LFC_ERR_VALIDATION, e.what());
    } catch (const IoError& e) {
        return fail(LFC_ERR_IO, e.what());
    } catch (const std::bad_alloc&) {
        return fail(LFC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LFC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LFC_ERR_INTERNAL, "unknown error");
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

void fill_metrics(const MetricsReport& m, lfc_metrics* out) {
    for (int i = 0; i < 2; ++i) {
        out->sum_abs_e[i] = m.sum_abs_e[i];
        out->sum_sq_e[i] = m.sum_sq_e[i];
        out->max_abs_e[i] = m.max_abs_e[i];
    }
    out->seed = m.seed;
    out->diverged = m.diverged ? 1 : 0;
}

}  // namespace

extern "C" {

const char* lfc_version(void) { return "1.0.0"; }

const char* lfc_last_error(void) { return g_last_error.c_str(); }

int lfc_scenario_default(lfc_scenario** out) {
    if (!out) return fail(LFC_ERR_ARG, "out is null");
    return guarded([&] { *out = new lfc_scenario{default_scenario()}; });
}

int lfc_scenario_preset(const char* name, lfc_scenario** out) {
    if (!name || !out) return fail(LFC_ERR_ARG, "name/out is null");
    return guarded([&] { *out = new lfc_scenario{preset_scenario(name)}; });
}

int lfc_scenario_parse(const char* json_text, lfc_scenario** out) {
    if (!json_text || !out) return fail(LFC_ERR_ARG, "json_text/out is null");
    return guarded([&] { *out = new lfc_scenario{scenario_from_json(json_text)}; });
}

void lfc_scenario_free(lfc_scenario* s) { delete s; }

int lfc_scenario_set_controller(lfc_scenario* s, const char* kind) {
    if (!s || !kind) return fail(LFC_ERR_ARG, "scenario/kind is null");
    const std::string k = kind;
    if (k == "mfc") {
        s->s.controller = ControllerKind::mfc;
    } else if (k == "integrator") {
        s->s.controller = ControllerKind::integrator;
    } else {
        return fail(LFC_ERR_VALIDATION,
                    "controller must be \"mfc\" or \"integrator\"");
    }
    return LFC_OK;
}

int lfc_scenario_set_seed(lfc_scenario* s, uint64_t seed) {
    if (!s) return fail(LFC_ERR_ARG, "scenario is null");
    s->s.base_seed = seed;
    return LFC_OK;
}

int lfc_scenario_set_horizon(lfc_scenario* s, double horizon) {
    if (!s) return fail(LFC_ERR_ARG, "scenario is null");
    return guarded([&] {
        Scenario probe = s->s;
        probe.horizon = horizon;
        validate(probe);
        s->s.horizon = horizon;
    });
}

int lfc_scenario_to_json(const lfc_scenario* s, char** out_text) {
    if (!s || !out_text) return fail(LFC_ERR_ARG, "scenario/out_text is null");
    return guarded([&] { *out_text = copy_string(scenario_to_json(s->s)); });
}

int lfc_scenario_name(const lfc_scenario* s, char** out_text) {
    if (!s || !out_text) return fail(LFC_ERR_ARG, "scenario/out_text is null");
    return guarded([&] { *out_text = copy_string(s->s.name); });
}

int lfc_defaults_json(char** out_text) {
    if (!out_text) return fail(LFC_ERR_ARG, "out_text is null");
    return guarded([&] { *out_text = copy_string(defaults_document()); });
}

void lfc_string_free(char* text) { delete[] text; }

int lfc_run(const lfc_scenario* s, lfc_metrics* out) {
    if (!s || !out) return fail(LFC_ERR_ARG, "scenario/out is null");
    return guarded([&] { fill_metrics(run_scenario(s->s), out); });
}

int lfc_run_seeded(const lfc_scenario* s, uint64_t seed, lfc_metrics* out) {
    if (!s || !out) return fail(LFC_ERR_ARG, "scenario/out is null");
    return guarded([&] { fill_metrics(run_scenario_seeded(s->s, seed), out); });
}

int lfc_run_monte_carlo(const lfc_scenario* s, int n_runs, lfc_result** out) {
    if (!s || !out) return fail(LFC_ERR_ARG, "scenario/out is null");
    if (n_runs <= 0) return fail(LFC_ERR_ARG, "n_runs must be positive");
    return guarded([&] {
        auto r = std::make_unique<lfc_result>();
        r->s = s->s;
        r->mc = run_monte_carlo(s->s, n_runs);
        run_scenario_seeded(s->s, s->s.base_seed, &r->base_run);
        *out = r.release();
    });
}

void lfc_result_free(lfc_result* r) { delete r; }

int lfc_result_count(const lfc_result* r, int* out) {
    if (!r || !out) return fail(LFC_ERR_ARG, "result/out is null");
    *out = static_cast<int>(r->mc.runs.size());
    return LFC_OK;
}

int lfc_result_diverged_count(const lfc_result* r, int* out) {
    if (!r || !out) return fail(LFC_ERR_ARG, "result/out is null");
    *out = r->mc.diverged_count;
    return LFC_OK;
}

int lfc_result_aggregate(const lfc_result* r, lfc_metrics* out) {
    if (!r || !out) return fail(LFC_ERR_ARG, "result/out is null");
    fill_metrics(r->mc.aggregate, out);
    return LFC_OK;
}

int lfc_result_run(const lfc_result* r, int k, lfc_metrics* out) {
    if (!r || !out) return fail(LFC_ERR_ARG, "result/out is null");
    if (k < 0 || static_cast<std::size_t>(k) >= r->mc.runs.size()) {
        return fail(LFC_ERR_ARG, "run index out of range");
    }
    fill_metrics(r->mc.runs[static_cast<std::size_t>(k)], out);
    return LFC_OK;
}

int lfc_result_timeseries_csv(const lfc_result* r, char** out_text) {
    if (!r || !out_text) return fail(LFC_ERR_ARG, "result/out_text is null");
    return guarded([&] { *out_text = copy_string(timeseries_csv(r->base_run)); });
}

int lfc_result_per_run_csv(const lfc_result* r, char** out_text) {
    if (!r || !out_text) return fail(LFC_ERR_ARG, "result/out_text is null");
    return guarded([&] { *out_text = copy_string(per_run_csv(r->mc)); });
}

int lfc_result_summary_json(const lfc_result* r, int include_runs,
                            char** out_text) {
    if (!r || !out_text) return fail(LFC_ERR_ARG, "result/out_text is null");
    return guarded([&] {
        *out_text =
            copy_string(summary_json(r->s, r->mc, include_runs != 0).dump(2) + "\n");
    });
}

int lfc_result_summary_text(const lfc_result* r, char** out_text) {
    if (!r || !out_text) return fail(LFC_ERR_ARG, "result/out_text is null");
    return guarded([&] { *out_text = copy_string(summary_text(r->s, r->mc)); });
}

}  // extern "C"
