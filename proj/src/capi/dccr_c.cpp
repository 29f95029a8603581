#include "dccr/dccr.h"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/element.hpp"
#include "core/grid.hpp"
#include "core/matrix.hpp"
#include "core/rep.hpp"
#include "core/spectra.hpp"
#include "core/verify.hpp"
#include "core/witness.hpp"

struct dccr_element {
    dccr::AlgebraElement impl;
};
struct dccr_verify {
    std::vector<dccr::IdentityResult> items;
};
struct dccr_band {
    dccr::BandSpectrum impl;
};
struct dccr_grid {
    dccr::GridModel impl;
};
struct dccr_witness {
    std::vector<dccr::WitnessRow> rows;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg ? msg : ""; }

dccr_status fail_null(const char* what) {
    g_last_error = std::string("null argument: ") + what;
    return DCCR_ERR_NULL;
}

// run `fn`, translating exceptions into status codes
template <typename Fn>
dccr_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return DCCR_OK;
    } catch (const std::invalid_argument& e) {
        set_error(e.what());
        return DCCR_ERR_INVALID;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DCCR_ERR_NUMERIC;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// shared query-or-fill protocol for spectrum getters
dccr_status copy_spectrum(const std::vector<double>& ev, double* values, int64_t capacity,
                          int64_t* count) {
    if (!count) return fail_null("count");
    *count = static_cast<int64_t>(ev.size());
    if (!values) return DCCR_OK;  // size query
    if (capacity < *count) {
        set_error("capacity too small for spectrum");
        return DCCR_ERR_INVALID;
    }
    std::memcpy(values, ev.data(), ev.size() * sizeof(double));
    return DCCR_OK;
}

}  // namespace

extern "C" {

const char* dccr_last_error(void) { return g_last_error.c_str(); }

const char* dccr_version(void) { return "0.1.0"; }

void dccr_string_free(char* s) { std::free(s); }

/* ---- element ---- */

dccr_status dccr_element_create_rational(int64_t p, int64_t q, dccr_element** out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = new dccr_element{dccr::AlgebraElement(dccr::Theta::rational(p, q))};
    });
}

dccr_status dccr_element_create_real(double theta, dccr_element** out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = new dccr_element{dccr::AlgebraElement(dccr::Theta::real(theta))};
    });
}

dccr_status dccr_element_add(dccr_element* e, int64_t m, int64_t n, double re, double im) {
    if (!e) return fail_null("element");
    return guarded([&] { e->impl.add({m, n}, {re, im}); });
}

dccr_status dccr_element_coeff(const dccr_element* e, int64_t m, int64_t n, double* re,
                               double* im) {
    if (!e) return fail_null("element");
    if (!re || !im) return fail_null("re/im");
    return guarded([&] {
        const dccr::cplx c = e->impl.at({m, n});
        *re = c.real();
        *im = c.imag();
    });
}

dccr_status dccr_element_support(const dccr_element* e, int64_t* count) {
    if (!e) return fail_null("element");
    if (!count) return fail_null("count");
    *count = static_cast<int64_t>(e->impl.support_size());
    return DCCR_OK;
}

dccr_status dccr_element_l1_norm(const dccr_element* e, double* norm) {
    if (!e) return fail_null("element");
    if (!norm) return fail_null("norm");
    *norm = e->impl.l1_norm();
    return DCCR_OK;
}

dccr_status dccr_element_convolve(const dccr_element* a, const dccr_element* b,
                                  dccr_element** out) {
    if (!a || !b) return fail_null("element");
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_element{convolve(a->impl, b->impl)}; });
}

dccr_status dccr_element_involution(const dccr_element* a, dccr_element** out) {
    if (!a) return fail_null("element");
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_element{involution(a->impl)}; });
}

dccr_status dccr_element_to_json(const dccr_element* e, char** json) {
    if (!e) return fail_null("element");
    if (!json) return fail_null("json");
    return guarded([&] {
        *json = dup_string(dccr::to_json(e->impl));
        if (!*json) throw std::runtime_error("out of memory");
    });
}

dccr_status dccr_element_from_json(const char* json, dccr_element** out) {
    if (!json) return fail_null("json");
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_element{dccr::element_from_json(json)}; });
}

void dccr_element_free(dccr_element* e) { delete e; }

/* ---- verify ---- */

dccr_status dccr_verify_run(uint64_t seed, int corrupt_omega, dccr_verify** out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        dccr::VerifyOptions opts;
        opts.seed = seed;
        opts.corrupt_omega = corrupt_omega != 0;
        *out = new dccr_verify{dccr::run_verify(opts)};
    });
}

dccr_status dccr_verify_count(const dccr_verify* v, int64_t* count) {
    if (!v) return fail_null("verify");
    if (!count) return fail_null("count");
    *count = static_cast<int64_t>(v->items.size());
    return DCCR_OK;
}

dccr_status dccr_verify_item(const dccr_verify* v, int64_t index, const char** key,
                             const char** anchor, double* max_dev, double* tol, int* pass) {
    if (!v) return fail_null("verify");
    if (index < 0 || index >= static_cast<int64_t>(v->items.size())) {
        set_error("index out of range");
        return DCCR_ERR_INVALID;
    }
    const dccr::IdentityResult& r = v->items[static_cast<std::size_t>(index)];
    if (key) *key = r.key.c_str();
    if (anchor) *anchor = r.anchor.c_str();
    if (max_dev) *max_dev = r.max_dev;
    if (tol) *tol = r.tol;
    if (pass) *pass = r.pass ? 1 : 0;
    return DCCR_OK;
}

dccr_status dccr_verify_all_pass(const dccr_verify* v, int* pass) {
    if (!v) return fail_null("verify");
    if (!pass) return fail_null("pass");
    *pass = dccr::all_pass(v->items) ? 1 : 0;
    return DCCR_OK;
}

void dccr_verify_free(dccr_verify* v) { delete v; }

/* ---- bands ---- */

dccr_status dccr_band_compute(int64_t p, int64_t q, double c, int n_phase, dccr_band** out) {
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_band{dccr::band_spectrum(p, q, c, n_phase)}; });
}

dccr_status dccr_band_count(const dccr_band* b, int64_t* count) {
    if (!b) return fail_null("band");
    if (!count) return fail_null("count");
    *count = static_cast<int64_t>(b->impl.bands.size());
    return DCCR_OK;
}

dccr_status dccr_band_get(const dccr_band* b, int64_t index, double* lo, double* hi) {
    if (!b) return fail_null("band");
    if (index < 0 || index >= static_cast<int64_t>(b->impl.bands.size())) {
        set_error("index out of range");
        return DCCR_ERR_INVALID;
    }
    const dccr::Band& band = b->impl.bands[static_cast<std::size_t>(index)];
    if (lo) *lo = band.lo;
    if (hi) *hi = band.hi;
    return DCCR_OK;
}

dccr_status dccr_band_measure(const dccr_band* b, double* measure) {
    if (!b) return fail_null("band");
    if (!measure) return fail_null("measure");
    *measure = b->impl.measure;
    return DCCR_OK;
}

void dccr_band_free(dccr_band* b) { delete b; }

dccr_status dccr_golden_numerator(int64_t q, int64_t* p) {
    if (!p) return fail_null("p");
    return guarded([&] { *p = dccr::golden_numerator(q); });
}

dccr_status dccr_weyl_csv(int64_t p, int64_t q, int64_t m, int64_t n, char** csv) {
    if (!csv) return fail_null("csv");
    return guarded([&] {
        const dccr::MatrixRep rep = dccr::MatrixRep::clock_shift(p, q);
        *csv = dup_string(dccr::matrix_to_csv(rep.weyl({m, n})));
        if (!*csv) throw std::runtime_error("out of memory");
    });
}

/* ---- grid ---- */

dccr_status dccr_grid_periodic(int64_t n, int64_t m_steps, int64_t k, dccr_grid** out) {
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_grid{dccr::build_grid(n, m_steps, k)}; });
}

dccr_status dccr_grid_truncated(int64_t n, double box_half_width, double tau,
                                dccr_grid** out) {
    if (!out) return fail_null("out");
    return guarded([&] { *out = new dccr_grid{dccr::build_truncated(n, box_half_width, tau)}; });
}

dccr_status dccr_grid_info(const dccr_grid* g, int64_t* n, double* h, double* tau) {
    if (!g) return fail_null("grid");
    if (n) *n = g->impl.N;
    if (h) *h = g->impl.h;
    if (tau) *tau = g->impl.tau;
    return DCCR_OK;
}

dccr_status dccr_grid_flux(const dccr_grid* g, int64_t* flux_num, int64_t* flux_den) {
    if (!g) return fail_null("grid");
    if (flux_num) *flux_num = g->impl.flux_num;
    if (flux_den) *flux_den = g->impl.flux_den;
    return DCCR_OK;
}

dccr_status dccr_grid_spectrum_harmonic(const dccr_grid* g, double c, double* values,
                                        int64_t capacity, int64_t* count) {
    if (!g) return fail_null("grid");
    return guarded([&] {
        const dccr::RMatrix h = dccr::hamiltonian(g->impl, dccr::PotentialSpec::harmonic(c));
        const std::vector<double> ev = dccr::eig_symmetric_values(h);
        const dccr_status st = copy_spectrum(ev, values, capacity, count);
        if (st != DCCR_OK) throw std::invalid_argument(g_last_error);
    });
}

dccr_status dccr_grid_spectrum_tabulated(const dccr_grid* g, const double* v_diag,
                                         int64_t v_len, double* values, int64_t capacity,
                                         int64_t* count) {
    if (!g) return fail_null("grid");
    if (!v_diag) return fail_null("v_diag");
    if (v_len < 0) {
        set_error("v_len must be >= 0");
        return DCCR_ERR_INVALID;
    }
    return guarded([&] {
        std::vector<double> diag(v_diag, v_diag + v_len);
        const dccr::RMatrix h =
            dccr::hamiltonian(g->impl, dccr::PotentialSpec::tabulated(std::move(diag)));
        const std::vector<double> ev = dccr::eig_symmetric_values(h);
        const dccr_status st = copy_spectrum(ev, values, capacity, count);
        if (st != DCCR_OK) throw std::invalid_argument(g_last_error);
    });
}

void dccr_grid_free(dccr_grid* g) { delete g; }

/* ---- witness ---- */

dccr_status dccr_witness_run(double lambda, int n_max, int samples_per_interval,
                             dccr_witness** out) {
    if (!out) return fail_null("out");
    return guarded([&] {
        *out = new dccr_witness{
            dccr::extension_gap_report(lambda, n_max, samples_per_interval)};
    });
}

dccr_status dccr_witness_count(const dccr_witness* w, int64_t* count) {
    if (!w) return fail_null("witness");
    if (!count) return fail_null("count");
    *count = static_cast<int64_t>(w->rows.size());
    return DCCR_OK;
}

dccr_status dccr_witness_row(const dccr_witness* w, int64_t index, int* n, double* sup_on_x,
                             double* value_at_lambda, double* ratio, double* growth_base) {
    if (!w) return fail_null("witness");
    if (index < 0 || index >= static_cast<int64_t>(w->rows.size())) {
        set_error("index out of range");
        return DCCR_ERR_INVALID;
    }
    const dccr::WitnessRow& r = w->rows[static_cast<std::size_t>(index)];
    if (n) *n = r.n;
    if (sup_on_x) *sup_on_x = r.sup_on_x;
    if (value_at_lambda) *value_at_lambda = r.value_at_lambda;
    if (ratio) *ratio = r.ratio;
    if (growth_base) *growth_base = r.growth_base;
    return DCCR_OK;
}

dccr_status dccr_witness_growth_limit(double lambda, double* base) {
    if (!base) return fail_null("base");
    return guarded([&] { *base = dccr::witness_growth_limit(lambda); });
}

void dccr_witness_free(dccr_witness* w) { delete w; }

} /* extern "C" */
