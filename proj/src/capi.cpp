#include "gaborlab.h"

#include <cstring>
#include <string>

#include "core/framebounds.hpp"
#include "core/metaplectic.hpp"
#include "core/specstring.hpp"

using namespace gaborlab;

struct gabor_window {
    SampledWindow w;
};
struct gabor_lattice {
    Lattice lat;
};
struct gabor_bounds {
    FrameBounds fb;
};
struct gabor_chain {
    GeneratorChain chain;
};
struct gabor_rng {
    Rng rng;
};

namespace {

thread_local std::string g_last_error;

gabor_status fail(gabor_status code, const char* what) {
    g_last_error = what;
    return code;
}

// Translates core exceptions to status codes at the C boundary.
template <typename Fn>
gabor_status guarded(Fn&& fn) {
    try {
        fn();
        return GABOR_OK;
    } catch (const ParseError& e) {
        return fail(GABOR_ERR_PARSE, e.what());
    } catch (const NotSymplecticError& e) {
        return fail(GABOR_ERR_NOT_SYMPLECTIC, e.what());
    } catch (const HypothesisError& e) {
        return fail(GABOR_ERR_HYPOTHESIS, e.what());
    } catch (const NotFreeError& e) {
        return fail(GABOR_ERR_HYPOTHESIS, e.what());
    } catch (const NumericError& e) {
        return fail(GABOR_ERR_NUMERIC, e.what());
    } catch (const DimensionError& e) {
        return fail(GABOR_ERR_INVALID, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(GABOR_ERR_INVALID, e.what());
    } catch (const std::exception& e) {
        return fail(GABOR_ERR_INTERNAL, e.what());
    }
}

gabor_status copy_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
    if (needed) *needed = s.size();
    if (!buf || cap == 0) return GABOR_OK;
    const size_t n = s.size() < cap - 1 ? s.size() : cap - 1;
    std::memcpy(buf, s.data(), n);
    buf[n] = '\0';
    return GABOR_OK;
}

BoundsConfig to_config(const gabor_params* params) {
    BoundsConfig cfg;
    if (params) {
        cfg.truncation_k = params->truncation_k;
        cfg.grid_n = params->grid_n;
        cfg.fs_radius = params->fs_radius;
        cfg.fs_n_test = params->fs_n_test;
    }
    return cfg;
}

BoundsMethod to_method(gabor_method m) {
    switch (m) {
        case GABOR_METHOD_JANSSEN: return BoundsMethod::janssen;
        case GABOR_METHOD_ZAK: return BoundsMethod::zak;
        case GABOR_METHOD_FINITE_SECTION: return BoundsMethod::finite_section;
        default: return BoundsMethod::automatic;
    }
}

SymplecticMatrix sp_from_array(const double s[4]) {
    Mat m(2, 2);
    m << s[0], s[1], s[2], s[3];
    if (!is_symplectic(m, 1e-6)) throw NotSymplecticError("matrix fails S^T J S = J (det != 1)");
    return SymplecticMatrix(m, 1e-6);
}

} // namespace

extern "C" {

const char* gabor_version(void) { return "0.1.0"; }

const char* gabor_last_error(void) { return g_last_error.c_str(); }

void gabor_params_init(gabor_params* params) {
    if (!params) return;
    params->truncation_k = 20;
    params->grid_n = 256;
    params->fs_radius = 12.0;
    params->fs_n_test = 24;
}

gabor_status gabor_window_create(const char* spec, int32_t grid_n, double grid_h,
                                 gabor_window** out) {
    if (!spec || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] {
        TimeGrid grid = default_grid();
        if (grid_n > 0) grid.n = grid_n;
        if (grid_h > 0.0) grid.h = grid_h;
        *out = new gabor_window{make_window(spec, grid)};
    });
}

void gabor_window_free(gabor_window* w) { delete w; }

gabor_status gabor_window_parity_defect(const gabor_window* w, double* even_defect,
                                        double* odd_defect) {
    if (!w) return fail(GABOR_ERR_INVALID, "null window");
    return guarded([&] {
        const auto [e, o] = parity_defect(w->w);
        if (even_defect) *even_defect = e;
        if (odd_defect) *odd_defect = o;
    });
}

gabor_status gabor_window_norm(const gabor_window* w, double* norm) {
    if (!w || !norm) return fail(GABOR_ERR_INVALID, "null argument");
    *norm = w->w.norm();
    return GABOR_OK;
}

gabor_status gabor_lattice_create(const char* spec, gabor_lattice** out) {
    if (!spec || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new gabor_lattice{make_lattice(spec)}; });
}

void gabor_lattice_free(gabor_lattice* lat) { delete lat; }

gabor_status gabor_lattice_density(const gabor_lattice* lat, double* delta) {
    if (!lat || !delta) return fail(GABOR_ERR_INVALID, "null argument");
    *delta = lat->lat.density();
    return GABOR_OK;
}

gabor_status gabor_bounds_compute(const gabor_window* w, const gabor_lattice* lat,
                                  const gabor_params* params, gabor_method method,
                                  gabor_bounds** out) {
    if (!w || !lat || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new gabor_bounds{bounds_for_lattice(w->w, lat->lat, to_config(params),
                                                   to_method(method))};
    });
}

gabor_status gabor_bounds_symplectic(const gabor_window* w, const double s[4], double delta,
                                     const gabor_params* params, gabor_bounds** out) {
    if (!w || !s || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] {
        *out = new gabor_bounds{
            bounds_symplectic(w->w, sp_from_array(s), delta, to_config(params))};
    });
}

void gabor_bounds_free(gabor_bounds* b) { delete b; }

gabor_status gabor_bounds_values(const gabor_bounds* b, double* lower, double* upper) {
    if (!b) return fail(GABOR_ERR_INVALID, "null bounds");
    if (lower) *lower = b->fb.a;
    if (upper) *upper = b->fb.b;
    return GABOR_OK;
}

gabor_status gabor_bounds_method(const gabor_bounds* b, char* buf, size_t cap) {
    if (!b) return fail(GABOR_ERR_INVALID, "null bounds");
    return copy_string(b->fb.method, buf, cap, nullptr);
}

gabor_status gabor_bounds_json(const gabor_bounds* b, int32_t indent, char* buf, size_t cap,
                               size_t* needed) {
    if (!b) return fail(GABOR_ERR_INVALID, "null bounds");
    return guarded([&] { copy_string(to_json(b->fb, indent), buf, cap, needed); });
}

gabor_status gabor_certify_even_critical(const gabor_window* w, int32_t truncation_k,
                                         double* residual) {
    if (!w || !residual) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] { *residual = certify_even_critical(w->w, truncation_k); });
}

gabor_status gabor_certify_odd_critical(const gabor_window* w, int32_t truncation_k,
                                        double* residual) {
    if (!w || !residual) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] { *residual = certify_odd_critical(w->w, truncation_k); });
}

gabor_status gabor_certify_odd_density2(const gabor_window* w, int32_t truncation_k,
                                        double* residual) {
    if (!w || !residual) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] { *residual = certify_odd_density2(w->w, truncation_k); });
}

gabor_status gabor_decompose(const double s[4], gabor_chain** out) {
    if (!s || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] { *out = new gabor_chain{decompose(sp_from_array(s))}; });
}

void gabor_chain_free(gabor_chain* c) { delete c; }

gabor_status gabor_chain_length(const gabor_chain* c, int32_t* len) {
    if (!c || !len) return fail(GABOR_ERR_INVALID, "null argument");
    *len = static_cast<int32_t>(c->chain.steps.size());
    return GABOR_OK;
}

gabor_status gabor_chain_step(const gabor_chain* c, int32_t index, int32_t* kind, double* param,
                              int32_t* maslov) {
    if (!c) return fail(GABOR_ERR_INVALID, "null chain");
    if (index < 0 || index >= static_cast<int32_t>(c->chain.steps.size()))
        return fail(GABOR_ERR_INVALID, "chain step index out of range");
    const GeneratorStep& step = c->chain.steps[static_cast<std::size_t>(index)];
    std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, FourierStep>) {
                if (kind) *kind = 0;
                if (param) *param = 0.0;
                if (maslov) *maslov = 0;
            } else if constexpr (std::is_same_v<T, DilationStep>) {
                if (kind) *kind = 1;
                if (param) *param = st.L(0, 0);
                if (maslov) *maslov = st.m;
            } else {
                if (kind) *kind = 2;
                if (param) *param = st.P(0, 0);
                if (maslov) *maslov = 0;
            }
        },
        step);
    return GABOR_OK;
}

gabor_status gabor_chain_product(const gabor_chain* c, double out[4]) {
    if (!c || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] {
        const Mat m = chain_product(c->chain).entries();
        out[0] = m(0, 0);
        out[1] = m(0, 1);
        out[2] = m(1, 0);
        out[3] = m(1, 1);
    });
}

gabor_status gabor_rng_create(uint64_t seed, gabor_rng** out) {
    if (!out) return fail(GABOR_ERR_INVALID, "null argument");
    *out = new gabor_rng{Rng(seed)};
    return GABOR_OK;
}

void gabor_rng_free(gabor_rng* rng) { delete rng; }

gabor_status gabor_rng_symplectic(gabor_rng* rng, double out[4]) {
    if (!rng || !out) return fail(GABOR_ERR_INVALID, "null argument");
    return guarded([&] {
        const Mat m = random_sp1(rng->rng).entries();
        out[0] = m(0, 0);
        out[1] = m(0, 1);
        out[2] = m(1, 0);
        out[3] = m(1, 1);
    });
}

} // extern "C"
