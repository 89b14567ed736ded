// gaborlab command-line front end. Talks to the core exclusively through the
// public C API in gaborlab.h; orchestration, output formatting and sweep
// parallelism live here.
#include <gaborlab.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Handle RAII + error plumbing
// ---------------------------------------------------------------------------

struct WindowDel { void operator()(gabor_window* p) const { gabor_window_free(p); } };
struct LatticeDel { void operator()(gabor_lattice* p) const { gabor_lattice_free(p); } };
struct BoundsDel { void operator()(gabor_bounds* p) const { gabor_bounds_free(p); } };
struct ChainDel { void operator()(gabor_chain* p) const { gabor_chain_free(p); } };
struct RngDel { void operator()(gabor_rng* p) const { gabor_rng_free(p); } };

using WindowPtr = std::unique_ptr<gabor_window, WindowDel>;
using LatticePtr = std::unique_ptr<gabor_lattice, LatticeDel>;
using BoundsPtr = std::unique_ptr<gabor_bounds, BoundsDel>;
using ChainPtr = std::unique_ptr<gabor_chain, ChainDel>;
using RngPtr = std::unique_ptr<gabor_rng, RngDel>;

int exit_code_for(gabor_status status) {
    switch (status) {
        case GABOR_OK: return 0;
        case GABOR_ERR_PARSE:
        case GABOR_ERR_INVALID: return 1;
        case GABOR_ERR_HYPOTHESIS:
        case GABOR_ERR_NOT_SYMPLECTIC: return 2;
        default: return 3;
    }
}

// Raised to unwind to main with a specific process exit code.
struct CliError {
    int code;
    std::string message;
};

void require_ok(gabor_status status, const std::string& context) {
    if (status != GABOR_OK)
        throw CliError{exit_code_for(status), context + ": " + gabor_last_error()};
}

WindowPtr open_window(const std::string& spec, int grid_n, double grid_h) {
    gabor_window* w = nullptr;
    require_ok(gabor_window_create(spec.c_str(), grid_n, grid_h, &w), "window '" + spec + "'");
    return WindowPtr(w);
}

LatticePtr open_lattice(const std::string& spec) {
    gabor_lattice* lat = nullptr;
    require_ok(gabor_lattice_create(spec.c_str(), &lat), "lattice '" + spec + "'");
    return LatticePtr(lat);
}

json bounds_to_json(const gabor_bounds* b) {
    size_t needed = 0;
    gabor_bounds_json(b, -1, nullptr, 0, &needed);
    std::string buf(needed + 1, '\0');
    require_ok(gabor_bounds_json(b, -1, buf.data(), buf.size(), &needed), "bounds json");
    buf.resize(needed);
    return json::parse(buf);
}

bool bounds_not_frame(const gabor_bounds* b) {
    double lo = 0, hi = 0;
    gabor_bounds_values(b, &lo, &hi);
    return lo < 1e-3 * hi;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw CliError{1, "cannot open output file '" + out_path + "'"};
    out << text;
}

void emit_json(const json& j, bool compact, const std::string& out_path) {
    emit(j.dump(compact ? -1 : 2), out_path);
}

std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Sweep parallelism: deterministic output order regardless of scheduling.
// GABORLAB_THREADS caps the worker count.
// ---------------------------------------------------------------------------

unsigned thread_cap() {
    if (const char* env = std::getenv("GABORLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(thread_cap(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        });
    for (auto& th : pool) th.join();
}

// ---------------------------------------------------------------------------
// Shared option block
// ---------------------------------------------------------------------------

struct CommonOpts {
    std::string window_spec;
    std::string lattice_spec;
    int truncation_k = 20;
    int grid_n = 256;
    int grid_samples = 0;  // --N, 0 = default
    double grid_h = 0.0;   // --h, 0 = default
    std::uint64_t seed = 1;
    std::string out_path;
    bool compact = false;
};

gabor_params make_params(const CommonOpts& opts) {
    gabor_params params;
    gabor_params_init(&params);
    params.truncation_k = opts.truncation_k;
    params.grid_n = opts.grid_n;
    return params;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_lattice) {
    cmd->set_help_flag("--help", "print help"); // frees -h for the grid spacing flag
    cmd->add_option("--window", opts.window_spec, "window spec (gauss:gamma=..., hermite:n=...,gamma=..., oddbump, file:path)");
    if (with_lattice)
        cmd->add_option("--lattice", opts.lattice_spec, "lattice spec (sq:delta=..., sep:alpha=...,beta=..., symp:delta=...,S=a,b,c,d)");
    cmd->add_option("--K", opts.truncation_k, "Janssen series truncation")->check(CLI::Range(0, 200));
    cmd->add_option("--grid-n", opts.grid_n, "symbol grid per axis")->check(CLI::Range(2, 4096));
    cmd->add_option("--N", opts.grid_samples, "time-grid samples (power of two)");
    cmd->add_option("--h", opts.grid_h, "time-grid spacing");
    cmd->add_option("--seed", opts.seed, "seed for randomized sweeps");
    cmd->add_option("--out", opts.out_path, "write output to file instead of stdout");
    cmd->add_flag("--json", opts.compact, "compact single-line JSON");
}

std::vector<double> parse_range(const std::string& text, int steps, const char* what) {
    const auto colon = text.find(':');
    double lo = 0, hi = 0;
    try {
        if (colon == std::string::npos) {
            lo = hi = std::stod(text);
        } else {
            lo = std::stod(text.substr(0, colon));
            hi = std::stod(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw CliError{1, std::string(what) + ": bad range '" + text + "'"};
    }
    if (!(lo > 0.0) || !(hi > 0.0) || hi < lo)
        throw CliError{1, std::string(what) + ": range must be positive and ordered"};
    std::vector<double> vals;
    if (steps == 1) {
        vals.push_back(lo);
    } else {
        for (int i = 0; i < steps; ++i)
            vals.push_back(lo + (hi - lo) * i / (steps - 1));
    }
    return vals;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_bounds(const CommonOpts& opts, const std::string& method_name) {
    if (opts.window_spec.empty() || opts.lattice_spec.empty())
        throw CliError{1, "bounds: --window and --lattice are required"};
    gabor_method method = GABOR_METHOD_AUTO;
    if (method_name == "janssen") method = GABOR_METHOD_JANSSEN;
    else if (method_name == "zak") method = GABOR_METHOD_ZAK;
    else if (method_name == "finite-section") method = GABOR_METHOD_FINITE_SECTION;
    else if (method_name != "auto") throw CliError{1, "bounds: unknown --method '" + method_name + "'"};

    const WindowPtr w = open_window(opts.window_spec, opts.grid_samples, opts.grid_h);
    const LatticePtr lat = open_lattice(opts.lattice_spec);
    const gabor_params params = make_params(opts);
    gabor_bounds* raw = nullptr;
    require_ok(gabor_bounds_compute(w.get(), lat.get(), &params, method, &raw), "bounds");
    const BoundsPtr bounds(raw);

    double delta = 0;
    gabor_lattice_density(lat.get(), &delta);
    json report = bounds_to_json(bounds.get());
    report["not_frame"] = bounds_not_frame(bounds.get());
    report["window"] = opts.window_spec;
    report["lattice"] = opts.lattice_spec;
    report["delta"] = delta;
    emit_json(report, opts.compact, opts.out_path);
    return 0;
}

int cmd_certify(const CommonOpts& opts, const std::string& which, double tolerance) {
    if (opts.window_spec.empty()) throw CliError{1, "certify: --window is required"};
    const WindowPtr w = open_window(opts.window_spec, opts.grid_samples, opts.grid_h);

    double even_defect = 0, odd_defect = 0;
    require_ok(gabor_window_parity_defect(w.get(), &even_defect, &odd_defect), "parity");

    std::vector<std::string> wanted;
    if (which == "auto") {
        if (even_defect < 1e-6) wanted = {"even-critical"};
        else if (odd_defect < 1e-6) wanted = {"odd-critical", "odd-density2"};
        else throw CliError{2, "certify: window has no definite parity"};
    } else if (which == "even-critical" || which == "odd-critical" || which == "odd-density2") {
        wanted = {which};
    } else {
        throw CliError{1, "certify: unknown --cert '" + which + "'"};
    }

    json residuals;
    bool all_pass = true;
    for (const std::string& name : wanted) {
        double residual = 0;
        gabor_status status;
        if (name == "even-critical")
            status = gabor_certify_even_critical(w.get(), opts.truncation_k, &residual);
        else if (name == "odd-critical")
            status = gabor_certify_odd_critical(w.get(), opts.truncation_k, &residual);
        else
            status = gabor_certify_odd_density2(w.get(), opts.truncation_k, &residual);
        require_ok(status, "certify " + name);
        residuals[name] = residual;
        all_pass = all_pass && residual < tolerance;
    }

    json report;
    report["window"] = opts.window_spec;
    report["truncation_K"] = opts.truncation_k;
    report["parity_defect"] = {{"even", even_defect}, {"odd", odd_defect}};
    report["certificates"] = residuals;
    report["tolerance"] = tolerance;
    report["pass"] = all_pass;
    emit_json(report, opts.compact, opts.out_path);
    return all_pass ? 0 : 3;
}

int cmd_lyunes(const CommonOpts& opts, int n_max, int trials) {
    if (n_max < 1 || trials < 1) throw CliError{1, "lyunes: --n-max and --trials must be >= 1"};

    struct Job {
        int n;
        double delta;
        std::string window_name;
        const gabor_window* window;
        double s[4];
        bool control;
    };

    const WindowPtr h1 = open_window("hermite:n=1,gamma=1", opts.grid_samples, opts.grid_h);
    const WindowPtr h3 = open_window("hermite:n=3,gamma=1", opts.grid_samples, opts.grid_h);
    const WindowPtr ob = open_window("oddbump", opts.grid_samples, opts.grid_h);
    const WindowPtr ga = open_window("gauss:gamma=1", opts.grid_samples, opts.grid_h);

    gabor_rng* raw_rng = nullptr;
    require_ok(gabor_rng_create(opts.seed, &raw_rng), "rng");
    const RngPtr rng(raw_rng);

    // Draw every matrix up front, in row order, so the CSV is byte-identical
    // for a given seed no matter how the cells are scheduled.
    std::vector<Job> jobs;
    const std::pair<std::string, const gabor_window*> odd_windows[] = {
        {"hermite1", h1.get()}, {"hermite3", h3.get()}, {"oddbump", ob.get()}};
    for (int n = 1; n <= n_max; ++n) {
        const double delta = (n + 1.0) / n;
        for (const auto& [name, win] : odd_windows) {
            for (int t = 0; t < trials; ++t) {
                Job job{n, delta, name, win, {0, 0, 0, 0}, false};
                require_ok(gabor_rng_symplectic(rng.get(), job.s), "rng");
                jobs.push_back(job);
            }
        }
        Job control{n, delta, "gauss", ga.get(), {0, 0, 0, 0}, true};
        require_ok(gabor_rng_symplectic(rng.get(), control.s), "rng");
        jobs.push_back(control);
    }

    const gabor_params params = make_params(opts);
    std::vector<std::string> rows(jobs.size());
    std::atomic<bool> claims_hold{true};
    std::atomic<bool> had_errors{false};
    parallel_for(jobs.size(), [&](std::size_t i) {
        const Job& job = jobs[i];
        std::ostringstream row;
        row << job.n << ',' << fmt12(job.delta) << ',' << job.window_name << ','
            << fmt12(job.s[0]) << ',' << fmt12(job.s[1]) << ',' << fmt12(job.s[2]) << ','
            << fmt12(job.s[3]) << ',';
        gabor_bounds* raw = nullptr;
        const gabor_status status =
            gabor_bounds_symplectic(job.window, job.s, job.delta, &params, &raw);
        if (status != GABOR_OK) {
            row << ",,," << "error:" << gabor_last_error();
            had_errors = true;
        } else {
            const BoundsPtr bounds(raw);
            double lo = 0, hi = 0;
            gabor_bounds_values(bounds.get(), &lo, &hi);
            const bool nf = bounds_not_frame(bounds.get());
            row << fmt12(lo) << ',' << fmt12(hi) << ',' << (nf ? "true" : "false") << ",ok";
            if (job.control ? nf : !nf) claims_hold = false;
        }
        rows[i] = row.str();
    });

    std::ostringstream csv;
    csv << "n,delta,window,s11,s12,s21,s22,A,B,not_frame,status\n";
    for (const std::string& row : rows) csv << row << '\n';
    emit(csv.str(), opts.out_path);
    if (had_errors) return 3;
    return claims_hold ? 0 : 3;
}

int cmd_scan(const CommonOpts& opts, const std::string& alpha_range,
             const std::string& beta_range, int steps) {
    if (opts.window_spec.empty()) throw CliError{1, "scan: --window is required"};
    if (steps < 1) throw CliError{1, "scan: --steps must be >= 1"};
    const std::vector<double> alphas = parse_range(alpha_range, steps, "scan alpha");
    const std::vector<double> betas = parse_range(beta_range, steps, "scan beta");

    const WindowPtr w = open_window(opts.window_spec, opts.grid_samples, opts.grid_h);
    const gabor_params params = make_params(opts);

    struct Cell { double alpha, beta; };
    std::vector<Cell> cells;
    for (const double a : alphas)
        for (const double b : betas) cells.push_back({a, b});

    std::vector<std::string> rows(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) {
        const auto [alpha, beta] = cells[i];
        std::ostringstream row;
        row << fmt12(alpha) << ',' << fmt12(beta) << ',' << fmt12(1.0 / (alpha * beta)) << ',';
        char spec[128];
        std::snprintf(spec, sizeof spec, "sep:alpha=%.17g,beta=%.17g", alpha, beta);
        gabor_lattice* raw_lat = nullptr;
        gabor_bounds* raw_bounds = nullptr;
        gabor_status status = gabor_lattice_create(spec, &raw_lat);
        const LatticePtr lat(raw_lat);
        if (status == GABOR_OK)
            status = gabor_bounds_compute(w.get(), lat.get(), &params, GABOR_METHOD_AUTO,
                                          &raw_bounds);
        if (status != GABOR_OK) {
            row << ",,," << "error:" << gabor_last_error();
        } else {
            const BoundsPtr bounds(raw_bounds);
            double lo = 0, hi = 0;
            gabor_bounds_values(bounds.get(), &lo, &hi);
            char method[64] = {0};
            gabor_bounds_method(bounds.get(), method, sizeof method);
            row << fmt12(lo) << ',' << fmt12(hi) << ','
                << (bounds_not_frame(bounds.get()) ? "true" : "false") << ',' << method;
        }
        rows[i] = row.str();
    });

    std::ostringstream csv;
    csv << "alpha,beta,delta,A,B,not_frame,method\n";
    for (const std::string& row : rows) csv << row << '\n';
    emit(csv.str(), opts.out_path);
    return 0;
}

int cmd_deform(const CommonOpts& opts, const std::string& s_text, double delta) {
    if (opts.window_spec.empty()) throw CliError{1, "deform: --window is required"};
    if (!(delta > 0)) throw CliError{1, "deform: --delta must be > 0"};
    double s[4] = {0, 0, 0, 0};
    {
        std::stringstream ss(s_text);
        std::string tok;
        int i = 0;
        while (std::getline(ss, tok, ',') && i < 4) {
            try {
                s[i++] = std::stod(tok);
            } catch (const std::exception&) {
                throw CliError{1, "deform: bad S entry '" + tok + "'"};
            }
        }
        if (i != 4) throw CliError{1, "deform: S needs 4 comma-separated entries"};
    }

    const WindowPtr w = open_window(opts.window_spec, opts.grid_samples, opts.grid_h);
    const gabor_params params = make_params(opts);

    gabor_bounds* raw = nullptr;
    require_ok(gabor_bounds_symplectic(w.get(), s, delta, &params, &raw), "deform reduction");
    const BoundsPtr reduction(raw);

    // Direct route on the physically deformed lattice: the best non-reduction
    // method available (janssen/zak for a diagonal S, finite-section else).
    const bool diagonal = std::abs(s[1]) < 1e-12 && std::abs(s[2]) < 1e-12;
    char spec[192];
    std::snprintf(spec, sizeof spec, "symp:delta=%.17g,S=%.17g,%.17g,%.17g,%.17g", delta, s[0],
                  s[1], s[2], s[3]);
    const LatticePtr lat = open_lattice(spec);
    gabor_bounds* raw_direct = nullptr;
    require_ok(gabor_bounds_compute(w.get(), lat.get(), &params,
                                    diagonal ? GABOR_METHOD_AUTO : GABOR_METHOD_FINITE_SECTION,
                                    &raw_direct),
               "deform direct");
    const BoundsPtr direct(raw_direct);

    double ra = 0, rb = 0, da = 0, db = 0;
    gabor_bounds_values(reduction.get(), &ra, &rb);
    gabor_bounds_values(direct.get(), &da, &db);
    const auto rel_gap = [](double x, double y) {
        const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
        return std::abs(x - y) / scale;
    };
    const double gap_a = rel_gap(ra, da), gap_b = rel_gap(rb, db);

    json report;
    report["window"] = opts.window_spec;
    report["delta"] = delta;
    report["S"] = {s[0], s[1], s[2], s[3]};
    report["reduction"] = bounds_to_json(reduction.get());
    report["direct"] = bounds_to_json(direct.get());
    report["gap_A"] = gap_a;
    report["gap_B"] = gap_b;
    report["relative_gap"] = std::max(gap_a, gap_b);
    emit_json(report, opts.compact, opts.out_path);
    return 0;
}

int cmd_factor(const CommonOpts& opts, const std::string& s_text) {
    double s[4] = {0, 0, 0, 0};
    std::stringstream ss(s_text);
    std::string tok;
    int i = 0;
    while (std::getline(ss, tok, ',') && i < 4) {
        try {
            s[i++] = std::stod(tok);
        } catch (const std::exception&) {
            throw CliError{1, "factor: bad S entry '" + tok + "'"};
        }
    }
    if (i != 4) throw CliError{1, "factor: S needs 4 comma-separated entries"};

    gabor_chain* raw = nullptr;
    require_ok(gabor_decompose(s, &raw), "factor");
    const ChainPtr chain(raw);

    int32_t len = 0;
    gabor_chain_length(chain.get(), &len);
    json steps = json::array();
    for (int32_t k = 0; k < len; ++k) {
        int32_t kind = 0, maslov = 0;
        double param = 0;
        gabor_chain_step(chain.get(), k, &kind, &param, &maslov);
        json step;
        if (kind == 0) {
            step["type"] = "fourier";
        } else if (kind == 1) {
            step["type"] = "dilation";
            step["L"] = param;
            step["m"] = maslov;
        } else {
            step["type"] = "chirp";
            step["P"] = param;
        }
        steps.push_back(step);
    }
    double product[4] = {0, 0, 0, 0};
    require_ok(gabor_chain_product(chain.get(), product), "factor product");
    double residual = 0;
    for (int k = 0; k < 4; ++k) residual = std::max(residual, std::abs(product[k] - s[k]));

    json report;
    report["S"] = {s[0], s[1], s[2], s[3]};
    report["steps"] = steps;
    report["product"] = {product[0], product[1], product[2], product[3]};
    report["reconstruction_error"] = residual;
    emit_json(report, opts.compact, opts.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gaborlab: sharp Gabor frame bounds on symplectic lattices"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    CommonOpts opts;
    std::string method_name = "auto";
    std::string cert_name = "auto";
    double cert_tolerance = 1e-8;
    int n_max = 3, trials = 5, steps = 1;
    std::string alpha_range = "1", beta_range = "1", s_text;
    double delta = 2.0;

    CLI::App* bounds = app.add_subcommand("bounds", "frame bounds for a window and lattice");
    add_common(bounds, opts, true);
    bounds->add_option("--method", method_name, "auto|janssen|zak|finite-section");

    CLI::App* certify = app.add_subcommand("certify", "critical-density vanishing certificates");
    add_common(certify, opts, false);
    certify->add_option("--cert", cert_name, "auto|even-critical|odd-critical|odd-density2");
    certify->add_option("--tol", cert_tolerance, "pass tolerance for residuals");

    CLI::App* lyunes = app.add_subcommand(
        "lyunes", "odd windows at density (n+1)/n over random symplectic lattices");
    add_common(lyunes, opts, false);
    lyunes->add_option("--n-max", n_max, "largest n in delta = (n+1)/n");
    lyunes->add_option("--trials", trials, "random matrices per window and density");

    CLI::App* scan = app.add_subcommand("scan", "A/B heat map over separable lattices");
    add_common(scan, opts, false);
    scan->add_option("--alpha-range", alpha_range, "alpha range min:max");
    scan->add_option("--beta-range", beta_range, "beta range min:max");
    scan->add_option("--steps", steps, "grid steps per axis");

    CLI::App* deform = app.add_subcommand("deform",
                                          "reduction-path vs direct bounds on a deformed lattice");
    add_common(deform, opts, false);
    deform->add_option("--S", s_text, "symplectic matrix a,b,c,d (row-major)")->required();
    deform->add_option("--delta", delta, "lattice density");

    CLI::App* factor = app.add_subcommand("factor", "generator-chain factorization of S");
    add_common(factor, opts, false);
    factor->add_option("--S", s_text, "symplectic matrix a,b,c,d (row-major)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (bounds->parsed()) return cmd_bounds(opts, method_name);
        if (certify->parsed()) return cmd_certify(opts, cert_name, cert_tolerance);
        if (lyunes->parsed()) return cmd_lyunes(opts, n_max, trials);
        if (scan->parsed()) return cmd_scan(opts, alpha_range, beta_range, steps);
        if (deform->parsed()) return cmd_deform(opts, s_text, delta);
        if (factor->parsed()) return cmd_factor(opts, s_text);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
