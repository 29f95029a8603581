// dccr: command-line front end over the shared-library C API.
// Subcommands: verify | spectrum | butterfly | oscillator | witness.
// All file output is deterministic for a fixed invocation (fixed seed, fixed
// phase lattice, %.17g floats), so reruns are byte-identical and diffable.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dccr/dccr.h"
#include "json.hpp"

namespace {

struct api_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(dccr_status st) {
    if (st != DCCR_OK) throw api_error(dccr_last_error());
}

// round-trip-exact float formatting, stable across runs
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw api_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw api_error("write failed: " + path.string());
}

int run_verify(const std::filesystem::path& dir, std::uint64_t seed, bool corrupt) {
    dccr_verify* v = nullptr;
    check(dccr_verify_run(seed, corrupt ? 1 : 0, &v));
    std::int64_t count = 0;
    check(dccr_verify_count(v, &count));

    nlohmann::ordered_json report;
    report["version"] = dccr_version();
    report["seed"] = seed;
    report["corrupt_omega"] = corrupt;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();

    std::string first_fail;
    for (std::int64_t i = 0; i < count; ++i) {
        const char* key = nullptr;
        const char* anchor = nullptr;
        double dev = 0.0, tol = 0.0;
        int pass = 0;
        check(dccr_verify_item(v, i, &key, &anchor, &dev, &tol, &pass));
        std::printf("%s  %-38s max_dev=%.3e  tol=%.3e  [%s]\n", pass ? "PASS" : "FAIL",
                    key, dev, tol, anchor);
        if (!pass && first_fail.empty()) first_fail = key;
        checks.push_back({{"key", key},
                          {"anchor", anchor},
                          {"max_dev", dev},
                          {"tol", tol},
                          {"pass", pass != 0}});
    }
    int all = 0;
    check(dccr_verify_all_pass(v, &all));
    dccr_verify_free(v);

    report["all_pass"] = all != 0;
    report["checks"] = std::move(checks);
    write_file(dir / "verify_report.json", report.dump(2) + "\n");
    std::printf("%lld identities checked, %s\n", static_cast<long long>(count),
                all ? "all passed" : "FAILURES present");
    if (!all) {
        std::fprintf(stderr, "first failing identity: %s\n", first_fail.c_str());
        return 3;
    }
    return 0;
}

// one spectrum's worth of rows in the shared dataset layout
void emit_spectrum_rows(dccr_band* b, std::int64_t p, std::int64_t q, double c,
                        std::string& bands_csv, std::string& measures_csv) {
    const double flux = static_cast<double>(p) / static_cast<double>(q);
    std::int64_t nbands = 0;
    check(dccr_band_count(b, &nbands));
    for (std::int64_t i = 0; i < nbands; ++i) {
        double lo = 0.0, hi = 0.0;
        check(dccr_band_get(b, i, &lo, &hi));
        bands_csv += std::to_string(p) + "," + std::to_string(q) + "," + fmt(flux) + "," +
                     fmt(lo) + "," + fmt(hi) + "\n";
    }
    double measure = 0.0;
    check(dccr_band_measure(b, &measure));
    measures_csv += std::to_string(p) + "," + std::to_string(q) + "," + fmt(c) + "," +
                    fmt(measure) + "\n";
}

int run_spectrum(const std::filesystem::path& dir, std::int64_t p, std::int64_t q, double c,
                 int n_phase, const std::vector<std::int64_t>& dump_weyl) {
    dccr_band* b = nullptr;
    check(dccr_band_compute(p, q, c, n_phase, &b));
    std::string bands_csv = "p,q,flux,band_lo,band_hi\n";
    std::string measures_csv = "p,q,c,measure\n";
    emit_spectrum_rows(b, p, q, c, bands_csv, measures_csv);
    double measure = 0.0;
    check(dccr_band_measure(b, &measure));
    dccr_band_free(b);

    write_file(dir / "bands.csv", bands_csv);
    write_file(dir / "measures.csv", measures_csv);
    std::printf("spectrum p=%lld q=%lld c=%s: measure = %s\n", static_cast<long long>(p),
                static_cast<long long>(q), fmt(c).c_str(), fmt(measure).c_str());

    if (dump_weyl.size() == 2) {
        char* csv = nullptr;
        check(dccr_weyl_csv(p, q, dump_weyl[0], dump_weyl[1], &csv));
        const std::string name = "weyl_" + std::to_string(dump_weyl[0]) + "_" +
                                 std::to_string(dump_weyl[1]) + ".csv";
        write_file(dir / name, csv);
        dccr_string_free(csv);
        std::printf("wrote %s\n", name.c_str());
    }
    return 0;
}

int run_butterfly(const std::filesystem::path& dir, std::int64_t q_max, double c,
                  int n_phase) {
    std::string bands_csv = "p,q,flux,band_lo,band_hi\n";
    std::string measures_csv = "p,q,c,measure\n";
    std::int64_t spectra = 0, rows = 0;
    for (std::int64_t q = 1; q <= q_max; ++q) {
        for (std::int64_t p = (q == 1 ? 0 : 1); p < (q == 1 ? 1 : q); ++p) {
            if (q > 1 && std::gcd(p, q) != 1) continue;
            dccr_band* b = nullptr;
            check(dccr_band_compute(p, q, c, n_phase, &b));
            emit_spectrum_rows(b, p, q, c, bands_csv, measures_csv);
            dccr_band_free(b);
            ++spectra;
            rows += q;
        }
    }
    write_file(dir / "butterfly.csv", bands_csv);
    write_file(dir / "measures.csv", measures_csv);
    std::printf("butterfly q_max=%lld c=%s: %lld spectra, %lld band rows\n",
                static_cast<long long>(q_max), fmt(c).c_str(),
                static_cast<long long>(spectra), static_cast<long long>(rows));
    return 0;
}

int run_oscillator(const std::filesystem::path& dir, bool truncated, std::int64_t n,
                   std::int64_t m_steps, std::int64_t k, double box, double tau, double c) {
    dccr_grid* g = nullptr;
    if (truncated)
        check(dccr_grid_truncated(n, box, tau, &g));
    else
        check(dccr_grid_periodic(n, m_steps, k, &g));

    std::int64_t count = 0;
    check(dccr_grid_spectrum_harmonic(g, c, nullptr, 0, &count));
    std::vector<double> ev(static_cast<std::size_t>(count));
    check(dccr_grid_spectrum_harmonic(g, c, ev.data(), count, &count));

    double h = 0.0, tau_used = 0.0;
    std::int64_t n_used = 0;
    check(dccr_grid_info(g, &n_used, &h, &tau_used));
    dccr_grid_free(g);

    std::string csv = "index,value\n";
    for (std::int64_t i = 0; i < count; ++i)
        csv += std::to_string(i) + "," + fmt(ev[static_cast<std::size_t>(i)]) + "\n";
    write_file(dir / "oscillator.csv", csv);
    std::printf("oscillator %s N=%lld h=%s tau=%s: %lld eigenvalues, lowest = %s\n",
                truncated ? "truncated" : "periodic", static_cast<long long>(n_used),
                fmt(h).c_str(), fmt(tau_used).c_str(), static_cast<long long>(count),
                fmt(ev.empty() ? 0.0 : ev[0]).c_str());
    return 0;
}

int run_witness(const std::filesystem::path& dir, double lambda, int n_max, int samples) {
    dccr_witness* w = nullptr;
    check(dccr_witness_run(lambda, n_max, samples, &w));
    std::int64_t count = 0;
    check(dccr_witness_count(w, &count));

    std::string csv = "n,sup_X,value,ratio\n";
    double last_growth = 0.0;
    for (std::int64_t i = 0; i < count; ++i) {
        int n = 0;
        double sup = 0.0, value = 0.0, ratio = 0.0, growth = 0.0;
        check(dccr_witness_row(w, i, &n, &sup, &value, &ratio, &growth));
        csv += std::to_string(n) + "," + fmt(sup) + "," + fmt(value) + "," + fmt(ratio) + "\n";
        last_growth = growth;
    }
    dccr_witness_free(w);
    double base = 0.0;
    check(dccr_witness_growth_limit(lambda, &base));

    write_file(dir / "witness.csv", csv);
    std::printf("witness lambda=%s: |p_n(lambda)/p_{n-1}(lambda)| = %s at n=%d, "
                "asymptotic base = %s\n",
                fmt(lambda).c_str(), fmt(last_growth).c_str(), n_max, fmt(base).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for discretized canonical commutation relations"};
    app.set_config("--config", "", "read options from an INI/TOML file");
    app.require_subcommand(1);

    std::string output_dir = ".";
    app.add_option("--output-dir", output_dir, "directory for CSV/JSON outputs")
        ->capture_default_str();

    // verify
    auto* sc_verify = app.add_subcommand("verify", "run the dual-route identity suites");
    std::uint64_t seed = 20260815ULL;
    bool corrupt = false;
    sc_verify->add_option("--seed", seed, "seed for the randomized draws")
        ->capture_default_str();
    sc_verify->add_flag("--corrupt-omega", corrupt,
                        "sabotage the cocycle on the expected side; the suite must go red");

    // spectrum
    auto* sc_spectrum = app.add_subcommand("spectrum", "band spectrum at one rational flux");
    std::int64_t sp_p = 1, sp_q = 5;
    double sp_c = 1.0;
    int sp_nphase = 16;
    std::vector<std::int64_t> dump_weyl;
    sc_spectrum->add_option("--p", sp_p, "flux numerator")->required();
    sc_spectrum->add_option("--q", sp_q, "flux denominator (<= 256)")->required();
    sc_spectrum->add_option("--c", sp_c, "coupling")->capture_default_str();
    sc_spectrum->add_option("--n-phase", sp_nphase, "phase lattice subdivisions")
        ->capture_default_str();
    sc_spectrum
        ->add_option("--dump-weyl", dump_weyl,
                     "m n: also export the Weyl matrix W_{(m,n)} as CSV")
        ->expected(2);

    // butterfly
    auto* sc_butterfly =
        app.add_subcommand("butterfly", "band dataset over all reduced fluxes p/q");
    std::int64_t bf_qmax = 20;
    double bf_c = 1.0;
    int bf_nphase = 16;
    sc_butterfly->add_option("--q-max", bf_qmax, "largest denominator")->capture_default_str();
    sc_butterfly->add_option("--c", bf_c, "coupling")->capture_default_str();
    sc_butterfly->add_option("--n-phase", bf_nphase, "phase lattice subdivisions")
        ->capture_default_str();

    // oscillator
    auto* sc_osc = app.add_subcommand(
        "oscillator", "spectrum of H = 1/2 P_tau^2 + v(Q_tau), v harmonic");
    bool osc_trunc = false;
    std::int64_t osc_n = 512, osc_m = 8, osc_k = 1;
    double osc_box = 10.0, osc_tau = 0.2, osc_c = 1.0;
    sc_osc->add_option("--N", osc_n, "grid points")->capture_default_str();
    auto* opt_m = sc_osc->add_option("--m-steps", osc_m, "tau = m_steps h (periodic)")
                      ->capture_default_str();
    auto* opt_k =
        sc_osc->add_option("--k", osc_k, "winding: tau N h = 2 pi k (periodic)")
            ->capture_default_str();
    auto* opt_trunc = sc_osc->add_flag("--truncated", osc_trunc,
                                       "Dirichlet box mode for continuum-limit studies");
    auto* opt_box =
        sc_osc->add_option("--L", osc_box, "box half-width (truncated)")->capture_default_str();
    auto* opt_tau =
        sc_osc->add_option("--tau", osc_tau, "deformation step (truncated)")
            ->capture_default_str();
    sc_osc->add_option("--c", osc_c, "harmonic coupling, v(x) = c x^2/2")
        ->capture_default_str();
    opt_trunc->excludes(opt_m)->excludes(opt_k);
    opt_box->needs(opt_trunc);
    opt_tau->needs(opt_trunc);

    // witness
    auto* sc_witness =
        app.add_subcommand("witness", "Chebyshev growth table against the two-interval set");
    double wt_lambda = 0.0;
    int wt_nmax = 30, wt_samples = 5000;
    sc_witness->add_option("--lambda", wt_lambda, "evaluation point, |lambda| < 1")
        ->capture_default_str();
    sc_witness->add_option("--n-max", wt_nmax, "largest degree")->capture_default_str();
    sc_witness->add_option("--samples", wt_samples, "sample points per interval")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::filesystem::path dir(output_dir);
        std::filesystem::create_directories(dir);
        if (sc_verify->parsed()) return run_verify(dir, seed, corrupt);
        if (sc_spectrum->parsed())
            return run_spectrum(dir, sp_p, sp_q, sp_c, sp_nphase, dump_weyl);
        if (sc_butterfly->parsed()) return run_butterfly(dir, bf_qmax, bf_c, bf_nphase);
        if (sc_osc->parsed())
            return run_oscillator(dir, osc_trunc, osc_n, osc_m, osc_k, osc_box, osc_tau,
                                  osc_c);
        if (sc_witness->parsed()) return run_witness(dir, wt_lambda, wt_nmax, wt_samples);
    } catch (const api_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    } catch (const std::filesystem::filesystem_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
