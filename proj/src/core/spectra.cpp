#include "core/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "core/parallel.hpp"

namespace dccr {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr long long kDenseLimit = 256;  // dense solver cutoff for the sweep
}

std::vector<double> eig_hermitian(const CMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("matrix is not square");
    if (a.hermitian_defect() > 1e-12)
        throw std::invalid_argument("matrix is not Hermitian");
    return eig_hermitian_values(a);
}

double union_measure(const std::vector<Band>& bands) {
    if (bands.empty()) return 0.0;
    std::vector<Band> sorted = bands;
    std::sort(sorted.begin(), sorted.end(),
              [](const Band& a, const Band& b) { return a.lo < b.lo; });
    double total = 0.0;
    double cur_lo = sorted[0].lo;
    double cur_hi = sorted[0].hi;
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].lo <= cur_hi) {
            cur_hi = std::max(cur_hi, sorted[i].hi);
        } else {
            total += cur_hi - cur_lo;
            cur_lo = sorted[i].lo;
            cur_hi = sorted[i].hi;
        }
    }
    total += cur_hi - cur_lo;
    return total;
}

BandSpectrum band_spectrum(long long p, long long q, double c, int n_phase,
                           bool keep_grid) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (q > kDenseLimit)
        throw std::invalid_argument("q exceeds dense-solver limit of 256");
    if (n_phase < 1) throw std::invalid_argument("n_phase must be >= 1");
    if (!(c >= 0.0) || !std::isfinite(c))
        throw std::invalid_argument("coupling c must be finite and >= 0");
    p = ((p % q) + q) % q;
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");

    const int dim = static_cast<int>(q);
    const int side = n_phase + 1;  // phases 2*pi*i/n_phase, i = 0..n_phase inclusive
    const std::size_t npts = static_cast<std::size_t>(side) * side;

    // eigenvalues for every lattice point, filled independently per slot
    std::vector<double> grid(npts * static_cast<std::size_t>(dim));
    parallel_for(npts, [&](std::size_t idx) {
        const int i = static_cast<int>(idx) / side;
        const int j = static_cast<int>(idx) % side;
        const double phi1 = kTwoPi * i / n_phase;
        const double phi2 = kTwoPi * j / n_phase;
        CMatrix m(dim, dim);
        const cplx hop = c * std::polar(1.0, phi2);
        for (int k = 0; k < dim; ++k) {
            const long long r = (p * k) % q;  // clock angle reduced before the trig call
            m(k, k) += 2.0 * std::cos(kTwoPi * r / q + phi1);
            m(k, (k + 1) % dim) += hop;
            m((k + 1) % dim, k) += std::conj(hop);
        }
        std::vector<double> ev = eig_hermitian_values(m);
        std::copy(ev.begin(), ev.end(), grid.begin() + idx * dim);
    });

    BandSpectrum out;
    out.p = p;
    out.q = q;
    out.c = c;
    out.n_phase = n_phase;
    out.bands.resize(dim);
    for (int k = 0; k < dim; ++k) {
        double lo = grid[k];
        double hi = grid[k];
        for (std::size_t idx = 1; idx < npts; ++idx) {
            const double v = grid[idx * dim + k];
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        out.bands[k] = {lo, hi};
    }
    out.measure = union_measure(out.bands);
    if (keep_grid) out.eigen_grid = std::move(grid);
    return out;
}

std::vector<BandSpectrum> butterfly(long long q_max, double c, int n_phase) {
    if (q_max < 1) throw std::invalid_argument("q_max must be >= 1");
    if (q_max > kDenseLimit)
        throw std::invalid_argument("q_max exceeds dense-solver limit of 256");
    std::vector<BandSpectrum> out;
    for (long long q = 1; q <= q_max; ++q) {
        if (q == 1) {
            out.push_back(band_spectrum(0, 1, c, n_phase));
            continue;
        }
        for (long long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            out.push_back(band_spectrum(p, q, c, n_phase));
        }
    }
    return out;
}

long long golden_numerator(long long q) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    if (q == 1) return 0;
    const double golden = 0.61803398874989484820;
    long long p = std::llround(golden * static_cast<double>(q));
    p = std::clamp(p, 1LL, q - 1);
    if (std::gcd(p, q) == 1) return p;
    for (long long d = 1; d < q; ++d) {
        if (p - d >= 1 && std::gcd(p - d, q) == 1) return p - d;
        if (p + d <= q - 1 && std::gcd(p + d, q) == 1) return p + d;
    }
    throw std::logic_error("no coprime numerator found");  // unreachable for q >= 2
}

std::vector<MeasurePoint> measure_trend(double c, const std::vector<long long>& q_list,
                                        int n_phase) {
    std::vector<MeasurePoint> out;
    out.reserve(q_list.size());
    for (long long q : q_list) {
        const long long p = golden_numerator(q);
        BandSpectrum s = band_spectrum(p, q, c, n_phase);
        out.push_back({q, p, s.measure});
    }
    return out;
}

}  // namespace dccr
