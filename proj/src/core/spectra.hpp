#pragma once
#include <vector>

#include "core/matrix.hpp"

namespace dccr {

// ascending eigenvalues of a Hermitian matrix; rejects inputs whose
// Hermitian defect exceeds 1e-12
std::vector<double> eig_hermitian(const CMatrix& a);

// one closed interval of spectrum
struct Band {
    double lo = 0.0;
    double hi = 0.0;
};

// spectrum of u + u* + c (v + v*) in the q-dimensional clock/shift family,
// swept over the phase lattice phi = 2*pi*i/n_phase, i = 0..n_phase
// (both endpoints kept, so the sweep has (n_phase+1)^2 points)
struct BandSpectrum {
    long long p = 0;
    long long q = 1;
    double c = 1.0;
    int n_phase = 0;
    std::vector<Band> bands;      // per eigenvalue index: [min, max] over the sweep
    double measure = 0.0;         // length of the union of the bands
    // eigenvalues per lattice point, row-major over (i, j), q values each,
    // ascending; only filled when requested
    std::vector<double> eigen_grid;
};

BandSpectrum band_spectrum(long long p, long long q, double c, int n_phase,
                           bool keep_grid = false);

// spectra for every reduced fraction p/q with q <= q_max (including 0/1),
// ordered by q then p
std::vector<BandSpectrum> butterfly(long long q_max, double c, int n_phase);

struct MeasurePoint {
    long long q = 1;
    long long p = 0;  // numerator actually used (golden-ratio pick, coprime-adjusted)
    double measure = 0.0;
};

// total band measure along a sequence of denominators, with p chosen as the
// closest-to-golden coprime numerator for each q
std::vector<MeasurePoint> measure_trend(double c, const std::vector<long long>& q_list,
                                        int n_phase);

// closest integer to q*(sqrt(5)-1)/2, nudged to the nearest coprime value
long long golden_numerator(long long q);

// length of the union of closed intervals
double union_measure(const std::vector<Band>& bands);

}  // namespace dccr
