#pragma once
#include <vector>

namespace dccr {

// Chebyshev witness against extending "evaluate at lambda" off the set
// X = [-2,-1] u [1,2]: p_n = T_n((2x^2-5)/3) stays <= 1 on X while
// |p_n(lambda)| grows like rho^n for lambda outside X.
struct WitnessRow {
    int n = 0;
    double lambda = 0.0;
    double sup_on_x = 0.0;        // max |p_n| over sampled X (endpoints included)
    double value_at_lambda = 0.0;  // p_n(lambda)
    double ratio = 0.0;            // |p_n(lambda)| / sup_on_x
    double growth_base = 0.0;      // |p_n(lambda) / p_{n-1}(lambda)|
};

// evaluate T_n((2x^2-5)/3) at a point
double witness_poly(int n, double x);

// largest |p_n| over X, sampled with samples_per_interval points per interval
// (linspace, endpoints kept, so the exact extrema at |x| = 1, 2 are hit)
double witness_sup(int n, int samples_per_interval = 5000);

// single row of the growth table; requires |lambda| < 1 (elsewhere u(lambda)
// falls back into [-1,1] and the polynomials stay bounded)
WitnessRow chebyshev_witness(int n, double lambda,
                             int samples_per_interval = 5000);

// rows n = 1..n_max
std::vector<WitnessRow> extension_gap_report(double lambda, int n_max,
                                             int samples_per_interval = 5000);

// |u| + sqrt(u^2 - 1) for u = (2*lambda^2-5)/3: the asymptotic growth base
double witness_growth_limit(double lambda);

}  // namespace dccr
