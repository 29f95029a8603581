#pragma once
#include "core/element.hpp"

namespace dccr {

// phi(u, x) = (1 - u^2) / (1 + u^2 - u x), |u| < 1, |x| <= 2
double phi_scalar(double u, double x);

struct GeneratingSum {
    AlgebraElement element;  // truncated double sum over |m|, |n| <= cutoff
    double tail_bound;       // certified l1 bound on the discarded terms
};

// F(s,t) = sum over m, n of s^|m| t^|n| e^{-i m n theta / 2} d_{(m,n)},
// truncated at |m|, |n| <= cutoff. Requires |s|, |t| < 1.
GeneratingSum generating_sum(double s, double t, const Theta& theta, int cutoff);

// A_{pq} = 2 e^{-i p q theta/2} d_{(p,q)} + 2 e^{i p q theta/2} d_{(-p,q)}
// (the literal closed form: at p = 0 or q = 0 it evaluates to 4 d)
AlgebraElement coefficient_A(std::int64_t p, std::int64_t q, const Theta& theta);

// inverts the 2x2 system {A, A*} -> d_{(p,q)}; requires p*q != 0 and
// |sin(p q theta)| > 1e-9, else rejects with "resonant phase"
AlgebraElement recover_generator(std::int64_t p, std::int64_t q, const AlgebraElement& A,
                                 const AlgebraElement& Astar, const Theta& theta);

}  // namespace dccr
