#include "core/generating.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dccr {

double phi_scalar(double u, double x) {
    if (std::abs(u) >= 1.0) throw std::invalid_argument("|u| must be < 1");
    if (std::abs(x) > 2.0) throw std::invalid_argument("|x| must be <= 2");
    return (1.0 - u * u) / (1.0 + u * u - u * x);  // denominator >= (1-|u|)^2 > 0
}

GeneratingSum generating_sum(double s, double t, const Theta& theta, int cutoff) {
    if (std::abs(s) >= 1.0 || std::abs(t) >= 1.0)
        throw std::invalid_argument("|s| and |t| must be < 1");
    if (cutoff < 1) throw std::invalid_argument("cutoff must be >= 1");

    const int M = cutoff;
    std::vector<double> spow(M + 1), tpow(M + 1);
    spow[0] = tpow[0] = 1.0;
    for (int i = 1; i <= M; ++i) {
        spow[i] = spow[i - 1] * s;
        tpow[i] = tpow[i - 1] * t;
    }

    AlgebraElement F(theta);
    for (int m = -M; m <= M; ++m) {
        for (int n = -M; n <= M; ++n) {
            const cplx w = spow[std::abs(m)] * tpow[std::abs(n)] *
                           theta.half_phase(-static_cast<std::int64_t>(m) * n);
            // d_{(m,n)} spreads the weight onto (m, n) and (-m, -n)
            F.add({m, n}, w);
            F.add({-m, -n}, w);
        }
    }

    // l1 tail: 2 * [ (sum_{|m|<=M} |s|^|m|) (sum_{|n|>M} |t|^|n|)
    //              + (sum_{|m|>M} |s|^|m|) (sum_n |t|^|n|) ]
    const double as = std::abs(s), at = std::abs(t);
    const double in_s = 1.0 + 2.0 * as * (1.0 - std::pow(as, M)) / (1.0 - as);
    const double out_t = 2.0 * std::pow(at, M + 1) / (1.0 - at);
    const double out_s = 2.0 * std::pow(as, M + 1) / (1.0 - as);
    const double all_t = (1.0 + at) / (1.0 - at);
    const double tail = 2.0 * (in_s * out_t + out_s * all_t);

    return {std::move(F), tail};
}

AlgebraElement coefficient_A(std::int64_t p, std::int64_t q, const Theta& theta) {
    const cplx a = theta.half_phase(-p * q);  // e^{-i p q theta / 2}
    AlgebraElement A = 2.0 * a * d_generator({p, q}, theta);
    A += 2.0 * std::conj(a) * d_generator({-p, q}, theta);
    return A;
}

AlgebraElement recover_generator(std::int64_t p, std::int64_t q, const AlgebraElement& A,
                                 const AlgebraElement& Astar, const Theta& theta) {
    if (p == 0 || q == 0)
        throw std::invalid_argument("p*q = 0: use coefficient_A/4 directly");
    // sin(p q theta) = Im e^{i p q theta}
    const double sinpq = theta.half_phase(2 * p * q).imag();
    if (std::abs(sinpq) <= 1e-9) throw std::invalid_argument("resonant phase");

    // [A; A*] = [[2a, 2conj(a)], [2conj(a), 2a]] [d_{(p,q)}; d_{(-p,q)}],
    // a = e^{-i p q theta/2}; det = 4(a^2 - conj(a)^2) = -8i sin(p q theta)
    const cplx a = theta.half_phase(-p * q);
    const cplx det = 4.0 * (a * a - std::conj(a) * std::conj(a));
    AlgebraElement out = (2.0 * a / det) * A;
    out += (-2.0 * std::conj(a) / det) * Astar;
    return out;
}

}  // namespace dccr
