#include "core/witness.hpp"

#include <cmath>
#include <stdexcept>

namespace dccr {

namespace {

constexpr int kMaxDegree = 512;  // 3^512 ~ 1e244, still comfortably inside double range

double u_of(double x) { return (2.0 * x * x - 5.0) / 3.0; }

// T_n(u) by the three-term recurrence
double cheb(int n, double u) {
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = u;
    for (int k = 2; k <= n; ++k) {
        double next = 2.0 * u * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

void check_degree(int n) {
    if (n < 0) throw std::invalid_argument("degree must be >= 0");
    if (n > kMaxDegree) throw std::invalid_argument("degree must be <= 512");
}

}  // namespace

double witness_poly(int n, double x) {
    check_degree(n);
    if (!std::isfinite(x)) throw std::invalid_argument("point must be finite");
    return cheb(n, u_of(x));
}

double witness_sup(int n, int samples_per_interval) {
    check_degree(n);
    if (samples_per_interval < 2)
        throw std::invalid_argument("need at least 2 samples per interval");
    const int s = samples_per_interval;
    double sup = 0.0;
    for (int i = 0; i < s; ++i) {
        const double t = 1.0 + static_cast<double>(i) / (s - 1);  // [1, 2]
        const double v = std::abs(cheb(n, u_of(t)));
        if (v > sup) sup = v;
        // the left interval mirrors the right one, but sample it anyway so the
        // reported sup really comes from both components
        const double w = std::abs(cheb(n, u_of(-t)));
        if (w > sup) sup = w;
    }
    return sup;
}

double witness_growth_limit(double lambda) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("point must be finite");
    const double u = std::abs(u_of(lambda));
    if (u <= 1.0) return 1.0;  // inside the witness set: no exponential growth
    return u + std::sqrt(u * u - 1.0);
}

WitnessRow chebyshev_witness(int n, double lambda, int samples_per_interval) {
    check_degree(n);
    if (n < 1) throw std::invalid_argument("degree must be >= 1");
    if (!std::isfinite(lambda)) throw std::invalid_argument("point must be finite");
    // at |lambda| >= 1 the image u(lambda) lands back in [-1,1]: evaluation
    // there extends harmlessly and the witness has nothing to show
    if (std::abs(lambda) >= 1.0)
        throw std::invalid_argument("witness point must satisfy |lambda| < 1");
    WitnessRow row;
    row.n = n;
    row.lambda = lambda;
    row.sup_on_x = witness_sup(n, samples_per_interval);
    row.value_at_lambda = cheb(n, u_of(lambda));
    row.ratio = std::abs(row.value_at_lambda) / row.sup_on_x;
    const double prev = cheb(n - 1, u_of(lambda));
    row.growth_base = prev == 0.0 ? 0.0 : std::abs(row.value_at_lambda / prev);
    return row;
}

std::vector<WitnessRow> extension_gap_report(double lambda, int n_max,
                                             int samples_per_interval) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    check_degree(n_max);
    std::vector<WitnessRow> rows;
    rows.reserve(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n)
        rows.push_back(chebyshev_witness(n, lambda, samples_per_interval));
    return rows;
}

}  // namespace dccr
