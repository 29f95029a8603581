#include "core/grid.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dccr {

namespace {
constexpr double kPi = 3.14159265358979323846;

void require_periodic(const GridModel& g) {
    if (g.truncated) throw std::invalid_argument("periodic grid required");
}

// t as an exact integer multiple of `step`, else reject
std::int64_t aligned_steps(double t, double step, const char* what) {
    const double ratio = t / step;
    const double r = std::round(ratio);
    if (std::abs(ratio - r) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw std::invalid_argument(what);
    return static_cast<std::int64_t>(r);
}

std::vector<double> grid_points(std::int64_t N, double h) {
    std::vector<double> x(static_cast<std::size_t>(N));
    for (std::int64_t j = 0; j < N; ++j)
        x[static_cast<std::size_t>(j)] = static_cast<double>(j - N / 2) * h;
    return x;
}
}  // namespace

GridModel build_grid(std::int64_t N, std::int64_t m_steps, std::int64_t k) {
    if (N < 2 || m_steps < 1 || k < 1) throw std::invalid_argument("N, m_steps, k must be positive");
    if (N % 2 != 0) throw std::invalid_argument("N must be even");
    if (N > (std::int64_t{1} << 26) || m_steps > N || k > N)
        throw std::invalid_argument("grid parameters out of range");
    GridModel g;
    g.N = N;
    g.m_steps = m_steps;
    g.k = k;
    g.h = std::sqrt(2.0 * kPi * static_cast<double>(k) /
                    (static_cast<double>(m_steps) * static_cast<double>(N)));
    g.tau = static_cast<double>(m_steps) * g.h;
    g.L = static_cast<double>(N) * g.h / 2.0;
    g.x = grid_points(N, g.h);
    const std::int64_t num = k * m_steps;
    const std::int64_t gg = std::gcd(num, N);
    g.flux_num = num / gg;
    g.flux_den = N / gg;
    return g;
}

GridModel build_truncated(std::int64_t N, double L, double tau) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("N must be even and positive");
    if (N > (std::int64_t{1} << 26)) throw std::invalid_argument("grid parameters out of range");
    if (!(L > 0.0) || !(tau > 0.0)) throw std::invalid_argument("L and tau must be positive");
    GridModel g;
    g.N = N;
    g.truncated = true;
    g.h = 2.0 * L / static_cast<double>(N);
    g.tau = tau;
    g.L = L;
    g.x = grid_points(N, g.h);
    return g;
}

CMatrix u_op(const GridModel& g, double t) {
    require_periodic(g);
    aligned_steps(t, g.tau, "t must be an integer multiple of tau");
    const std::size_t n = g.x.size();
    CMatrix u(n, n);
    for (std::size_t j = 0; j < n; ++j) u(j, j) = std::polar(1.0, t * g.x[j]);
    return u;
}

CMatrix v_op(const GridModel& g, double t) {
    require_periodic(g);
    const std::int64_t r = aligned_steps(t, g.h, "t must be an integer multiple of h");
    const std::int64_t N = g.N;
    const std::size_t n = g.x.size();
    CMatrix v(n, n);
    const std::int64_t shift = ((r % N) + N) % N;
    for (std::size_t j = 0; j < n; ++j)
        v(j, (j + static_cast<std::size_t>(shift)) % n) = 1.0;
    return v;
}

CMatrix q_tau(const GridModel& g) {
    require_periodic(g);
    const std::size_t n = g.x.size();
    CMatrix q(n, n);
    for (std::size_t j = 0; j < n; ++j) q(j, j) = std::sin(g.tau * g.x[j]) / g.tau;
    return q;
}

CMatrix p_tau(const GridModel& g) {
    require_periodic(g);
    CMatrix p = v_op(g, g.tau);
    p -= v_op(g, -g.tau);
    p *= cplx(0.0, -1.0) / (2.0 * g.tau);  // 1/(2 i tau)
    return p;
}

std::pair<CMatrix, CMatrix> cosine_pair(const GridModel& g) {
    require_periodic(g);
    CMatrix qc = u_op(g, g.tau);
    qc += u_op(g, -g.tau);
    qc *= 1.0 / (2.0 * g.tau);
    CMatrix pc = v_op(g, g.tau);
    pc += v_op(g, -g.tau);
    pc *= 1.0 / (2.0 * g.tau);
    return {std::move(qc), std::move(pc)};
}

CMatrix intertwiner(const GridModel& g) {
    require_periodic(g);
    if (g.N % (4 * g.k) != 0) throw std::invalid_argument("lambda not grid-aligned");
    if (g.N % (4 * g.m_steps) != 0)
        throw std::invalid_argument("lambda not wrap-consistent");
    const double lambda = kPi / (2.0 * g.tau);  // lambda / h = N / (4k)
    const std::size_t n = g.x.size();
    // R: j -> N - j mod N;  U_{-lambda} = diag(e^{-i lambda x_j});  V_lambda
    CMatrix w(n, n);
    const std::size_t shift = static_cast<std::size_t>(g.N / (4 * g.k));
    for (std::size_t j = 0; j < n; ++j) {
        // row of R picks component (N - j) mod N of U_{-lambda} V_lambda
        const std::size_t src = (n - j) % n;
        w(j, (src + shift) % n) = std::polar(1.0, -lambda * g.x[src]);
    }
    return w;
}

PotentialSpec PotentialSpec::harmonic(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("harmonic coefficient must be positive");
    PotentialSpec v;
    v.kind = Kind::harmonic;
    v.c = c;
    return v;
}

PotentialSpec PotentialSpec::quartic(double a, double b) {
    PotentialSpec v;
    v.kind = Kind::quartic;
    v.a = a;
    v.b = b;
    return v;
}

PotentialSpec PotentialSpec::tabulated(std::vector<double> values) {
    PotentialSpec v;
    v.kind = Kind::tabulated;
    v.values = std::move(values);
    return v;
}

double PotentialSpec::eval(double x) const {
    switch (kind) {
        case Kind::harmonic: return 0.5 * c * x * x;
        case Kind::quartic: return 0.5 * a * x * x + 0.25 * b * x * x * x * x;
        case Kind::tabulated: break;
    }
    throw std::invalid_argument("tabulated potential has no pointwise evaluator");
}

namespace {
// diagonal of v(Q_tau): v evaluated at the deformed positions sin(tau x_j)/tau
std::vector<double> potential_diagonal(const GridModel& g, const PotentialSpec& v) {
    const std::size_t n = g.x.size();
    if (v.kind == PotentialSpec::Kind::tabulated) {
        if (v.values.size() != n)
            throw std::invalid_argument("tabulated potential size must match grid");
        return v.values;
    }
    std::vector<double> d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = v.eval(std::sin(g.tau * g.x[j]) / g.tau);
    return d;
}

RMatrix hamiltonian_periodic(const GridModel& g, const PotentialSpec& v) {
    const std::size_t n = g.x.size();
    const std::size_t two_m = static_cast<std::size_t>(2 * g.m_steps) % n;
    const double kin = 1.0 / (8.0 * g.tau * g.tau);
    const auto vd = potential_diagonal(g, v);
    RMatrix hmat(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        hmat(j, j) += 2.0 * kin + vd[j];
        hmat(j, (j + two_m) % n) -= kin;        // -V_{2tau}
        hmat((j + two_m) % n, j) -= kin;        // -V_{-2tau}
    }
    return hmat;
}

RMatrix hamiltonian_truncated(const GridModel& g, const PotentialSpec& v) {
    const std::size_t n = g.x.size();
    const double h = g.h, tau = g.tau;
    // Dirichlet sine modes on the extended box [x_{-1}, x_N]; discrete
    // Laplacian eigenvalues lam_k = (2 - 2 cos(pi k/(N+1)))/h^2, k = 1..N
    std::vector<std::size_t> keep;
    std::vector<double> gdiag;
    for (std::size_t k = 1; k <= n; ++k) {
        const double lam =
            (2.0 - 2.0 * std::cos(kPi * static_cast<double>(k) / static_cast<double>(n + 1))) /
            (h * h);
        const double tp = tau * std::sqrt(lam);
        if (tp > kPi / 2.0) break;  // principal zone only
        keep.push_back(k);
        const double s = std::sin(tp);
        gdiag.push_back(s * s / (2.0 * tau * tau));
    }
    if (keep.empty()) throw std::invalid_argument("no modes below the momentum cutoff");

    const std::size_t dim = keep.size();
    const auto vd = potential_diagonal(g, v);
    const double norm = std::sqrt(2.0 / static_cast<double>(n + 1));
    RMatrix s(n, dim), t(n, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const double freq = kPi * static_cast<double>(keep[col]) / static_cast<double>(n + 1);
        for (std::size_t j = 0; j < n; ++j) {
            const double b = norm * std::sin(freq * static_cast<double>(j + 1));
            s(j, col) = b;
            t(j, col) = vd[j] * b;
        }
    }
    RMatrix hz = rmul(s, t, /*transpose_a=*/true);  // S^T diag(v) S
    for (std::size_t i = 0; i < dim; ++i) hz(i, i) += gdiag[i];
    return hz;
}
}  // namespace

RMatrix hamiltonian(const GridModel& g, const PotentialSpec& v) {
    return g.truncated ? hamiltonian_truncated(g, v) : hamiltonian_periodic(g, v);
}

AmReduction almost_mathieu_reduction(const GridModel& g, double c) {
    require_periodic(g);
    if (!(c > 0.0)) throw std::invalid_argument("harmonic coefficient must be positive");
    const std::size_t n = g.x.size();
    const std::size_t two_m = static_cast<std::size_t>(2 * g.m_steps) % n;
    AmReduction red;
    red.lambda_aff = -1.0 / (8.0 * g.tau * g.tau);
    red.mu = (1.0 + c) / (4.0 * g.tau * g.tau);
    red.m2 = RMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        red.m2(j, (j + two_m) % n) += 1.0;  // V_{2tau}
        red.m2((j + two_m) % n, j) += 1.0;  // V_{2tau}^*
        red.m2(j, j) += 2.0 * c * std::cos(2.0 * g.tau * g.x[j]);  // c(U + U^*)
    }
    return red;
}

}  // namespace dccr
