#include "core/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <stdexcept>

#include "core/element.hpp"
#include "core/generating.hpp"
#include "core/grid.hpp"
#include "core/matrix.hpp"
#include "core/rep.hpp"
#include "core/rng.hpp"

namespace dccr {

namespace {

IdentityResult make_result(std::string key, std::string anchor, double dev, double tol) {
    IdentityResult r;
    r.key = std::move(key);
    r.anchor = std::move(anchor);
    r.max_dev = dev;
    r.tol = tol;
    r.pass = dev <= tol;
    return r;
}

std::string theta_tag(const Theta& theta) {
    char buf[64];
    if (theta.is_rational())
        std::snprintf(buf, sizeof(buf), "%lld/%lld", static_cast<long long>(theta.p()),
                      static_cast<long long>(theta.q()));
    else
        std::snprintf(buf, sizeof(buf), "%.6g", theta.radians());
    return buf;
}

GroupPoint random_point(SplitMix64& rng, std::int64_t bound) {
    return {rng.uniform_int(-bound, bound), rng.uniform_int(-bound, bound)};
}

AlgebraElement random_element(SplitMix64& rng, const Theta& theta, int max_support,
                              std::int64_t bound) {
    AlgebraElement f(theta);
    const std::int64_t pts = rng.uniform_int(1, max_support);
    for (std::int64_t i = 0; i < pts; ++i)
        f.add(random_point(rng, bound), {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
    return f;
}

// random word in the standard generators; entries stay small for short words
Sl2zMatrix random_sl2z(SplitMix64& rng) {
    std::int64_t a = 1, b = 0, c = 0, d = 1;
    for (int step = 0; step < 6; ++step) {
        std::int64_t ga, gb, gc, gd;
        switch (rng.uniform_int(0, 3)) {
            case 0: ga = 0; gb = -1; gc = 1; gd = 0; break;   // rotation
            case 1: ga = 1; gb = 1; gc = 0; gd = 1; break;    // upper shear
            case 2: ga = 1; gb = -1; gc = 0; gd = 1; break;   // inverse shear
            default: ga = 1; gb = 0; gc = 1; gd = 1; break;   // lower shear
        }
        const std::int64_t na = a * ga + b * gc, nb = a * gb + b * gd;
        const std::int64_t nc = c * ga + d * gc, nd = c * gb + d * gd;
        a = na; b = nb; c = nc; d = nd;
    }
    return Sl2zMatrix{a, b, c, d};
}

double matrix_dev(const CMatrix& a, const CMatrix& b) {
    CMatrix d = a;
    d -= b;
    return d.max_abs();
}

// spectral calculus phi(u, X) for Hermitian X with ||X|| <= 2
CMatrix phi_matrix(double u, const CMatrix& x) {
    CEig e = eig_hermitian_vectors(x);
    CMatrix scaled = e.vectors;
    const int n = static_cast<int>(e.values.size());
    for (int j = 0; j < n; ++j) {
        const double lam = std::clamp(e.values[j], -2.0, 2.0);
        const cplx f = phi_scalar(u, lam);
        for (int i = 0; i < n; ++i) scaled(i, j) *= f;
    }
    return scaled * e.vectors.adjoint();
}

}  // namespace

std::vector<IdentityResult> verify_algebra(const Theta& theta, const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed ^ 0xa1ULL);
    const std::string tag = "@" + theta_tag(theta);
    std::vector<IdentityResult> out;

    double dev_assoc = 0.0, dev_inv = 0.0, dev_unit = 0.0, dev_submult = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        AlgebraElement f = random_element(rng, theta, 6, 8);
        AlgebraElement g = random_element(rng, theta, 6, 8);
        AlgebraElement h = random_element(rng, theta, 6, 8);
        AlgebraElement fg = convolve(f, g);
        dev_assoc = std::max(dev_assoc,
                             convolve(fg, h).max_coeff_dev(convolve(f, convolve(g, h))));
        dev_inv = std::max(dev_inv,
                           involution(fg).max_coeff_dev(convolve(involution(g), involution(f))));
        AlgebraElement unit = delta({0, 0}, theta);
        dev_unit = std::max(dev_unit, convolve(unit, f).max_coeff_dev(f));
        dev_unit = std::max(dev_unit, convolve(f, unit).max_coeff_dev(f));
        dev_submult = std::max(dev_submult, fg.l1_norm() - f.l1_norm() * g.l1_norm());
    }
    out.push_back(make_result("algebra.assoc" + tag, "(f*g)*h = f*(g*h)", dev_assoc, 1e-13));
    out.push_back(make_result("algebra.involution" + tag, "(f*g)* = g* * f*", dev_inv, 1e-13));
    out.push_back(make_result("algebra.unit" + tag, "delta_0 * f = f * delta_0 = f",
                              dev_unit, 1e-15));
    out.push_back(make_result("algebra.submult" + tag, "||f*g||_1 <= ||f||_1 ||g||_1",
                              std::max(dev_submult, 0.0), 1e-12));

    double dev_prod = 0.0, dev_comm = 0.0, dev_sym = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const GroupPoint x = random_point(rng, 8);
        const GroupPoint y = random_point(rng, 8);
        AlgebraElement dx = d_generator(x, theta);
        AlgebraElement dy = d_generator(y, theta);
        AlgebraElement lhs = convolve(dx, dy);

        // the corrupt hook swaps the cocycle arguments on the expected side
        const cplx w = opts.corrupt_omega ? omega(y, x, theta) : omega(x, y, theta);
        AlgebraElement rhs = d_generator(x + y, theta);
        rhs *= w;
        AlgebraElement rhs2 = d_generator(x - y, theta);
        rhs2 *= std::conj(w);
        rhs += rhs2;
        dev_prod = std::max(dev_prod, lhs.max_coeff_dev(rhs));

        AlgebraElement comm = lhs;
        comm -= convolve(dy, dx);
        std::int64_t sigma = x.n * y.m - x.m * y.n;
        if (opts.corrupt_omega) sigma = -sigma;
        AlgebraElement cr = d_generator(x + y, theta);
        cr -= d_generator(x - y, theta);
        cr *= cplx(0.0, 2.0 * theta.half_phase(sigma).imag());
        dev_comm = std::max(dev_comm, comm.max_coeff_dev(cr));

        dev_sym = std::max(dev_sym, involution(dx).max_coeff_dev(dx));
    }
    out.push_back(make_result("algebra.product_rule" + tag,
                              "d_x d_y = w(x,y) d_{x+y} + conj(w(x,y)) d_{x-y}",
                              dev_prod, 1e-13));
    out.push_back(make_result("algebra.commutator" + tag,
                              "d_x d_y - d_y d_x = 2i sin(s(x,y) theta/2) (d_{x+y} - d_{x-y})",
                              dev_comm, 1e-13));
    out.push_back(make_result("algebra.symmetry" + tag, "d_x* = d_x", dev_sym, 1e-15));

    double dev_auto = 0.0, dev_gen = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        const Sl2zMatrix alpha = random_sl2z(rng);
        AlgebraElement f = random_element(rng, theta, 5, 6);
        AlgebraElement g = random_element(rng, theta, 5, 6);
        dev_auto = std::max(dev_auto, sl2z_act(alpha, convolve(f, g))
                                          .max_coeff_dev(convolve(sl2z_act(alpha, f),
                                                                  sl2z_act(alpha, g))));
        const GroupPoint x = random_point(rng, 8);
        dev_gen = std::max(dev_gen, sl2z_act(alpha, d_generator(x, theta))
                                        .max_coeff_dev(d_generator(alpha.apply(x), theta)));
    }
    out.push_back(make_result("algebra.sl2z_product" + tag,
                              "alpha(f*g) = alpha(f) * alpha(g)", dev_auto, 1e-13));
    out.push_back(make_result("algebra.sl2z_generator" + tag, "alpha(d_x) = d_{alpha x}",
                              dev_gen, 1e-15));

    double dev_json = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        AlgebraElement f = random_element(rng, theta, 6, 8);
        dev_json = std::max(dev_json, element_from_json(to_json(f)).max_coeff_dev(f));
    }
    out.push_back(make_result("algebra.json_roundtrip" + tag,
                              "from_json(to_json(f)) = f", dev_json, 0.0));
    return out;
}

std::vector<IdentityResult> verify_representation(long long p, long long q,
                                                  const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed ^ 0xb2ULL);
    char tagbuf[32];
    std::snprintf(tagbuf, sizeof(tagbuf), "@q=%lld", q);
    const std::string tag = tagbuf;
    std::vector<IdentityResult> out;

    const MatrixRep rep = MatrixRep::clock_shift(p, q);
    const Theta theta = rep.theta();

    {
        const MatrixRep twisted = MatrixRep::clock_shift(p, q, rng.uniform(0.0, 6.28),
                                                         rng.uniform(0.0, 6.28));
        CMatrix lhs = twisted.v() * twisted.u();
        CMatrix rhs = twisted.u() * twisted.v();
        rhs *= theta.half_phase(2);  // e^{i theta}
        out.push_back(make_result("rep.ccr" + tag, "v u = e^{i theta} u v",
                                  matrix_dev(lhs, rhs), 1e-12));
    }

    double dev_weyl = 0.0, dev_parity = 0.0, dev_trace = 0.0, dev_dop = 0.0;
    const CMatrix j = rep.parity();
    const CMatrix jadj = j.adjoint();
    for (int trial = 0; trial < 40; ++trial) {
        const GroupPoint x = random_point(rng, 8);
        const GroupPoint y = random_point(rng, 8);
        CMatrix wx = rep.weyl(x);

        const cplx w = opts.corrupt_omega ? omega(y, x, theta) : omega(x, y, theta);
        CMatrix rhs = rep.weyl(x + y);
        rhs *= w;
        dev_weyl = std::max(dev_weyl, matrix_dev(wx * rep.weyl(y), rhs));

        dev_parity = std::max(dev_parity, matrix_dev(j * wx * jadj, rep.weyl(-x)));

        const double tr = std::abs(normalized_trace(wx));
        const bool lattice_zero = (x.m % q == 0) && (x.n % q == 0);
        dev_trace = std::max(dev_trace, lattice_zero ? std::abs(tr - 1.0) : tr);

        dev_dop = std::max(dev_dop,
                           matrix_dev(rep.d_op(x), rep.represent(d_generator(x, theta))));
    }
    out.push_back(make_result("rep.weyl_product" + tag, "w_x w_y = w(x,y) w_{x+y}",
                              dev_weyl, 1e-12));
    out.push_back(make_result("rep.parity" + tag, "j w_x j* = w_{-x}", dev_parity, 1e-12));
    out.push_back(make_result("rep.trace" + tag, "tr(w_x)/q = [x = 0 mod q]",
                              dev_trace, 1e-12));
    out.push_back(make_result("rep.d_op" + tag, "pi(d_x) = w_x + w_{-x}", dev_dop, 1e-13));

    double dev_hom = 0.0;
    for (int trial = 0; trial < 15; ++trial) {
        AlgebraElement f = random_element(rng, theta, 8, 8);
        AlgebraElement g = random_element(rng, theta, 8, 8);
        CMatrix prod = rep.represent(f) * rep.represent(g);
        CMatrix image = rep.represent(convolve(f, g));
        const double scale = std::max(image.max_abs(), 1e-30);
        dev_hom = std::max(dev_hom, matrix_dev(prod, image) / scale);
    }
    out.push_back(make_result("rep.homomorphism" + tag, "pi(f) pi(g) = pi(f*g)",
                              dev_hom, 1e-10));
    return out;
}

std::vector<IdentityResult> verify_generating(long long p, long long q, double s, double t,
                                              int cutoff, const VerifyOptions& opts) {
    SplitMix64 rng(opts.seed ^ 0xc3ULL);
    std::vector<IdentityResult> out;
    const Theta theta = Theta::rational(p, q);
    const MatrixRep rep = MatrixRep::clock_shift(p, q);

    const GeneratingSum sum = generating_sum(s, t, theta, cutoff);
    {
        CMatrix uu = rep.u();
        uu += rep.u().adjoint();
        CMatrix vv = rep.v();
        vv += rep.v().adjoint();
        CMatrix rhs = phi_matrix(s, uu) * phi_matrix(t, vv);
        rhs *= cplx(2.0, 0.0);
        CMatrix diff = rep.represent(sum.element);
        diff -= rhs;
        out.push_back(make_result(
            "gen.factorization",
            "sum s^|m| t^|n| e^{-i m n theta/2} d_{mn} = 2 phi(s,u+u*) phi(t,v+v*)",
            operator_norm(diff), sum.tail_bound + 1e-10));
    }
    {
        const GeneratingSum finer = generating_sum(s, t, theta, cutoff + 30);
        const double dev = (finer.element - sum.element).l1_norm();
        out.push_back(make_result("gen.tail", "l1 tail of the generating sum <= certified bound",
                                  dev, sum.tail_bound));
    }
    {
        double dev = 0.0;
        int done = 0, attempts = 0;
        while (done < 15 && attempts < 1000) {
            ++attempts;
            const std::int64_t m = rng.uniform_int(-6, 6);
            const std::int64_t n = rng.uniform_int(-6, 6);
            if (m == 0 || n == 0) continue;
            if (std::abs(theta.half_phase(2 * m * n).imag()) <= 1e-6) continue;  // resonant
            const AlgebraElement a = coefficient_A(m, n, theta);
            const AlgebraElement astar = involution(a);
            const AlgebraElement rec = recover_generator(m, n, a, astar, theta);
            dev = std::max(dev, rec.max_coeff_dev(d_generator({m, n}, theta)));
            ++done;
        }
        out.push_back(make_result("gen.recovery", "recover(A_x, A_x*) = d_x", dev, 1e-12));
    }
    return out;
}

std::vector<IdentityResult> verify_grid(long long n, long long m_steps, long long k) {
    std::vector<IdentityResult> out;
    const GridModel g = build_grid(n, m_steps, k);
    const double tau = g.tau;

    {
        const double s = tau, t = 5.0 * g.h;
        CMatrix lhs = v_op(g, t) * u_op(g, s);
        CMatrix rhs = u_op(g, s) * v_op(g, t);
        rhs *= std::polar(1.0, s * t);
        out.push_back(make_result("grid.weyl_pair", "v_t u_s = e^{i s t} u_s v_t",
                                  matrix_dev(lhs, rhs), 1e-12));
    }

    const CMatrix w = intertwiner(g);
    const CMatrix wadj = w.adjoint();
    out.push_back(make_result("grid.unitary", "w* w = 1",
                              matrix_dev(wadj * w, CMatrix::identity(static_cast<int>(n))),
                              1e-12));
    {
        CMatrix rhs = u_op(g, -tau);
        rhs *= cplx(0.0, 1.0);  // e^{i lambda tau} = i at lambda = pi/(2 tau)
        out.push_back(make_result("grid.conj_u", "w u_tau w* = e^{i lambda tau} u_{-tau}",
                                  matrix_dev(w * u_op(g, tau) * wadj, rhs), 1e-10));
    }
    {
        CMatrix rhs = v_op(g, -tau);
        rhs *= cplx(0.0, 1.0);
        out.push_back(make_result("grid.conj_v", "w v_tau w* = e^{i lambda tau} v_{-tau}",
                                  matrix_dev(w * v_op(g, tau) * wadj, rhs), 1e-10));
    }
    const auto [cos_q, cos_p] = cosine_pair(g);
    out.push_back(make_result("grid.conj_coord", "w q_tau w* = (u_tau + u_{-tau})/(2 tau)",
                              matrix_dev(w * q_tau(g) * wadj, cos_q), 1e-10));
    out.push_back(make_result("grid.conj_mom", "w p_tau w* = (v_tau + v_{-tau})/(2 tau)",
                              matrix_dev(w * p_tau(g) * wadj, cos_p), 1e-10));
    {
        // dual route: LAPACK spectrum of the sine coordinate against the
        // analytic diagonal of its cosine partner
        std::vector<double> sine_spec = eig_hermitian_values(q_tau(g));
        std::vector<double> cos_diag(g.x.size());
        for (std::size_t i = 0; i < g.x.size(); ++i)
            cos_diag[i] = std::cos(tau * g.x[i]) / tau;
        std::sort(cos_diag.begin(), cos_diag.end());
        double dev = 0.0;
        for (std::size_t i = 0; i < cos_diag.size(); ++i)
            dev = std::max(dev, std::abs(sine_spec[i] - cos_diag[i]));
        out.push_back(make_result("grid.spectral_match",
                                  "spec(sine coordinate) = spec(cosine coordinate)", dev,
                                  1e-10));
    }
    return out;
}

std::vector<IdentityResult> verify_almost_mathieu(long long n, long long m_steps, long long k,
                                                  double c) {
    std::vector<IdentityResult> out;
    const GridModel g = build_grid(n, m_steps, k);
    const RMatrix h = hamiltonian(g, PotentialSpec::harmonic(c));
    const AmReduction red = almost_mathieu_reduction(g, c);

    {
        // entrywise rebuild: h = mu I + lambda m2
        double dev = 0.0;
        const int dim = static_cast<int>(n);
        for (int col = 0; col < dim; ++col)
            for (int row = 0; row < dim; ++row) {
                const double expected =
                    red.lambda_aff * red.m2(row, col) + (row == col ? red.mu : 0.0);
                dev = std::max(dev, std::abs(h(row, col) - expected));
            }
        out.push_back(make_result("am.rebuild", "h_tau = mu + lambda m2 (entrywise)", dev,
                                  1e-12 * std::max(1.0, red.mu)));
    }
    {
        std::vector<double> eh = eig_symmetric_values(h);
        std::vector<double> em = eig_symmetric_values(red.m2);
        // lambda < 0 reverses the order of the mapped spectrum
        double dev = 0.0;
        const std::size_t dim = eh.size();
        for (std::size_t i = 0; i < dim; ++i) {
            const double mapped = red.mu + red.lambda_aff * em[dim - 1 - i];
            dev = std::max(dev, std::abs(eh[i] - mapped));
        }
        const double scale = std::max(std::abs(eh.front()), std::abs(eh.back()));
        out.push_back(make_result("am.spectrum", "spec(h_tau) = mu + lambda spec(m2)", dev,
                                  1e-9 * std::max(scale, 1.0)));
    }
    {
        const double step = 2.0 * g.tau;
        CMatrix lhs = v_op(g, step) * u_op(g, step);
        CMatrix rhs = u_op(g, step) * v_op(g, step);
        rhs *= std::polar(1.0, step * step);
        out.push_back(make_result("am.ccr", "v_2tau u_2tau = e^{i 4 tau^2} u_2tau v_2tau",
                                  matrix_dev(lhs, rhs), 1e-12));
    }
    return out;
}

std::vector<IdentityResult> run_verify(const VerifyOptions& opts) {
    std::vector<IdentityResult> all;
    auto append = [&all](std::vector<IdentityResult> part) {
        for (auto& r : part) all.push_back(std::move(r));
    };
    append(verify_algebra(Theta::rational(3, 7), opts));
    append(verify_algebra(Theta::real(0.8472), opts));
    append(verify_representation(1, 5, opts));
    append(verify_representation(3, 13, opts));
    append(verify_representation(21, 34, opts));
    append(verify_generating(1, 13, 0.4, 0.4, 40, opts));
    append(verify_grid(256, 4, 1));
    append(verify_almost_mathieu(256, 4, 1, 1.0));
    return all;
}

bool all_pass(const std::vector<IdentityResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

}  // namespace dccr
