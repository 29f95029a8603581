#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "core/generating.hpp"
#include "core/matrix.hpp"
#include "core/rep.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace dccr;

TEST_CASE("phi closed forms and input guards") {
    // phi(u, 2) = (1-u^2)/(1-u)^2 = (1+u)/(1-u)
    CHECK(phi_scalar(0.5, 2.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(phi_scalar(0.5, -2.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(phi_scalar(0.0, 1.3) == 1.0);
    // geometric cross-check: phi(u, 2cos a) = sum_m u^|m| e^{i m a}
    const double u = 0.37, a = 1.1;
    cplx direct = 1.0;
    for (int m = 1; m <= 200; ++m)
        direct += std::pow(u, m) * 2.0 * std::cos(m * a);
    CHECK(phi_scalar(u, 2.0 * std::cos(a)) ==
          doctest::Approx(direct.real()).epsilon(1e-13));
    CHECK_THROWS_AS(phi_scalar(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(phi_scalar(0.5, 2.5), std::invalid_argument);
}

TEST_CASE("generating sum carries coefficient 2 s^|m| t^|n| e^{-imn theta/2}") {
    const Theta theta = Theta::rational(2, 7);
    const double s = 0.5, t = 0.3;
    const GeneratingSum g = generating_sum(s, t, theta, 12);
    // interior point
    for (const GroupPoint x : {GroupPoint{2, 3}, GroupPoint{-1, 4}, GroupPoint{5, -5}}) {
        const cplx expect = 2.0 * std::pow(s, std::abs(x.m)) * std::pow(t, std::abs(x.n)) *
                            theta.half_phase(-x.m * x.n);
        CHECK(std::abs(g.element.at(x) - expect) < 1e-15);
    }
    // boundary collection: along the axes the phase is trivial and the
    // collected weight is 2 (one d per lattice site), not 4
    CHECK(std::abs(g.element.at({0, 5}) - cplx(2.0 * std::pow(t, 5), 0.0)) < 1e-15);
    CHECK(std::abs(g.element.at({4, 0}) - cplx(2.0 * std::pow(s, 4), 0.0)) < 1e-15);
    CHECK(std::abs(g.element.at({0, 0}) - cplx(2.0, 0.0)) < 1e-15);
    // square truncation: nothing outside |m|,|n| <= cutoff
    CHECK(g.element.at({13, 0}) == cplx(0.0));
    CHECK(g.tail_bound > 0.0);

    CHECK_THROWS_AS(generating_sum(1.0, 0.5, theta, 10), std::invalid_argument);
    CHECK_THROWS_AS(generating_sum(0.5, -1.2, theta, 10), std::invalid_argument);
    CHECK_THROWS_AS(generating_sum(0.5, 0.5, theta, 0), std::invalid_argument);
}

TEST_CASE("certified tail bound dominates the actual remainder") {
    const Theta theta = Theta::rational(1, 89);
    const double s = 0.5, t = 0.5;
    const GeneratingSum coarse = generating_sum(s, t, theta, 20);
    const GeneratingSum fine = generating_sum(s, t, theta, 60);
    const double remainder = (fine.element - coarse.element).l1_norm();
    CHECK(remainder <= coarse.tail_bound);
    // and the bound is not wildly loose (geometric tails at s = t = 1/2)
    CHECK(coarse.tail_bound < 64.0 * remainder);
    // bound shrinks geometrically with the cutoff
    CHECK(fine.tail_bound < 1e-9 * coarse.tail_bound);
}

TEST_CASE("factorization against the spectral resolvent formula") {
    const long long p = 1, q = 13;
    const Theta theta = Theta::rational(p, q);
    const MatrixRep rep = MatrixRep::clock_shift(p, q);
    const double s = 0.4, t = 0.4;
    const GeneratingSum g = generating_sum(s, t, theta, 40);

    CMatrix uu = rep.d_op({1, 0});  // u + u*
    CMatrix vv = rep.d_op({0, 1});  // v + v*
    CEig eu = eig_hermitian_vectors(uu);
    CEig ev = eig_hermitian_vectors(vv);
    auto assemble = [](const CEig& e, double r) {
        CMatrix scaled = e.vectors;
        for (std::size_t j = 0; j < e.values.size(); ++j) {
            const double lam = std::clamp(e.values[j], -2.0, 2.0);
            for (std::size_t i = 0; i < e.values.size(); ++i)
                scaled(i, j) *= phi_scalar(r, lam);
        }
        return scaled * e.vectors.adjoint();
    };
    CMatrix rhs = assemble(eu, s) * assemble(ev, t);
    rhs *= cplx(2.0, 0.0);
    CMatrix diff = rep.represent(g.element);
    diff -= rhs;
    CHECK(operator_norm(diff) <= g.tail_bound + 1e-12);
}

TEST_CASE("coefficient extraction pairs the two matched generators") {
    const Theta theta = Theta::rational(1, 5);
    const std::int64_t p = 1, q = 2;
    const AlgebraElement a = coefficient_A(p, q, theta);
    const cplx fwd = 2.0 * theta.half_phase(-p * q);
    const cplx bwd = 2.0 * theta.half_phase(p * q);
    CHECK(std::abs(a.at({1, 2}) - fwd) < 1e-15);
    CHECK(std::abs(a.at({-1, -2}) - fwd) < 1e-15);
    CHECK(std::abs(a.at({-1, 2}) - bwd) < 1e-15);
    CHECK(std::abs(a.at({1, -2}) - bwd) < 1e-15);
    CHECK(a.support_size() == 4);
    // axis case: the two d's coincide and the literal formula collects to 4d
    const AlgebraElement axis = coefficient_A(0, 3, theta);
    CHECK(std::abs(axis.at({0, 3}) - cplx(4.0, 0.0)) < 1e-15);
}

TEST_CASE("recovery inverts the coefficient map off resonance") {
    SplitMix64 rng(2026);
    for (const Theta& theta : {Theta::rational(2, 89), Theta::real(1.1371)}) {
        int done = 0;
        while (done < 25) {
            const std::int64_t m = rng.uniform_int(-8, 8);
            const std::int64_t n = rng.uniform_int(-8, 8);
            if (m == 0 || n == 0) continue;
            if (std::abs(theta.half_phase(2 * m * n).imag()) <= 1e-6) continue;
            const AlgebraElement a = coefficient_A(m, n, theta);
            const AlgebraElement rec = recover_generator(m, n, a, involution(a), theta);
            CHECK(rec.max_coeff_dev(d_generator({m, n}, theta)) < 1e-12);
            ++done;
        }
    }
}

TEST_CASE("recovery rejects resonant and degenerate phases") {
    const Theta theta = Theta::rational(1, 5);
    // p q theta = 2 pi: sin vanishes, the 2x2 system is singular
    const AlgebraElement a = coefficient_A(1, 5, theta);
    CHECK_THROWS_WITH_AS(recover_generator(1, 5, a, involution(a), theta),
                         doctest::Contains("resonant"), std::invalid_argument);
    const AlgebraElement axis = coefficient_A(0, 2, theta);
    CHECK_THROWS_AS(recover_generator(0, 2, axis, involution(axis), theta),
                    std::invalid_argument);
}
