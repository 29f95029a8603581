#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

#include "core/element.hpp"
#include "core/matrix.hpp"
#include "core/rep.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace dccr;

namespace {

double dev(const CMatrix& a, const CMatrix& b) {
    CMatrix d = a;
    d -= b;
    return d.max_abs();
}

// brute-force e^{i m n theta/2} U^m V^n for cross-checking the monomial formula
CMatrix weyl_by_powers(const MatrixRep& rep, GroupPoint x) {
    const std::size_t q = static_cast<std::size_t>(rep.q());
    CMatrix acc = CMatrix::identity(q);
    const CMatrix u = x.m >= 0 ? rep.u() : rep.u().adjoint();
    for (std::int64_t i = 0; i < std::abs(x.m); ++i) acc = acc * u;
    const CMatrix v = x.n >= 0 ? rep.v() : rep.v().adjoint();
    for (std::int64_t i = 0; i < std::abs(x.n); ++i) acc = acc * v;
    acc *= rep.theta().half_phase(x.m * x.n);
    return acc;
}

}  // namespace

TEST_CASE("clock and shift satisfy the twisted commutation relation") {
    for (auto [p, q] : {std::pair<long long, long long>{1, 5}, {3, 7}, {21, 34}}) {
        const MatrixRep rep = MatrixRep::clock_shift(p, q);
        CMatrix lhs = rep.v() * rep.u();
        CMatrix rhs = rep.u() * rep.v();
        rhs *= rep.theta().half_phase(2);
        CHECK(dev(lhs, rhs) < 1e-14);
        // unitarity
        CHECK(dev(rep.u() * rep.u().adjoint(), CMatrix::identity(q)) < 1e-15);
        CHECK(dev(rep.v() * rep.v().adjoint(), CMatrix::identity(q)) < 1e-15);
    }
    // boundary phases preserve the relation
    const MatrixRep tw = MatrixRep::clock_shift(2, 9, 0.7, 1.9);
    CMatrix lhs = tw.v() * tw.u();
    CMatrix rhs = tw.u() * tw.v();
    rhs *= tw.theta().half_phase(2);
    CHECK(dev(lhs, rhs) < 1e-14);
}

TEST_CASE("constructor rejects degenerate parameters") {
    CHECK_THROWS_AS(MatrixRep::clock_shift(2, 4), std::invalid_argument);  // gcd 2
    CHECK_THROWS_AS(MatrixRep::clock_shift(1, 0), std::invalid_argument);
    CHECK_NOTHROW(MatrixRep::clock_shift(0, 1));   // flux 0 on the 1-point circle
    CHECK_NOTHROW(MatrixRep::clock_shift(-2, 5));  // normalized mod q
    CHECK(MatrixRep::clock_shift(-2, 5).p() == 3);
}

TEST_CASE("weyl matrices match the explicit monomial products") {
    SplitMix64 rng(17);
    for (long long q : {5LL, 13LL}) {
        const MatrixRep rep = MatrixRep::clock_shift(q == 5 ? 3 : 8, q);
        CHECK(dev(rep.weyl({1, 0}), rep.u()) < 1e-13);
        CHECK(dev(rep.weyl({0, 1}), rep.v()) < 1e-13);
        CHECK(dev(rep.weyl({0, 0}), CMatrix::identity(q)) == 0.0);
        for (int trial = 0; trial < 12; ++trial) {
            GroupPoint x{rng.uniform_int(-6, 6), rng.uniform_int(-6, 6)};
            CHECK(dev(rep.weyl(x), weyl_by_powers(rep, x)) < 1e-13);
        }
    }
}

TEST_CASE("weyl cocycle, adjoint, and trace orthogonality") {
    SplitMix64 rng(23);
    const MatrixRep rep = MatrixRep::clock_shift(21, 34);
    const Theta theta = rep.theta();
    for (int trial = 0; trial < 60; ++trial) {
        GroupPoint x{rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
        GroupPoint y{rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
        CMatrix rhs = rep.weyl(x + y);
        rhs *= omega(x, y, theta);
        CHECK(dev(rep.weyl(x) * rep.weyl(y), rhs) < 1e-13);
        // W_x^* = W_{-x} (up to rounding of the two phase reductions)
        CHECK(dev(rep.weyl(x).adjoint(), rep.weyl(-x)) < 1e-13);
        const double tr = std::abs(normalized_trace(rep.weyl(x)));
        if (x.m % 34 == 0 && x.n % 34 == 0)
            CHECK(std::abs(tr - 1.0) < 1e-13);
        else
            CHECK(tr < 1e-13);
    }
    // x = 0 mod q but x != 0: the trace is a pure phase
    CHECK(std::abs(std::abs(normalized_trace(rep.weyl({34, 0}))) - 1.0) < 1e-13);
}

TEST_CASE("d operators are hermitian contractions of norm at most 2") {
    SplitMix64 rng(31);
    for (long long q : {6LL, 34LL}) {
        const MatrixRep rep = MatrixRep::clock_shift(q == 6 ? 1 : 13, q);
        CHECK(dev(rep.d_op({0, 0}), 2.0 * CMatrix::identity(q)) == 0.0);
        for (int trial = 0; trial < 15; ++trial) {
            GroupPoint x{rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
            const CMatrix d = rep.d_op(x);
            CHECK(d.hermitian_defect() < 1e-14);
            CHECK(dev(rep.d_op(-x), d) == 0.0);
            CHECK(operator_norm(d) <= 2.0 + 1e-9);
        }
    }
}

TEST_CASE("represent is a *-homomorphism extending x -> W_x") {
    SplitMix64 rng(47);
    for (long long q : {5LL, 13LL, 34LL}) {
        const MatrixRep rep = MatrixRep::clock_shift(1, q);
        const Theta theta = rep.theta();
        for (int trial = 0; trial < 20; ++trial) {
            GroupPoint x{rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
            CHECK(dev(rep.represent(delta(x, theta)), rep.weyl(x)) == 0.0);
            CHECK(dev(rep.represent(d_generator(x, theta)), rep.d_op(x)) < 1e-15);
        }
        for (int trial = 0; trial < 25; ++trial) {
            AlgebraElement f(theta), g(theta);
            for (int i = 0; i < 6; ++i) {
                f.add({rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)},
                      {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
                g.add({rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)},
                      {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
            }
            CMatrix image = rep.represent(convolve(f, g));
            const double scale = std::max(image.max_abs(), 1e-30);
            CHECK(dev(rep.represent(f) * rep.represent(g), image) / scale < 1e-10);
            // involution maps to the matrix adjoint
            CHECK(dev(rep.represent(involution(f)), rep.represent(f).adjoint()) < 1e-14);
            // contractive: ||pi(f)|| <= ||f||_1
            CHECK(operator_norm(rep.represent(f)) <= f.l1_norm() + 1e-12);
        }
    }
}

TEST_CASE("parity conjugation flips the lattice sign") {
    SplitMix64 rng(53);
    const MatrixRep rep = MatrixRep::clock_shift(8, 13);
    const CMatrix j = rep.parity();
    CHECK(dev(j * j, CMatrix::identity(13)) == 0.0);
    CHECK(j.hermitian_defect() == 0.0);
    for (int trial = 0; trial < 30; ++trial) {
        GroupPoint x{rng.uniform_int(-8, 8), rng.uniform_int(-8, 8)};
        CHECK(dev(j * rep.weyl(x) * j.adjoint(), rep.weyl(-x)) < 1e-13);
    }
    // with boundary twists the parity symmetry is broken and the call refuses
    CHECK_THROWS_AS(MatrixRep::clock_shift(8, 13, 0.5, 0.0).parity(),
                    std::invalid_argument);
}

TEST_CASE("represent rejects elements at a different flux") {
    const MatrixRep rep = MatrixRep::clock_shift(1, 5);
    AlgebraElement f(Theta::rational(1, 7));
    f.add({1, 0}, 1.0);
    CHECK_THROWS_AS(rep.represent(f), std::invalid_argument);
}

TEST_CASE("matrix csv export is row-major with re,im pairs") {
    const MatrixRep rep = MatrixRep::clock_shift(1, 3);
    const std::string csv = matrix_to_csv(rep.weyl({0, 1}));
    // 3 rows, each with 3 entries of 2 numbers: 5 commas per row
    std::size_t lines = 0, pos = 0;
    while ((pos = csv.find('\n', pos)) != std::string::npos) {
        ++lines;
        ++pos;
    }
    CHECK(lines == 3);
    const std::string first = csv.substr(0, csv.find('\n'));
    CHECK(std::count(first.begin(), first.end(), ',') == 5);
}
