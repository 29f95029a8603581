#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "core/matrix.hpp"

namespace dccr {

// Periodic N-point model of the line carrying the unitary groups
//   U_t = diag(e^{i t x_j}),   (V_t f)(j) = f(j + t/h mod N),
// with x_j = (j - N/2) h. The spacing h = sqrt(2 pi k / (m_steps N)) makes
// tau N h = 2 pi k (tau = m_steps h), so the Weyl relation
// V_t U_s = e^{i s t} U_s V_t holds exactly on the grid for s in tau Z,
// at effective flux theta_eff = tau^2 = 2 pi k m_steps / N.
//
// The truncated variant (Dirichlet ends, no wrap) exists only for
// continuum-limit studies via hamiltonian(); the algebraic identities above
// hold only in the periodic model.
struct GridModel {
    std::int64_t N = 0;
    std::int64_t m_steps = 0;  // tau = m_steps h (periodic mode)
    std::int64_t k = 0;        // tau N h = 2 pi k (periodic mode)
    double h = 0.0;
    double tau = 0.0;
    double L = 0.0;  // half-width, N h / 2
    bool truncated = false;
    std::vector<double> x;             // grid points
    std::int64_t flux_num = 0, flux_den = 1;  // theta_eff = 2 pi flux_num / flux_den
};

GridModel build_grid(std::int64_t N, std::int64_t m_steps, std::int64_t k);
GridModel build_truncated(std::int64_t N, double L, double tau);

// t must be an integer multiple of tau (exact phase periodicity needs
// e^{i t N h} = 1, guaranteed only on tau Z)
CMatrix u_op(const GridModel& g, double t);
// t must be an integer multiple of h (any grid-aligned shift is fine)
CMatrix v_op(const GridModel& g, double t);

// Q_tau = (U_tau - U_{-tau})/(2 i tau) = diag(sin(tau x_j)/tau)
CMatrix q_tau(const GridModel& g);
// P_tau = (V_tau - V_{-tau})/(2 i tau)
CMatrix p_tau(const GridModel& g);
// cosine partners: ((U_tau + U_{-tau})/(2 tau), (V_tau + V_{-tau})/(2 tau))
std::pair<CMatrix, CMatrix> cosine_pair(const GridModel& g);

// W = R U_{-lambda} V_lambda, lambda = pi/(2 tau); conjugates the sine pair
// into the cosine pair. Needs 4k | N (lambda is a whole number of grid steps)
// and 4 m_steps | N (wraparound consistency of the U_{-lambda} factor).
CMatrix intertwiner(const GridModel& g);

struct PotentialSpec {
    enum class Kind { harmonic, quartic, tabulated };
    Kind kind = Kind::harmonic;
    double c = 1.0;           // harmonic: v(x) = c x^2 / 2
    double a = 0.0, b = 0.0;  // quartic: v(x) = a x^2/2 + b x^4/4
    std::vector<double> values;  // tabulated: precomputed diagonal v(Q_tau)_jj

    static PotentialSpec harmonic(double c);
    static PotentialSpec quartic(double a, double b);
    static PotentialSpec tabulated(std::vector<double> values);
    double eval(double x) const;  // throws for tabulated
};

// H_tau = 1/2 P_tau^2 + v(Q_tau).
// Periodic: (2 I - V_{2tau} - V_{-2tau})/(8 tau^2) + diag v(sin(tau x_j)/tau),
// a real symmetric N x N matrix.
// Truncated: spectral Galerkin in the Dirichlet sine basis restricted to the
// principal momentum zone tau * sqrt(lam_k) <= pi/2 (where sin(tau p)/tau is a
// bijective function of p); without the cutoff, modes near the higher zeros of
// sin(tau p) carry spuriously small kinetic energy and the low spectrum never
// converges. Returns the zone-dimensional matrix.
RMatrix hamiltonian(const GridModel& g, const PotentialSpec& v);

struct AmReduction {
    RMatrix m2;         // V_{2tau} + V_{2tau}^* + c (U_{2tau} + U_{2tau}^*)
    double lambda_aff;  // -1/(8 tau^2)
    double mu;          // (1+c)/(4 tau^2)
};

// exact affine identity hamiltonian(g, harmonic(c)) = mu I + lambda_aff M2,
// where (U_{2tau}, V_{2tau}) satisfy V U = e^{i 4 tau^2} U V
AmReduction almost_mathieu_reduction(const GridModel& g, double c);

}  // namespace dccr
