#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "core/theta.hpp"

namespace dccr {

// one dual-route identity check: the formula in `anchor` was evaluated along
// two independent code paths and compared
struct IdentityResult {
    std::string key;     // stable machine id, e.g. "algebra.product_rule"
    std::string anchor;  // the identity itself, in plain ascii
    double max_dev = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    std::uint64_t seed = 20260815;
    // deliberately swap the cocycle arguments in the expected side of the
    // product-rule checks; a live harness must go red under this
    bool corrupt_omega = false;
};

// l1-algebra identities at a fixed twist
std::vector<IdentityResult> verify_algebra(const Theta& theta, const VerifyOptions& opts);

// clock/shift representation identities at theta = 2*pi*p/q
std::vector<IdentityResult> verify_representation(long long p, long long q,
                                                  const VerifyOptions& opts);

// generating-function factorization and coefficient recovery
std::vector<IdentityResult> verify_generating(long long p, long long q, double s,
                                              double t, int cutoff,
                                              const VerifyOptions& opts);

// grid Weyl pairs, the quarter-period intertwiner, sine/cosine coordinate swap
std::vector<IdentityResult> verify_grid(long long n, long long m_steps, long long k);

// affine reduction of the grid Hamiltonian onto the doubled-step operator
std::vector<IdentityResult> verify_almost_mathieu(long long n, long long m_steps,
                                                  long long k, double c);

// everything above with fixed default parameters, sized to finish in seconds
std::vector<IdentityResult> run_verify(const VerifyOptions& opts);

bool all_pass(const std::vector<IdentityResult>& results);

}  // namespace dccr
