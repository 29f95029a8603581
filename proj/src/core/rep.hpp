#pragma once
#include "core/element.hpp"
#include "core/matrix.hpp"

namespace dccr {

// Finite clock/shift realization of U, V with VU = e^{i theta} UV at
// theta = 2 pi p / q, with boundary twist phases:
//   U = e^{i phi1} diag(e^{i theta j}),  (V f)(j) = e^{i phi2} f(j+1 mod q).
class MatrixRep {
public:
    static MatrixRep clock_shift(std::int64_t p, std::int64_t q, double phi1 = 0.0,
                                 double phi2 = 0.0);

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }
    double phi1() const { return phi1_; }
    double phi2() const { return phi2_; }
    Theta theta() const { return theta_; }
    bool untwisted() const { return phi1_ == 0.0 && phi2_ == 0.0; }

    const CMatrix& u() const { return u_; }
    const CMatrix& v() const { return v_; }

    // W_{(m,n)} = e^{i m n theta/2} U^m V^n; assembled as a monomial matrix,
    // one unit-modulus entry per row
    CMatrix weyl(GroupPoint x) const;

    // D_x = W_x + W_{-x}, Hermitian with norm <= 2
    CMatrix d_op(GroupPoint x) const;

    // pi(f) = sum_x f(x) W_x; contractive *-homomorphism on l1(G, omega)
    CMatrix represent(const AlgebraElement& f) const;

    // J: e_j -> e_{-j mod q}; conjugation realizes W_x -> W_{-x}.
    // Only inner for the untwisted member of the family.
    CMatrix parity() const;

private:
    MatrixRep(std::int64_t p, std::int64_t q, double phi1, double phi2);
    std::int64_t p_, q_;
    double phi1_, phi2_;
    Theta theta_;
    CMatrix u_, v_;
};

// tr(M)/dim
cplx normalized_trace(const CMatrix& m);

}  // namespace dccr
