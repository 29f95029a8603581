#include "core/rep.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dccr {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

double wrap_phase(double phi) {
    phi = std::fmod(phi, kTwoPi);
    return phi < 0 ? phi + kTwoPi : phi;
}
}  // namespace

MatrixRep::MatrixRep(std::int64_t p, std::int64_t q, double phi1, double phi2)
    : p_(p), q_(q), phi1_(phi1), phi2_(phi2), theta_(Theta::rational(p, q)),
      u_(static_cast<std::size_t>(q), static_cast<std::size_t>(q)),
      v_(static_cast<std::size_t>(q), static_cast<std::size_t>(q)) {
    const double theta = theta_.radians();
    const std::size_t n = static_cast<std::size_t>(q);
    for (std::size_t j = 0; j < n; ++j) {
        u_(j, j) = std::polar(1.0, phi1_ + theta * static_cast<double>(j));
        v_(j, (j + 1) % n) = std::polar(1.0, phi2_);
    }
}

MatrixRep MatrixRep::clock_shift(std::int64_t p, std::int64_t q, double phi1, double phi2) {
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    p %= q;
    if (p < 0) p += q;
    if (std::gcd(p, q) != 1) throw std::invalid_argument("p and q must be coprime");
    return MatrixRep(p, q, wrap_phase(phi1), wrap_phase(phi2));
}

CMatrix MatrixRep::weyl(GroupPoint x) const {
    // one entry per row: W[j, (j+n) mod q] = e^{i(pi R / q + m phi1 + n phi2)},
    // R = (2 p m j + p m n) mod 2q  (exact integer phase bookkeeping)
    const std::size_t dim = static_cast<std::size_t>(q_);
    CMatrix w(dim, dim);
    const std::int64_t shift = ((x.n % q_) + q_) % q_;
    const __int128 mod = 2 * static_cast<__int128>(q_);
    const __int128 pm = static_cast<__int128>(p_) * x.m;
    for (std::size_t j = 0; j < dim; ++j) {
        __int128 r = (2 * pm * static_cast<std::int64_t>(j) + pm * x.n) % mod;
        if (r < 0) r += mod;
        const double ang = kPi * static_cast<double>(static_cast<std::int64_t>(r)) /
                               static_cast<double>(q_) +
                           static_cast<double>(x.m) * phi1_ + static_cast<double>(x.n) * phi2_;
        w(j, (j + static_cast<std::size_t>(shift)) % dim) = std::polar(1.0, ang);
    }
    return w;
}

CMatrix MatrixRep::d_op(GroupPoint x) const { return weyl(x) + weyl(-x); }

CMatrix MatrixRep::represent(const AlgebraElement& f) const {
    if (f.theta() != theta_) throw std::invalid_argument("theta mismatch");
    const std::size_t dim = static_cast<std::size_t>(q_);
    CMatrix m(dim, dim);
    for (const auto& [x, c] : f.coeffs()) {
        const CMatrix w = weyl(x);
        const std::size_t shift = static_cast<std::size_t>(((x.n % q_) + q_) % q_);
        for (std::size_t j = 0; j < dim; ++j) {
            const std::size_t k = (j + shift) % dim;
            m(j, k) += c * w(j, k);
        }
    }
    return m;
}

CMatrix MatrixRep::parity() const {
    if (!untwisted())
        throw std::invalid_argument("sigma not inner for twisted representation");
    const std::size_t dim = static_cast<std::size_t>(q_);
    CMatrix j(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) j(i, (dim - i) % dim) = 1.0;
    return j;
}

cplx normalized_trace(const CMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("square matrix required");
    cplx t = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t / static_cast<double>(m.rows());
}

}  // namespace dccr
