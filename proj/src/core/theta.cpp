#include "core/theta.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dccr {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Theta Theta::rational(std::int64_t p, std::int64_t q) {
    if (q <= 0) throw std::invalid_argument("theta denominator must be positive");
    // reduce and normalize to 0 <= p < q
    p %= q;
    if (p < 0) p += q;
    const std::int64_t g = std::gcd(p, q);
    Theta t;
    t.rational_ = true;
    t.p_ = p / g;
    t.q_ = q / g;
    t.value_ = 2.0 * kPi * static_cast<double>(t.p_) / static_cast<double>(t.q_);
    return t;
}

Theta Theta::real(double radians) {
    if (!std::isfinite(radians)) throw std::invalid_argument("theta must be finite");
    Theta t;
    t.rational_ = false;
    t.value_ = radians;
    return t;
}

std::int64_t Theta::p() const {
    if (!rational_) throw std::invalid_argument("theta is not rational");
    return p_;
}

std::int64_t Theta::q() const {
    if (!rational_) throw std::invalid_argument("theta is not rational");
    return q_;
}

double Theta::radians() const { return value_; }

std::complex<double> Theta::half_phase(std::int64_t s) const {
    if (!rational_) return std::polar(1.0, 0.5 * value_ * static_cast<double>(s));
    // s * theta/2 = pi * (s*p) / q; reduce s*p mod 2q exactly
    const __int128 sp = static_cast<__int128>(s) * p_;
    const __int128 mod = 2 * static_cast<__int128>(q_);
    std::int64_t r = static_cast<std::int64_t>(sp % mod);
    if (r < 0) r += static_cast<std::int64_t>(mod);
    return std::polar(1.0, kPi * static_cast<double>(r) / static_cast<double>(q_));
}

bool Theta::operator==(const Theta& o) const {
    if (rational_ != o.rational_) return false;
    if (rational_) return p_ == o.p_ && q_ == o.q_;
    return value_ == o.value_;
}

}  // namespace dccr
