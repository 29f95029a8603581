#pragma once
#include <complex>
#include <cstdint>

namespace dccr {

// Flux angle for the twisted algebra. Rational(p, q) means theta = 2*pi*p/q,
// stored reduced with 0 <= p < q; Real holds an arbitrary angle in radians.
// Rational phases e^{i*s*theta/2} are evaluated by exact integer reduction of
// the exponent mod 2q followed by a single trig call, so long products do not
// accumulate phase error.
class Theta {
public:
    static Theta rational(std::int64_t p, std::int64_t q);
    static Theta real(double radians);

    bool is_rational() const { return rational_; }
    std::int64_t p() const;  // rational only
    std::int64_t q() const;  // rational only
    double radians() const;  // 2*pi*p/q, or the stored real value

    // e^{i * s * theta / 2} for integer s
    std::complex<double> half_phase(std::int64_t s) const;

    bool operator==(const Theta& o) const;
    bool operator!=(const Theta& o) const { return !(*this == o); }

private:
    Theta() = default;
    bool rational_ = false;
    std::int64_t p_ = 0, q_ = 1;
    double value_ = 0.0;
};

}  // namespace dccr
