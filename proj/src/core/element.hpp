#pragma once
#include <complex>
#include <cstdint>
#include <map>
#include <string>

#include "core/theta.hpp"

namespace dccr {

using cplx = std::complex<double>;

struct GroupPoint {
    std::int64_t m = 0, n = 0;

    friend GroupPoint operator+(GroupPoint a, GroupPoint b) { return {a.m + b.m, a.n + b.n}; }
    friend GroupPoint operator-(GroupPoint a, GroupPoint b) { return {a.m - b.m, a.n - b.n}; }
    GroupPoint operator-() const { return {-m, -n}; }
    bool operator==(const GroupPoint&) const = default;
    // lexicographic; fixes map iteration and serialization order
    bool operator<(const GroupPoint& o) const { return m != o.m ? m < o.m : n < o.n; }
};

// coefficients with |c| below this are dropped after every operation
inline constexpr double kPruneTol = 1e-15;

// Finitely supported f: Z+Z -> C, an element of the twisted convolution
// algebra l1(G, omega) at a fixed flux theta.
class AlgebraElement {
public:
    explicit AlgebraElement(Theta theta) : theta_(theta) {}

    const Theta& theta() const { return theta_; }
    const std::map<GroupPoint, cplx>& coeffs() const { return coeffs_; }

    cplx at(GroupPoint x) const {
        auto it = coeffs_.find(x);
        return it == coeffs_.end() ? cplx(0.0) : it->second;
    }
    void set(GroupPoint x, cplx c) {
        if (std::abs(c) < kPruneTol)
            coeffs_.erase(x);
        else
            coeffs_[x] = c;
    }
    void add(GroupPoint x, cplx c) { set(x, at(x) + c); }

    std::size_t support_size() const { return coeffs_.size(); }
    double l1_norm() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(cplx s);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(cplx s, AlgebraElement a) { return a *= s; }

    // max |f(x) - g(x)| over the union of supports (theta ignored)
    double max_coeff_dev(const AlgebraElement& o) const;

private:
    Theta theta_;
    std::map<GroupPoint, cplx> coeffs_;
};

// bicharacter omega(x, y) = e^{i (x.n y.m - x.m y.n) theta / 2}
cplx omega(GroupPoint x, GroupPoint y, const Theta& theta);

// unit mass at x
AlgebraElement delta(GroupPoint x, const Theta& theta);

// d_x = delta_x + delta_{-x}; symmetric self-adjoint generator
AlgebraElement d_generator(GroupPoint x, const Theta& theta);

// twisted convolution f*g(x) = sum_y omega(y, x) f(y) g(x - y)
AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g);

// f^*(x) = conj(f(-x))
AlgebraElement involution(const AlgebraElement& f);

// coefficientwise invariance under x -> -x
bool is_symmetric(const AlgebraElement& f, double tol = 1e-14);

// integer 2x2 matrix with det = +-1; acts on G by (m,n) -> (am+bn, cm+dn)
struct Sl2zMatrix {
    std::int64_t a, b, c, d;
    Sl2zMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    std::int64_t det() const { return a * d - b * c; }
    GroupPoint apply(GroupPoint x) const { return {a * x.m + b * x.n, c * x.m + d * x.n}; }
};

// relabels coefficients along alpha: result(alpha(x)) = f(x)
AlgebraElement sl2z_act(const Sl2zMatrix& alpha, const AlgebraElement& f);

// {"theta": {"p":..,"q":..} | {"real":..}, "coeffs": [[m,n,re,im],...]},
// coefficients sorted lexicographically by (m, n)
std::string to_json(const AlgebraElement& f);
AlgebraElement element_from_json(const std::string& text);

}  // namespace dccr
