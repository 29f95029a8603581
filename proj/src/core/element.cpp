#include "core/element.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace dccr {

double AlgebraElement::l1_norm() const {
    double s = 0.0;
    for (const auto& [x, c] : coeffs_) s += std::abs(c);
    return s;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (theta_ != o.theta_) throw std::invalid_argument("theta mismatch");
    for (const auto& [x, c] : o.coeffs_) add(x, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    if (theta_ != o.theta_) throw std::invalid_argument("theta mismatch");
    for (const auto& [x, c] : o.coeffs_) add(x, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(cplx s) {
    if (std::abs(s) < kPruneTol) {
        coeffs_.clear();
        return *this;
    }
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        it->second *= s;
        it = std::abs(it->second) < kPruneTol ? coeffs_.erase(it) : std::next(it);
    }
    return *this;
}

double AlgebraElement::max_coeff_dev(const AlgebraElement& o) const {
    double dev = 0.0;
    for (const auto& [x, c] : coeffs_) dev = std::max(dev, std::abs(c - o.at(x)));
    for (const auto& [x, c] : o.coeffs_) dev = std::max(dev, std::abs(at(x) - c));
    return dev;
}

cplx omega(GroupPoint x, GroupPoint y, const Theta& theta) {
    // exponent (np - mq) for x = (m, n), y = (p, q)
    return theta.half_phase(x.n * y.m - x.m * y.n);
}

AlgebraElement delta(GroupPoint x, const Theta& theta) {
    AlgebraElement f(theta);
    f.set(x, 1.0);
    return f;
}

AlgebraElement d_generator(GroupPoint x, const Theta& theta) {
    AlgebraElement f(theta);
    f.add(x, 1.0);
    f.add(-x, 1.0);  // x = 0 collapses to 2 delta_0
    return f;
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
    if (f.theta() != g.theta()) throw std::invalid_argument("theta mismatch");
    // f*g(x) = sum_y omega(y, x) f(y) g(x-y); with z = x - y the cocycle
    // collapses to omega(y, z), so accumulate over support pairs directly.
    AlgebraElement out(f.theta());
    for (const auto& [y, fy] : f.coeffs())
        for (const auto& [z, gz] : g.coeffs())
            out.add(y + z, omega(y, z, f.theta()) * fy * gz);
    return out;
}

AlgebraElement involution(const AlgebraElement& f) {
    AlgebraElement out(f.theta());
    for (const auto& [x, c] : f.coeffs()) out.set(-x, std::conj(c));
    return out;
}

bool is_symmetric(const AlgebraElement& f, double tol) {
    for (const auto& [x, c] : f.coeffs())
        if (std::abs(c - f.at(-x)) > tol) return false;
    return true;
}

Sl2zMatrix::Sl2zMatrix(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a(a), b(b), c(c), d(d) {
    const std::int64_t det = a * d - b * c;
    if (det != 1 && det != -1) throw std::invalid_argument("matrix is not unimodular");
}

AlgebraElement sl2z_act(const Sl2zMatrix& alpha, const AlgebraElement& f) {
    AlgebraElement out(f.theta());
    for (const auto& [x, c] : f.coeffs()) out.set(alpha.apply(x), c);
    return out;
}

std::string to_json(const AlgebraElement& f) {
    nlohmann::ordered_json j;
    if (f.theta().is_rational())
        j["theta"] = {{"p", f.theta().p()}, {"q", f.theta().q()}};
    else
        j["theta"] = {{"real", f.theta().radians()}};
    auto arr = nlohmann::ordered_json::array();
    for (const auto& [x, c] : f.coeffs())  // map order = lexicographic (m, n)
        arr.push_back({x.m, x.n, c.real(), c.imag()});
    j["coeffs"] = std::move(arr);
    return j.dump();
}

AlgebraElement element_from_json(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        Theta theta = j.at("theta").contains("real")
                          ? Theta::real(j["theta"]["real"].get<double>())
                          : Theta::rational(j["theta"]["p"].get<std::int64_t>(),
                                            j["theta"]["q"].get<std::int64_t>());
        AlgebraElement f(theta);
        for (const auto& row : j.at("coeffs")) {
            if (row.size() != 4) throw std::invalid_argument("bad coefficient row");
            f.add({row[0].get<std::int64_t>(), row[1].get<std::int64_t>()},
                  {row[2].get<double>(), row[3].get<double>()});
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        // malformed input is a caller error, not a numeric failure
        throw std::invalid_argument(std::string("bad element json: ") + e.what());
    }
}

}  // namespace dccr
