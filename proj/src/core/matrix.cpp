#include "core/matrix.hpp"

#include <cblas.h>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#define LAPACK_COMPLEX_CPP
#include <lapacke.h>

namespace dccr {

namespace {
void lapack_check(int info, const char* what) {
    if (info != 0)
        throw std::runtime_error(std::string(what) + " failed, info=" + std::to_string(info));
}
}  // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix m(c_, r_);
    for (std::size_t j = 0; j < c_; ++j)
        for (std::size_t i = 0; i < r_; ++i) m(j, i) = std::conj((*this)(i, j));
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("shape mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
    for (auto& v : a_) v *= s;
    return *this;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double CMatrix::hermitian_defect() const {
    if (r_ != c_) throw std::invalid_argument("square matrix required");
    double d = 0.0;
    for (std::size_t j = 0; j < c_; ++j)
        for (std::size_t i = 0; i <= j; ++i)
            d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return d;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("shape mismatch");
    CMatrix c(a.rows(), b.cols());
    const cplx one(1.0), zero(0.0);
    cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, static_cast<int>(a.rows()),
                static_cast<int>(b.cols()), static_cast<int>(a.cols()), &one, a.data(),
                static_cast<int>(a.rows()), b.data(), static_cast<int>(b.rows()), &zero,
                c.data(), static_cast<int>(c.rows()));
    return c;
}

double RMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : a_) m = std::max(m, std::abs(v));
    return m;
}

double RMatrix::symmetric_defect() const {
    if (r_ != c_) throw std::invalid_argument("square matrix required");
    double d = 0.0;
    for (std::size_t j = 0; j < c_; ++j)
        for (std::size_t i = 0; i < j; ++i)
            d = std::max(d, std::abs((*this)(i, j) - (*this)(j, i)));
    return d;
}

CMatrix RMatrix::to_complex() const {
    CMatrix m(r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.data()[i] = a_[i];
    return m;
}

std::vector<double> eig_hermitian_values(const CMatrix& h) {
    CMatrix a = h;
    const int n = static_cast<int>(h.rows());
    std::vector<double> w(h.rows());
    lapack_check(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', n,
                                reinterpret_cast<lapack_complex_double*>(a.data()), n, w.data()),
                 "zheevd");
    return w;
}

CEig eig_hermitian_vectors(const CMatrix& h) {
    CEig e;
    e.vectors = h;
    const int n = static_cast<int>(h.rows());
    e.values.resize(h.rows());
    lapack_check(
        LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', n,
                       reinterpret_cast<lapack_complex_double*>(e.vectors.data()), n,
                       e.values.data()),
        "zheevd");
    return e;
}

std::vector<double> eig_symmetric_values(const RMatrix& h) {
    RMatrix a = h;
    const int n = static_cast<int>(h.rows());
    std::vector<double> w(h.rows());
    lapack_check(LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data()), "dsyevd");
    return w;
}

double operator_norm(const CMatrix& a) {
    CMatrix tmp = a;
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    std::vector<double> s(std::min(a.rows(), a.cols()));
    std::vector<double> superb(std::max<std::size_t>(1, s.size()));
    lapack_check(LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'N', 'N', m, n,
                                reinterpret_cast<lapack_complex_double*>(tmp.data()), m, s.data(),
                                nullptr, 1, nullptr, 1, superb.data()),
                 "zgesvd");
    return s.empty() ? 0.0 : s[0];
}

CMatrix solve_linear(CMatrix a, CMatrix b) {
    if (a.rows() != a.cols() || a.rows() != b.rows())
        throw std::invalid_argument("shape mismatch");
    const int n = static_cast<int>(a.rows()), nrhs = static_cast<int>(b.cols());
    std::vector<lapack_int> ipiv(a.rows());
    lapack_check(LAPACKE_zgesv(LAPACK_COL_MAJOR, n, nrhs,
                               reinterpret_cast<lapack_complex_double*>(a.data()), n, ipiv.data(),
                               reinterpret_cast<lapack_complex_double*>(b.data()), n),
                 "zgesv");
    return b;
}

RMatrix rmul(const RMatrix& a, const RMatrix& b, bool transpose_a, bool transpose_b) {
    const std::size_t am = transpose_a ? a.cols() : a.rows();
    const std::size_t ak = transpose_a ? a.rows() : a.cols();
    const std::size_t bk = transpose_b ? b.cols() : b.rows();
    const std::size_t bn = transpose_b ? b.rows() : b.cols();
    if (ak != bk) throw std::invalid_argument("shape mismatch");
    RMatrix c(am, bn);
    cblas_dgemm(CblasColMajor, transpose_a ? CblasTrans : CblasNoTrans,
                transpose_b ? CblasTrans : CblasNoTrans, static_cast<int>(am),
                static_cast<int>(bn), static_cast<int>(ak), 1.0, a.data(),
                static_cast<int>(a.rows()), b.data(), static_cast<int>(b.rows()), 0.0, c.data(),
                static_cast<int>(c.rows()));
    return c;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string matrix_to_csv(const CMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ',';
            out += format_double(m(i, j).real());
            out += ',';
            out += format_double(m(i, j).imag());
        }
        out += '\n';
    }
    return out;
}

}  // namespace dccr
