#pragma once
#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace dccr {

using cplx = std::complex<double>;

// dense column-major complex matrix; just enough linear algebra for the
// representation / grid / spectra modules (BLAS gemm, LAPACK eig/svd/solve)
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    cplx& operator()(std::size_t i, std::size_t j) { return a_[i + r_ * j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i + r_ * j]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    CMatrix adjoint() const;
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cplx s);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

    double max_abs() const;                      // entrywise max |a_ij|
    double hermitian_defect() const;             // max |a_ij - conj(a_ji)|
    bool is_hermitian(double tol = 1e-13) const { return hermitian_defect() <= tol; }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<cplx> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);  // zgemm

// dense column-major real matrix (large symmetric grid Hamiltonians)
class RMatrix {
public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i + r_ * j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return a_[i + r_ * j]; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    double max_abs() const;
    double symmetric_defect() const;  // max |a_ij - a_ji|
    CMatrix to_complex() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<double> a_;
};

// ascending eigenvalues of a Hermitian matrix (zheevd); input checked
// Hermitian to `defect_tol` by the caller where the contract requires it
std::vector<double> eig_hermitian_values(const CMatrix& h);

struct CEig {
    std::vector<double> values;  // ascending
    CMatrix vectors;             // columns
};
CEig eig_hermitian_vectors(const CMatrix& h);

std::vector<double> eig_symmetric_values(const RMatrix& h);  // dsyevd

// largest singular value (zgesvd)
double operator_norm(const CMatrix& a);

// X with A X = B (zgesv)
CMatrix solve_linear(CMatrix a, CMatrix b);

// C = op(A) * op(B) for real matrices via dgemm
RMatrix rmul(const RMatrix& a, const RMatrix& b, bool transpose_a = false,
             bool transpose_b = false);

// row-major dump, each entry as "re,im"; '\n' per matrix row, %.17g floats
std::string matrix_to_csv(const CMatrix& m);

std::string format_double(double v);  // %.17g, deterministic

}  // namespace dccr
