#pragma once

#include <complex>
#include <vector>

#include "almostrep/common.hpp"

namespace ar::matkit {

using cplx = std::complex<double>;

// Dense complex matrix, row major. Entries must stay finite; operations that
// would produce NaN/Inf throw instead.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    cplx& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    void check_finite() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> a_;
};

struct Tolerances {
    double unitary_tol = 1e-9;
    double log_branch_gap = 1e-6;   // min eigenvalue distance from -1
    double spectral_gap = 1e-6;     // min eigenvalue distance from 1/2
    double integer_snap = 1e-6;
};

CMatrix identity(int n);
CMatrix mul(const CMatrix& a, const CMatrix& b);
CMatrix add(const CMatrix& a, const CMatrix& b);
CMatrix sub(const CMatrix& a, const CMatrix& b);
CMatrix scale(const CMatrix& a, cplx s);
CMatrix adjoint(const CMatrix& a);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix dirsum(const CMatrix& a, const CMatrix& b);
cplx trace(const CMatrix& a);
double frob_norm(const CMatrix& a);

// Largest singular value: full Hermitian solve of A*A for n <= 64, power
// iteration to relative 1e-10 otherwise.
double op_norm(const CMatrix& a);

// LU with partial pivoting.
cplx det(CMatrix a);

// Hermitian eigendecomposition by cyclic Jacobi; off-diagonal mass driven
// below 1e-12 relative. Eigenvalues ascend; columns of V are eigenvectors.
struct EigenH {
    std::vector<double> values;
    CMatrix vectors;
};
EigenH eig_hermitian(const CMatrix& h);

// Eigenvalues and eigenvectors of a unitary matrix (joint diagonalization of
// its Hermitian and anti-Hermitian parts).
struct EigenU {
    std::vector<cplx> values;
    CMatrix vectors;
};
EigenU eig_unitary(const CMatrix& u, const Tolerances& tol = {});

// Tr(log U) with the principal branch. Mercator series when ||U - I|| < 0.9,
// eigenvalue path otherwise; an eigenvalue within log_branch_gap of -1 is a
// branch failure.
cplx tr_log_unitary(const CMatrix& u, const Tolerances& tol = {});

// Spectral projection of a self-adjoint h onto (1/2, inf). Requires
// ||h^2 - h|| < defect_limit (default 2/9). The projection is computed by the
// cubic purification iteration, which converges exactly when the spectrum
// avoids 1/2, guaranteed by the defect bound.
CMatrix herm_spectral_projection(const CMatrix& h, const Tolerances& tol = {},
                                 double defect_limit = 2.0 / 9.0);

// u = w (w*w)^{-1/2}; u*u = I. Requires the smallest eigenvalue of w*w to
// stay above 1e-6. Works for rectangular w with rows >= cols.
CMatrix polar_isometry(const CMatrix& w);

} // namespace ar::matkit
