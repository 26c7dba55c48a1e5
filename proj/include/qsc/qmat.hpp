// Small dense complex-matrix algebra for few-level quantum operators:
// arithmetic, commutators, Hermitian eigendecomposition, matrix exponential.
#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace qsc {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);
    ComplexMatrix(int dim, std::initializer_list<cplx> entries);

    static ComplexMatrix zero(int dim) { return ComplexMatrix(dim); }
    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }
    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    cplx* data() { return a_.data(); }
    const cplx* data() const { return a_.data(); }

    ComplexMatrix& operator+=(const ComplexMatrix& o);
    ComplexMatrix& operator-=(const ComplexMatrix& o);
    ComplexMatrix& operator*=(cplx s);

    ComplexMatrix adjoint() const;
    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    // max |a(i,j) - conj(a(j,i))| over all entries
    double hermiticity_residual() const;
    bool is_finite() const;

private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, cplx s);

// AB - BA; dimensions must match
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

// exp(A) by scaling-and-squaring on a truncated series
ComplexMatrix mat_exp(const ComplexMatrix& a);

struct EigenSystem {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // orthonormal columns, paired with values
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. Rejects inputs whose hermiticity residual exceeds `tol`.
EigenSystem herm_eig(const ComplexMatrix& a, double tol = 1e-12);

// <v|A|v> for a column vector of matching dimension
cplx expectation(const ComplexMatrix& a, const std::vector<cplx>& v);

}  // namespace qsc
