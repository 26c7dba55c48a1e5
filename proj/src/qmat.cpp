#include "qsc/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qsc {

namespace {

int check_dim(int dim) {
    if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1, got " + std::to_string(dim));
    return dim;
}

void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrix dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(check_dim(dim)), a_(static_cast<size_t>(dim) * dim) {}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<cplx> entries) : ComplexMatrix(dim) {
    if (entries.size() != a_.size()) {
        throw std::invalid_argument("expected " + std::to_string(a_.size()) + " entries, got " +
                                    std::to_string(entries.size()));
    }
    std::copy(entries.begin(), entries.end(), a_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    check_same_dim(*this, o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    check_same_dim(*this, o);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (auto& x : a_) x *= s;
    return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& x : a_) s += std::norm(x);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a_) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::hermiticity_residual() const {
    double m = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& x : a_)
        if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    const int n = a.dim();
    ComplexMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    check_same_dim(a, b);
    return a * b - b * a;
}

ComplexMatrix mat_exp(const ComplexMatrix& a) {
    if (!a.is_finite()) throw std::invalid_argument("mat_exp: input has non-finite entries");
    const int n = a.dim();

    // scale ||B|| below 1/2, exponentiate by series, square back up
    int squarings = 0;
    double norm = a.frobenius_norm();
    while (norm > 0.5 && squarings < 64) {
        norm /= 2.0;
        ++squarings;
    }
    ComplexMatrix b = a * cplx(std::ldexp(1.0, -squarings), 0.0);

    ComplexMatrix x = ComplexMatrix::identity(n);
    ComplexMatrix term = ComplexMatrix::identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = term * b * cplx(1.0 / k, 0.0);
        x += term;
        if (term.frobenius_norm() < 1e-18 * std::max(1.0, x.frobenius_norm())) break;
    }
    for (int s = 0; s < squarings; ++s) x = x * x;
    return x;
}

EigenSystem herm_eig(const ComplexMatrix& a, double tol) {
    if (!a.is_finite()) throw std::invalid_argument("herm_eig: input has non-finite entries");
    const double herm_res = a.hermiticity_residual();
    if (herm_res > tol) {
        throw std::invalid_argument("herm_eig: input is not Hermitian (max |a_ij - conj(a_ji)| = " +
                                    std::to_string(herm_res) + ", tolerance " + std::to_string(tol) + ")");
    }
    const int n = a.dim();

    // work on the exactly-symmetrized copy
    ComplexMatrix m(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) m(r, c) = 0.5 * (a(r, c) + std::conj(a(c, r)));
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(1.0, m.frobenius_norm());
    bool converged = false;
    for (int sweep = 0; sweep < 80 && !converged; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(m(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx b = m(p, q);
                const double ab = std::abs(b);
                if (ab <= 1e-18 * scale) {
                    m(p, q) = 0.0;
                    m(q, p) = 0.0;
                    continue;
                }
                // diagonalize the 2x2 Hermitian block [[app, b], [conj(b), aqq]];
                // the eigenvalue closer to app keeps the rotation angle <= pi/4
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double mid = 0.5 * (app + aqq);
                const double delta = 0.5 * (app - aqq);
                const double h = std::hypot(delta, ab);
                const double lam_p = mid + (delta >= 0.0 ? h : -h);
                const double lam_q = (app + aqq) - lam_p;
                const double beta = lam_p - app;  // |beta| <= |b|
                const double nrm = std::sqrt(ab * ab + beta * beta);
                const cplx alpha = b / nrm;          // column p of the 2x2 rotation
                const double betan = beta / nrm;     // real by construction
                const cplx alpha_c = std::conj(alpha);

                // M <- U^dag M U and V <- V U on rows/columns p, q
                for (int r = 0; r < n; ++r) {
                    const cplx mp = m(r, p), mq = m(r, q);
                    m(r, p) = mp * alpha + mq * betan;
                    m(r, q) = -mp * betan + mq * alpha_c;
                }
                for (int c = 0; c < n; ++c) {
                    const cplx xp = m(p, c), xq = m(q, c);
                    m(p, c) = alpha_c * xp + betan * xq;
                    m(q, c) = -betan * xp + alpha * xq;
                }
                m(p, p) = lam_p;
                m(q, q) = lam_q;
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    const cplx vp = v(r, p), vq = v(r, q);
                    v(r, p) = vp * alpha + vq * betan;
                    v(r, q) = -vp * betan + vq * alpha_c;
                }
            }
        }
    }
    if (!converged) {
        // one final norm check; 80 cyclic sweeps is far beyond what small dims need
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += 2.0 * std::norm(m(p, q));
        if (std::sqrt(off) > 1e-12 * scale) throw std::runtime_error("herm_eig: Jacobi sweeps did not converge");
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return m(i, i).real() < m(j, j).real(); });

    EigenSystem es;
    es.values.resize(n);
    es.vectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        es.values[k] = m(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) es.vectors(r, k) = v(r, order[k]);
    }
    return es;
}

cplx expectation(const ComplexMatrix& a, const std::vector<cplx>& v) {
    if (static_cast<int>(v.size()) != a.dim()) throw std::invalid_argument("expectation: vector/matrix dimension mismatch");
    cplx s = 0.0;
    for (int r = 0; r < a.dim(); ++r) {
        cplx row = 0.0;
        for (int c = 0; c < a.dim(); ++c) row += a(r, c) * v[c];
        s += std::conj(v[r]) * row;
    }
    return s;
}

}  // namespace qsc
