#include "gmart/symcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gmart {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_finite(std::span<const double> v, const char* msg) {
    for (double x : v)
        if (!std::isfinite(x)) throw std::invalid_argument(msg);
}

}  // namespace

SymMatrix::SymMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim, 0.0) {
    require(dim >= 1, "SymMatrix: dim must be positive");
}

SymMatrix::SymMatrix(int dim, std::span<const double> row_major) : SymMatrix(dim) {
    require(row_major.size() == a_.size(), "SymMatrix: entry count != dim*dim");
    require_finite(row_major, "SymMatrix: non-finite entry");
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) {
            const double v = 0.5 * (row_major[i * dim_ + j] + row_major[j * dim_ + i]);
            a_[i * dim_ + j] = v;
        }
}

SymMatrix SymMatrix::identity(int dim) {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.a_[i * dim + i] = 1.0;
    return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
    SymMatrix m(static_cast<int>(diag.size()));
    for (int i = 0; i < m.dim_; ++i) m.a_[i * m.dim_ + i] = diag[i];
    require_finite(m.a_, "SymMatrix: non-finite entry");
    return m;
}

SymMatrix SymMatrix::scalar(double v) {
    SymMatrix m(1);
    require_finite(std::span<const double>(&v, 1), "SymMatrix: non-finite entry");
    m.a_[0] = v;
    return m;
}

void SymMatrix::set(int i, int j, double v) {
    a_[i * dim_ + j] = v;
    a_[j * dim_ + i] = v;
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < dim_; ++i) t += a_[i * dim_ + i];
    return t;
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
    require(dim_ == o.dim_, "SymMatrix: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
    require(dim_ == o.dim_, "SymMatrix: dimension mismatch");
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
}

SymMatrix& SymMatrix::operator*=(double s) {
    for (double& v : a_) v *= s;
    return *this;
}

double frobenius_inner(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("frobenius_inner: dimension mismatch");
    const auto xa = a.data();
    const auto xb = b.data();
    double s = 0.0;
    for (std::size_t k = 0; k < xa.size(); ++k) s += xa[k] * xb[k];
    return s;
}

double frobenius_norm(const SymMatrix& a) {
    return std::sqrt(frobenius_inner(a, a));
}

SymMatrix EigenDecomposition::reconstruct() const {
    SymMatrix m(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < dim; ++k) s += values[k] * vectors[i * dim + k] * vectors[j * dim + k];
            m.set(i, j, s);
        }
    return m;
}

EigenDecomposition eigendecompose(const SymMatrix& m) {
    require_finite(m.data(), "eigendecompose: non-finite entry");
    const int n = m.dim();

    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> q(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) q[i * n + i] = 1.0;

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
        return std::sqrt(2.0 * s);
    };

    const double stop = 1e-15 * (1.0 + frobenius_norm(m));
    bool converged = (n == 1) || off_norm() <= stop;
    for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                const double apr = a[p * n + r];
                if (std::abs(apr) <= 0.25 * stop / n) continue;
                const double app = a[p * n + p];
                const double arr = a[r * n + r];
                const double theta = (arr - app) / (2.0 * apr);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double akp = a[k * n + p];
                    const double akr = a[k * n + r];
                    a[k * n + p] = c * akp - s * akr;
                    a[k * n + r] = s * akp + c * akr;
                }
                for (int k = 0; k < n; ++k) {
                    const double apk = a[p * n + k];
                    const double ark = a[r * n + k];
                    a[p * n + k] = c * apk - s * ark;
                    a[r * n + k] = s * apk + c * ark;
                }
                for (int k = 0; k < n; ++k) {
                    const double qkp = q[k * n + p];
                    const double qkr = q[k * n + r];
                    q[k * n + p] = c * qkp - s * qkr;
                    q[k * n + r] = s * qkp + c * qkr;
                }
            }
        }
        converged = off_norm() <= stop;
    }
    if (!converged) throw NumericalError("eigendecompose: Jacobi sweeps did not converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a[i * n + i] < a[j * n + j]; });

    EigenDecomposition out;
    out.dim = n;
    out.values.resize(n);
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) {
        out.values[j] = a[order[j] * n + order[j]];
        for (int i = 0; i < n; ++i) out.vectors[i * n + j] = q[i * n + order[j]];
    }
    return out;
}

double smallest_eigenvalue(const SymMatrix& a) {
    return eigendecompose(a).values.front();
}

double largest_eigenvalue(const SymMatrix& a) {
    return eigendecompose(a).values.back();
}

bool psd_leq(const SymMatrix& a, const SymMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("psd_leq: dimension mismatch");
    const SymMatrix diff = b - a;
    const double tol = 1e-10 * (1.0 + frobenius_norm(diff));
    return smallest_eigenvalue(diff) >= -tol;
}

SymMatrix sqrt_psd(const SymMatrix& a) {
    EigenDecomposition e = eigendecompose(a);
    const double scale = std::max(std::abs(e.values.front()), std::abs(e.values.back()));
    for (double& v : e.values) {
        if (v < -1e-10 * (1.0 + scale)) throw std::invalid_argument("sqrt_psd: matrix is not PSD");
        v = std::sqrt(std::max(v, 0.0));
    }
    return e.reconstruct();
}

SymMatrix sandwich(const SymMatrix& s, const SymMatrix& g) {
    if (s.dim() != g.dim()) throw std::invalid_argument("sandwich: dimension mismatch");
    const int n = s.dim();
    std::vector<double> tmp(static_cast<std::size_t>(n) * n, 0.0);  // s*g
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int k = 0; k < n; ++k) v += s(i, k) * g(k, j);
            tmp[i * n + j] = v;
        }
    std::vector<double> full(static_cast<std::size_t>(n) * n, 0.0);  // (s*g)*s
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double v = 0.0;
            for (int k = 0; k < n; ++k) v += tmp[i * n + k] * s(k, j);
            full[i * n + j] = v;
        }
    return SymMatrix(n, full);
}

MatrixInterval::MatrixInterval(SymMatrix lower, SymMatrix upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
    require(lower_.dim() == upper_.dim(), "MatrixInterval: dimension mismatch");
    if (smallest_eigenvalue(lower_) <= 0.0)
        throw std::invalid_argument("MatrixInterval: lower bound is not positive definite");
    if (smallest_eigenvalue(upper_ - lower_) <= 0.0)
        throw std::invalid_argument("MatrixInterval: upper - lower is not positive definite");
}

}  // namespace gmart
