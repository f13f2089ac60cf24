#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmart {

// Thrown when an iteration fails to converge or a solve produces
// non-finite values. Distinct from std::invalid_argument, which is
// reserved for bad inputs/configuration.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense symmetric d x d matrix, row-major. Construction from raw entries
// symmetrizes, so entries[i][j] == entries[j][i] holds exactly afterwards.
class SymMatrix {
  public:
    explicit SymMatrix(int dim);
    SymMatrix(int dim, std::span<const double> row_major);

    static SymMatrix identity(int dim);
    static SymMatrix diagonal(std::span<const double> diag);
    static SymMatrix scalar(double v);  // 1x1

    int dim() const { return dim_; }
    double operator()(int i, int j) const { return a_[i * dim_ + j]; }
    void set(int i, int j, double v);  // sets both (i,j) and (j,i)
    std::span<const double> data() const { return a_; }

    double trace() const;

    SymMatrix& operator+=(const SymMatrix& o);
    SymMatrix& operator-=(const SymMatrix& o);
    SymMatrix& operator*=(double s);

    friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
    friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
    friend SymMatrix operator*(SymMatrix a, double s) { return a *= s; }
    friend SymMatrix operator*(double s, SymMatrix a) { return a *= s; }

  private:
    int dim_;
    std::vector<double> a_;
};

// tr(a b); for symmetric arguments this is the entrywise double contraction.
double frobenius_inner(const SymMatrix& a, const SymMatrix& b);
double frobenius_norm(const SymMatrix& a);

struct EigenDecomposition {
    int dim = 0;
    std::vector<double> values;   // ascending
    std::vector<double> vectors;  // row-major; column j is the eigenvector of values[j]

    SymMatrix reconstruct() const;  // Q diag(values) Q^T
};

// Cyclic Jacobi rotations; exact symmetry preservation, intended for small
// dense matrices. Throws NumericalError after 100 sweeps without convergence.
EigenDecomposition eigendecompose(const SymMatrix& a);

double smallest_eigenvalue(const SymMatrix& a);
double largest_eigenvalue(const SymMatrix& a);

// a <= b in the positive-semidefinite order, within a scale-invariant slack
// tol = 1e-10 * (1 + |b-a|).
bool psd_leq(const SymMatrix& a, const SymMatrix& b);

// Symmetric square root of a PSD matrix. Eigenvalues below -tol are an
// error; small negative ones are clamped to zero.
SymMatrix sqrt_psd(const SymMatrix& a);

// s * g * s, symmetrized against round-off.
SymMatrix sandwich(const SymMatrix& s, const SymMatrix& g);

// PSD-ordered interval [lower, upper] of squared volatility matrices.
// lower must be positive definite and upper - lower positive definite.
class MatrixInterval {
  public:
    MatrixInterval(SymMatrix lower, SymMatrix upper);

    int dim() const { return lower_.dim(); }
    const SymMatrix& lower() const { return lower_; }
    const SymMatrix& upper() const { return upper_; }

  private:
    SymMatrix lower_;
    SymMatrix upper_;
};

}  // namespace gmart
