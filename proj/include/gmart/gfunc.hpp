#pragma once

#include "gmart/symcore.hpp"

namespace gmart {

// c0 is the smallest eigenvalue of the interval halfwidth, C0 its Frobenius
// norm. The epsilon schedule eps_at(k) = c0/(1+k), k >= 1, decreases to 0.
struct GConstants {
    double c0 = 0.0;
    double C0 = 0.0;

    double eps_at(int k) const { return c0 / (1.0 + k); }
};

// The sublinear generator of the volatility interval [lower, upper]
// (interval of squared volatilities):
//
//   g_value(gamma) = 1/2 * sup { A : gamma , A in [lower, upper] }
//                  = 1/2 * ( midpoint : gamma + nuc(h^{1/2} gamma h^{1/2}) )
//
// with h the halfwidth and nuc the sum of absolute eigenvalues. The second
// form is exact: A = midpoint + h^{1/2} X h^{1/2} ranges over the interval
// exactly as X ranges over [-I, I].
class GGenerator {
  public:
    explicit GGenerator(const MatrixInterval& interval);

    int dim() const { return lower_.dim(); }
    const SymMatrix& lower() const { return lower_; }
    const SymMatrix& upper() const { return upper_; }
    const SymMatrix& midpoint() const { return midpoint_; }
    const SymMatrix& halfwidth() const { return halfwidth_; }
    const SymMatrix& halfwidth_sqrt() const { return halfwidth_sqrt_; }

    double g_value(const SymMatrix& gamma) const;

    // Averaged generator 1/2 [ G(gamma + 2 alpha) + G(gamma - 2 alpha) ];
    // symmetric in alpha and dominates g_value.
    double g_alpha(const SymMatrix& alpha, const SymMatrix& gamma) const;

    // Generator of the shrunken interval [lower + eps I, upper - eps I].
    // Requires 0 < eps <= c0.
    double g_eps(double eps, const SymMatrix& gamma) const;
    GGenerator shrunken(double eps) const;

    GConstants constants() const { return constants_; }

    // Scalar fast paths (dim == 1 only).
    double lo1() const { return lower_(0, 0); }
    double hi1() const { return upper_(0, 0); }
    double g_value1(double gamma) const;

    double lambda_max_upper() const { return lambda_max_upper_; }

  private:
    GGenerator(SymMatrix lower, SymMatrix upper, bool allow_degenerate);
    void init();

    SymMatrix lower_;
    SymMatrix upper_;
    SymMatrix midpoint_;
    SymMatrix halfwidth_;
    SymMatrix halfwidth_sqrt_;
    GConstants constants_;
    double lambda_max_upper_ = 0.0;
};

// Sandwich check  g_eps(gamma) + eps|alpha| <= g_alpha(alpha,gamma)
//                                           <= g_value(gamma) + C0|alpha|.
struct GaestCheck {
    double lhs = 0.0;
    double mid = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

GaestCheck check_gaest(const GGenerator& gen, double eps, const SymMatrix& alpha,
                       const SymMatrix& gamma);

}  // namespace gmart
