#pragma once

#include "nisv/subspaces.hpp"
#include "nisv/symbols.hpp"

#include <string>

namespace nisv {

/// Matrix realization of an operator at truncation order N.
struct OperatorMatrix {
    Mat entries;
    int order = 0;
    std::string provenance;

    int rows() const { return static_cast<int>(entries.rows()); }
};

/// Thrown when the singular spectrum has no factor-10 gap at the kernel cut.
class IllConditionedKernel : public std::runtime_error {
public:
    IllConditionedKernel(const std::string& msg, double gap) : std::runtime_error(msg), gap_(gap) {}
    double gap() const { return gap_; }

private:
    double gap_;
};

struct KernelResult {
    Frame frame;
    double spectral_gap = 0.0; ///< sigma above the cut over sigma at the cut
    double sigma_max = 0.0;
    int dim = 0;
};

/// Toeplitz matrix of a symbol: entry (j,k) = phihat(j - k), Fourier
/// coefficients computed on the 4N boundary grid. `rows` > N gives the
/// rectangular compression used when injectivity matters (shift-like
/// symbols with analytic bandwidth m use rows = N + m).
OperatorMatrix toeplitz_matrix(const SymbolExpr& phi, int order, int rows = -1);

/// Orthonormal frame of right singular vectors with sigma <= tau * sigma_max.
/// Requires a spectral gap of factor >= 10 at the cut; otherwise throws
/// IllConditionedKernel (report, do not guess).
KernelResult numeric_kernel(const OperatorMatrix& M, double tau);

/// Orthonormal frame spanning the order-N truncation of the model space
/// K_theta = H^2 - theta H^2.
///
/// Rational inner theta: the rank-revealing orthogonal complement of the
/// columns {P_N(theta z^k)}; a finite Blaschke product of degree n yields
/// dimension exactly n. Theta with a singular factor phi^delta: the span of
/// the structural family K_R + R K_{phi^delta} (see model_space_generators),
/// cut at `rel_tol`.
Frame model_space_frame(const SymbolExpr& theta, int order, double rel_tol = 1e-8,
                        int model_samples = 129);

/// Composition f -> P_N(f o phi) for an inner function phi (evaluate the
/// truncated Taylor polynomial at phi(grid), analyze, project).
HardyFunction compose_apply(const SymbolExpr& phi, const HardyFunction& f);
HardyFunction compose_apply(const Automorphism& psi, const HardyFunction& f);

/// T_phi f = P_plus(phi * f) at order N via boundary sampling.
HardyFunction toeplitz_apply(const SymbolExpr& phi, const HardyFunction& f);

/// Checks max_j ||theta(w_j)| - 1| on the 4N grid.
double boundary_modulus_deviation(const SymbolExpr& theta, int order);

} // namespace nisv
