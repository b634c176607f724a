#pragma once

#include "nisv/analytic.hpp"
#include "nisv/halfplane.hpp"
#include "nisv/symbols.hpp"

#include <functional>
#include <string>
#include <vector>

namespace nisv {

/// Orthonormal coefficient-column frame for a truncated subspace of H^2(D).
class Frame {
public:
    Frame() = default;
    Frame(Mat basis, std::string provenance);

    int order() const { return static_cast<int>(basis_.rows()); }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const { return basis_; }
    const std::string& provenance() const { return provenance_; }

    /// max_k |(B^H B - I)_{jk}|; should be ~1e-14 for a valid frame.
    double gram_defect() const;

    HardyFunction column(int k) const { return HardyFunction(basis_.col(k)); }

    /// Distance of a unit vector from the span.
    double distance(const Vec& x) const;

private:
    Mat basis_;
    std::string provenance_;
};

/// A set of (not yet orthonormalized) generator columns at a fixed order.
/// Keeping raw generators around lets callers cut frames at several rank
/// thresholds from the same family.
struct GenSet {
    int order = 0;
    std::vector<Vec> cols;
    std::string provenance;

    void add(const HardyFunction& f);
    void add(Vec v);
    void append(const GenSet& o);

    /// Rank-revealing orthonormalization at a relative singular value cutoff.
    Frame orth(double rel_tol) const;

    /// Columns multiplied pointwise by a symbol on the boundary grid, then
    /// re-projected. The spans transform; generators stay generators.
    GenSet multiplied(const SymbolExpr& h) const;

    /// Columns composed with an inner function: col -> P_N(col o phi).
    GenSet composed(const SymbolExpr& phi) const;
};

/// Rank-revealing orthonormalization of explicit generators.
Frame orthonormalize(const std::vector<HardyFunction>& generators, double rel_tol);

struct GapResult {
    double defect_ab = 0.0; ///< largest principal-angle sine of A against B
    double defect_ba = 0.0;
    double gap = 0.0;       ///< max of the two directed defects
};

/// Directed defect: max over unit x in span A of dist(x, span B).
double subspace_defect(const Frame& A, const Frame& B);

GapResult subspace_gap(const Frame& A, const Frame& B);

/// The extremal function of a nearly S*-invariant subspace: the unit-norm
/// element with u(0) > 0 orthogonal to everything in M vanishing at the
/// origin, i.e. the normalized in-span representer of evaluation at 0.
/// `conditioning` (if given) receives u(0); values near zero mean the
/// extraction is ill-conditioned and the direction is unreliable.
HardyFunction hitt_extremal(const Frame& M, double* conditioning = nullptr);

/// Near S*-invariance defect: orthonormalize M cap {f: f(0)=0}, apply the
/// backward shift, return the largest distance of the images from span M.
/// Zero (up to truncation) iff the span is nearly S*-invariant.
double near_sstar_defect(const Frame& M);

/// Same, but the images are tested against a separately supplied target span
/// (used when M is a trusted sub-frame of a deeper family).
double near_sstar_defect(const Frame& M, const Frame& target);

/// Near T_psi^{-1}-invariance defect for a finite family of automorphisms:
/// for each psi with zero a, divide the slice {f in M : f(a)=0} by psi on
/// the boundary and measure containment of the quotients in span M.
double near_div_defect(const Frame& M, const std::vector<Automorphism>& psis);

/// Generators h*phi^{lambda_j} at uniform lambda_j in [0, delta].
GenSet cyclic_disc_generators(const SymbolExpr& h, double delta, int mpts, int order);

/// A(h): orthonormalized cyclic span.
Frame cyclic_disc(const SymbolExpr& h, double delta, int mpts, int order, double rel_tol = 1e-8);

/// Generators V^{-1}(g e^{-lambda_j s}) pulled back to the disc.
GenSet cyclic_halfplane_generators(const HalfPlaneRational& g, double delta, int mpts, int order);

/// N(g): orthonormalized cyclic span of the half-plane orbit, pulled back.
Frame cyclic_halfplane(const HalfPlaneRational& g, double delta, int mpts, int order,
                       double rel_tol = 1e-8);

/// Model-space generator family for theta = R * phi^delta.
///
/// Rational theta (delta = 0): columns P_N(theta z^k), whose rank-revealing
/// complement is the model space; handled in model_space_frame directly.
/// Singular theta: K_theta = K_R + R K_{phi^delta} with
/// K_{phi^delta} = span{ (phi^mu - phi^mu(0))/z : mu in [0, delta] }.
GenSet model_space_generators(const SymbolExpr& theta, int order, int model_samples);

} // namespace nisv
