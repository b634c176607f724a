#pragma once

#include "nisv/analytic.hpp"
#include "nisv/poly.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace nisv {

/// Disc automorphism psi(z) = lambda (a - z)/(1 - conj(a) z), |a| < 1, |lambda| = 1.
class Automorphism {
public:
    Automorphism(Cplx a, Cplx lambda);

    Cplx zero() const { return a_; }
    Cplx unimodular() const { return lambda_; }

    Cplx eval(Cplx z) const { return lambda_ * (a_ - z) / (1.0 - std::conj(a_) * z); }

    /// Closed-form inverse; psi^{-1} o psi = id pointwise.
    Automorphism inverse() const { return Automorphism(lambda_ * a_, std::conj(lambda_)); }

    /// psi'(z) = lambda (|a|^2 - 1)/(1 - conj(a) z)^2.
    Cplx derivative(Cplx z) const {
        Cplx d = 1.0 - std::conj(a_) * z;
        return lambda_ * (std::norm(a_) - 1.0) / (d * d);
    }

    /// sqrt(psi') = c/(1 - conj(a) z) with c a fixed square root of
    /// lambda (|a|^2 - 1). The branch only changes frames by a unimodular
    /// constant, which subspace comparisons ignore.
    Cplx sqrt_deriv_scale() const { return std::sqrt(lambda_ * (std::norm(a_) - 1.0)); }

private:
    Cplx a_, lambda_;
};

Automorphism make_automorphism(Cplx a, Cplx lambda);

/// Blaschke factor b_a = (a - z)/(1 - conj(a) z).
inline Automorphism blaschke(Cplx a) { return Automorphism(a, Cplx(1.0)); }

/// Closed-form evaluable expression for L^inf(T) symbols and inner functions.
///
/// Leaves: constants, z, rational functions, Mobius maps, conj(z)^k (circle
/// only), the singular inner phi^t(z) = exp(-t(1-z)/(1+z)), and sqrt(psi').
/// Nodes: products, integer powers, composition, conjugation on the circle.
class SymbolExpr {
public:
    SymbolExpr(); // the constant 1

    static SymbolExpr constant(Cplx v);
    static SymbolExpr z();
    static SymbolExpr rational(RationalFn r);
    static SymbolExpr mobius(Automorphism m);
    static SymbolExpr conj_z_pow(int k);
    static SymbolExpr singular_inner(double t);
    static SymbolExpr sqrt_deriv(Automorphism m);
    static SymbolExpr compose(SymbolExpr outer, SymbolExpr inner);
    static SymbolExpr conj_on_circle(SymbolExpr e);

    SymbolExpr operator*(const SymbolExpr& o) const;
    SymbolExpr pow(int k) const;

    /// Evaluate at z. ConjOnCircle and conj(z)^k nodes require |z| = 1;
    /// phi^t requires |1 + z| >= 1e-8 (essential singularity at -1).
    Cplx eval(Cplx z) const;

    std::vector<Cplx> eval_on_grid(const BoundaryGrid& grid) const;

    /// Factor the expression as R * phi^delta with R free of singular inner
    /// factors. Throws if a singular factor is buried under composition or
    /// conjugation nodes.
    std::pair<SymbolExpr, double> split_singular() const;

    bool has_singular() const { return split_singular().second > 0.0; }

    /// Conservative check that the expression defines an analytic function
    /// on the closed disc (no rational poles in |z| <= 1, no conj nodes).
    bool analytic_in_closed_disc() const;

    /// Conservative check that the expression is the conjugate of an analytic
    /// function on T (only nonpositive Fourier modes). Toeplitz compressions
    /// of such symbols are exactly upper triangular.
    bool antianalytic_on_circle() const;

    std::string str() const;

    struct Node;

private:
    explicit SymbolExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// Result of the rational inner-outer factorization.
struct InnerOuter {
    SymbolExpr inner;  ///< unimodular constant times a finite Blaschke product
    RationalFn outer;  ///< no zeros in the open disc; circle zeros stay here
    int blaschke_degree = 0;
};

/// Inner-outer factorization of a rational function in H^2 of the disc
/// (all poles strictly outside the closed disc). Zeros on T stay outer.
/// Normalized so that inner(1) = 1.
InnerOuter inner_outer_rational(const RationalFn& f);

/// G = (F o psi) psi / z, evaluable on T.
SymbolExpr pushforward_symbol(const SymbolExpr& F, const Automorphism& psi);

/// The generator of K_{z(theta o psi)} ⊖ C_psi(K_theta):
/// coefficients of (z (theta o psi)(z) - a theta(0)) / (z - a).
HardyFunction complement_vector(const SymbolExpr& theta, const Automorphism& psi, int order);

} // namespace nisv
