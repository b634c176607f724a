#pragma once

#include "nisv/analytic.hpp"
#include "nisv/poly.hpp"

#include <limits>
#include <vector>

namespace nisv {

/// One summand c (zeta - lo)^k e^{-a zeta} on (lo, hi); hi may be infinite.
/// Square-integrability on an infinite support requires Re a > 0.
struct ExpPolyTerm {
    Cplx c;
    int k = 0;
    Cplx a{0.0};
    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
};

/// Exact exponential-polynomial element of L^2(0, infinity).
struct ExpPoly {
    std::vector<ExpPolyTerm> terms;

    Cplx eval(double zeta) const;
    ExpPoly operator+(const ExpPoly& o) const;
};

/// One summand c e^{-delay s} / (s + pole)^order of a Laplace transform.
struct LaplaceTerm {
    Cplx c;
    double delay = 0.0;
    Cplx pole{0.0};
    int order = 1;
};

/// Exact closed-form Laplace transform: a finite sum of delayed rational
/// terms. Evaluable anywhere away from the poles s = -pole.
struct LaplaceSum {
    std::vector<LaplaceTerm> terms;

    Cplx eval(Cplx s) const;

    /// Merge terms with identical (delay, pole, order) and sort; used by the
    /// exact structural comparison.
    void normalize();

    bool structurally_equal(const LaplaceSum& o, double coeff_tol = 0.0) const;
};

/// Exact term-by-term Laplace transform. Throws for a non-decaying term on
/// an infinite support.
LaplaceSum laplace_exact(const ExpPoly& f);

/// Rational function of s times an optional delay factor e^{-delay s}.
struct HalfPlaneRational {
    RationalFn rat;
    double delay = 0.0;

    Cplx eval(Cplx s) const { return rat.eval(s) * std::exp(-delay * s); }

    /// H^2(C+) membership: proper and all poles in the open left half-plane.
    bool in_h2() const;
};

/// (V^{-1} g)(z) = (2 sqrt(pi)/(1+z)) g((1-z)/(1+z)), boundary-sampled and
/// projected to the given order. Isometric up to truncation.
HardyFunction v_inverse(const LaplaceSum& g, int order);
HardyFunction v_inverse(const HalfPlaneRational& g, int order);

/// The Cayley image s(w) = (1-w)/(1+w) of a grid node.
inline Cplx cayley(Cplx w) { return (1.0 - w) / (1.0 + w); }

/// Named test families from the worked examples.
ExpPoly family_e_delta(double delta);
ExpPoly family_f_delta_n(double delta, int n);
ExpPoly family_f_m(double delta, int m);
ExpPoly family_g_m(const std::vector<double>& deltas);

/// g = G1 * G2 with G1 invertible in L^inf(iR) (no zeros or poles in the
/// closed right half-plane including infinity) and
/// G2 = prod (s - y_k) / (1+s)^n collecting the m imaginary-axis zeros and
/// the degree deficit at infinity; n > m always.
struct RationalSplit {
    RationalFn g1;
    RationalFn g2;
    int n = 0;
    int m = 0;
    std::vector<Cplx> axis_zeros;
};

RationalSplit rational_split(const HalfPlaneRational& g);

/// Inner test for a delayed rational symbol on the half-plane: no poles in
/// the closed right half-plane and unimodular boundary values. Returns the
/// violation size (0 means inner within tolerance) plus a diagnostic.
struct InnerTestResult {
    bool inner = false;
    double violation = 0.0; ///< max(Re of offending pole, boundary modulus deviation)
    std::string reason;
};

InnerTestResult inner_test_halfplane(const HalfPlaneRational& candidate);

} // namespace nisv
