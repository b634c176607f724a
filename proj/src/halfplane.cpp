#include "nisv/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace nisv {

namespace {

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

} // namespace

Cplx ExpPoly::eval(double zeta) const {
    Cplx v(0.0);
    for (const auto& t : terms) {
        if (zeta <= t.lo || zeta >= t.hi) continue;
        v += t.c * std::pow(Cplx(zeta - t.lo), t.k) * std::exp(-t.a * zeta);
    }
    return v;
}

ExpPoly ExpPoly::operator+(const ExpPoly& o) const {
    ExpPoly r = *this;
    r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
    return r;
}

Cplx LaplaceSum::eval(Cplx s) const {
    Cplx v(0.0);
    for (const auto& t : terms) {
        Cplx den(1.0);
        for (int i = 0; i < t.order; ++i) den *= (s + t.pole);
        v += t.c * std::exp(-t.delay * s) / den;
    }
    return v;
}

void LaplaceSum::normalize() {
    std::sort(terms.begin(), terms.end(), [](const LaplaceTerm& x, const LaplaceTerm& y) {
        if (x.delay != y.delay) return x.delay < y.delay;
        if (x.pole.real() != y.pole.real()) return x.pole.real() < y.pole.real();
        if (x.pole.imag() != y.pole.imag()) return x.pole.imag() < y.pole.imag();
        return x.order < y.order;
    });
    std::vector<LaplaceTerm> merged;
    for (const auto& t : terms) {
        if (!merged.empty() && merged.back().delay == t.delay && merged.back().pole == t.pole &&
            merged.back().order == t.order) {
            merged.back().c += t.c;
        } else {
            merged.push_back(t);
        }
    }
    std::erase_if(merged, [](const LaplaceTerm& t) { return t.c == Cplx(0.0); });
    terms = std::move(merged);
}

bool LaplaceSum::structurally_equal(const LaplaceSum& o, double coeff_tol) const {
    LaplaceSum a = *this, b = o;
    a.normalize();
    b.normalize();
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        const auto& x = a.terms[i];
        const auto& y = b.terms[i];
        if (x.delay != y.delay || x.pole != y.pole || x.order != y.order) return false;
        if (std::abs(x.c - y.c) > coeff_tol) return false;
    }
    return true;
}

LaplaceSum laplace_exact(const ExpPoly& f) {
    LaplaceSum out;
    for (const auto& t : f.terms) {
        const bool infinite = std::isinf(t.hi);
        if (infinite && t.a.real() <= 0.0) {
            throw std::invalid_argument("laplace_exact: non-decaying term on an infinite support");
        }
        const double kfac = factorial(t.k);
        // int_lo^inf (z-lo)^k e^{-a z} e^{-s z} dz = e^{-a lo} e^{-s lo} k!/(s+a)^{k+1}
        out.terms.push_back({t.c * kfac * std::exp(-t.a * t.lo), t.lo, t.a, t.k + 1});
        if (!infinite) {
            // subtract the tail from hi: e^{-(a+s)hi} sum_j k!/j! L^j /(s+a)^{k+1-j}
            const double L = t.hi - t.lo;
            for (int j = 0; j <= t.k; ++j) {
                Cplx coeff = -t.c * (kfac / factorial(j)) * std::pow(L, j) * std::exp(-t.a * t.hi);
                out.terms.push_back({coeff, t.hi, t.a, t.k + 1 - j});
            }
        }
    }
    return out;
}

bool HalfPlaneRational::in_h2() const {
    if (rat.num().is_zero()) return true;
    if (rat.num().degree() >= rat.den().degree()) return false;
    for (const auto& p : rat.poles()) {
        if (p.real() >= -1e-12) return false;
    }
    return delay >= 0.0;
}

namespace {

template <typename G>
HardyFunction v_inverse_impl(const G& g, int order) {
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    const double two_sqrt_pi = 2.0 * std::sqrt(std::numbers::pi);
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        Cplx w = grid.node(j);
        samples[static_cast<size_t>(j)] = two_sqrt_pi / (1.0 + w) * g.eval(cayley(w));
    }
    return analyze_to_order(samples, order);
}

} // namespace

HardyFunction v_inverse(const LaplaceSum& g, int order) {
    // Terms with poles on the axis (pole.real() == 0) are allowed: transforms
    // of compactly supported pieces carry removable 1/s^k singularities that
    // cancel in the sum. Genuine blowups surface as non-finite samples.
    return v_inverse_impl(g, order);
}

HardyFunction v_inverse(const HalfPlaneRational& g, int order) {
    for (const auto& p : g.rat.poles()) {
        if (std::abs(p.real()) <= 1e-12) {
            throw std::domain_error("v_inverse: pole on the imaginary axis");
        }
        if (p.real() > 0.0) {
            throw std::domain_error("v_inverse: pole in the right half-plane, not in H^2");
        }
    }
    return v_inverse_impl(g, order);
}

ExpPoly family_e_delta(double delta) {
    if (delta <= 0.0) throw std::invalid_argument("family_e_delta: delta must be positive");
    ExpPoly f;
    f.terms.push_back({Cplx(1.0), 0, Cplx(1.0), delta,
                       std::numeric_limits<double>::infinity()});
    return f;
}

ExpPoly family_f_delta_n(double delta, int n) {
    if (delta <= 0.0 || n < 0) throw std::invalid_argument("family_f_delta_n: bad parameters");
    ExpPoly f;
    f.terms.push_back({Cplx(1.0 / factorial(n)), n, Cplx(1.0), delta,
                       std::numeric_limits<double>::infinity()});
    return f;
}

ExpPoly family_f_m(double delta, int m) {
    ExpPoly f;
    for (int k = 0; k <= m; ++k) f = f + family_f_delta_n(delta, k);
    return f;
}

ExpPoly family_g_m(const std::vector<double>& deltas) {
    if (deltas.empty()) throw std::invalid_argument("family_g_m: need at least one delta");
    for (size_t i = 1; i < deltas.size(); ++i) {
        if (deltas[i] <= deltas[i - 1]) {
            throw std::invalid_argument("family_g_m: deltas must be strictly increasing");
        }
    }
    if (deltas[0] <= 0.0) throw std::invalid_argument("family_g_m: deltas must be positive");
    ExpPoly f;
    for (double d : deltas) f = f + family_e_delta(d);
    return f;
}

RationalSplit rational_split(const HalfPlaneRational& g) {
    if (g.delay != 0.0) {
        throw std::invalid_argument("rational_split: strip the delay factor first (N(theta h) = theta N(h))");
    }
    if (!g.in_h2()) {
        throw std::invalid_argument("rational_split: input not in H^2(C+)");
    }
    auto zeros = g.rat.zeros();
    std::vector<Cplx> axis, offaxis;
    for (const auto& r : zeros) {
        if (r.real() > 1e-9) {
            throw std::invalid_argument("rational_split: zero in the open right half-plane, not outer");
        }
        if (std::abs(r.real()) <= 1e-9) {
            axis.push_back(Cplx(0.0, r.imag())); // snap to the axis
        } else {
            offaxis.push_back(r);
        }
    }
    const int m = static_cast<int>(axis.size());
    const int deficit = g.rat.den().degree() - g.rat.num().degree();
    const int n = m + deficit;

    RationalSplit out;
    out.m = m;
    out.n = n;
    out.axis_zeros = axis;
    Poly one_plus_s({Cplx(1.0), Cplx(1.0)});
    out.g2 = RationalFn(Poly::from_roots(axis, Cplx(1.0)), one_plus_s.pow(n));
    // G1 = g / G2, assembled from the off-axis zeros so the axis roots cancel
    // exactly rather than through numeric reduction.
    out.g1 = RationalFn(Poly::from_roots(offaxis, g.rat.num().lead()) * one_plus_s.pow(n),
                        g.rat.den());
    return out;
}

InnerTestResult inner_test_halfplane(const HalfPlaneRational& candidate) {
    InnerTestResult res;
    double worst_pole = -std::numeric_limits<double>::infinity();
    for (const auto& p : candidate.rat.poles()) {
        worst_pole = std::max(worst_pole, p.real());
    }
    if (worst_pole > 1e-9) {
        res.inner = false;
        res.violation = worst_pole;
        std::ostringstream os;
        os << "pole with real part " << worst_pole << " in the right half-plane";
        res.reason = os.str();
        return res;
    }
    double dev = 0.0;
    for (int i = 1; i <= 64; ++i) {
        double y = std::tan(std::numbers::pi * (i / 65.0 - 0.5));
        dev = std::max(dev, std::abs(std::abs(candidate.eval(Cplx(0.0, y))) - 1.0));
    }
    res.violation = dev;
    res.inner = dev <= 1e-6;
    res.reason = res.inner ? "unimodular on the axis" : "boundary modulus deviates";
    return res;
}

} // namespace nisv
