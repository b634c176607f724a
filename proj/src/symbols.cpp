#include "nisv/symbols.hpp"

#include <cmath>
#include <sstream>

namespace nisv {

Automorphism::Automorphism(Cplx a, Cplx lambda) : a_(a), lambda_(lambda) {
    if (std::abs(a) >= 1.0) {
        throw std::invalid_argument("Automorphism: zero must lie in the open disc");
    }
    if (std::abs(std::abs(lambda) - 1.0) > 1e-12) {
        throw std::invalid_argument("Automorphism: lambda must be unimodular");
    }
}

Automorphism make_automorphism(Cplx a, Cplx lambda) { return Automorphism(a, lambda); }

struct SymbolExpr::Node {
    enum class Kind {
        Constant,
        Z,
        Rational,
        Mobius,
        ConjZPow,
        SingularInner,
        SqrtDeriv,
        Product,
        Power,
        Compose,
        ConjOnCircle,
    };

    Kind kind;
    Cplx cval{0.0};
    RationalFn rat;
    std::optional<Automorphism> mob;
    int ipar = 0;
    double tpar = 0.0;
    std::vector<SymbolExpr> children;
};

using Kind = SymbolExpr::Node::Kind;

namespace {

void require_on_circle(Cplx z, const char* what) {
    if (std::abs(std::abs(z) - 1.0) > 1e-9) {
        throw std::domain_error(std::string(what) + ": evaluation point must lie on the unit circle");
    }
}

Cplx ipow(Cplx z, int k) {
    Cplx r(1.0);
    int n = k >= 0 ? k : -k;
    for (int i = 0; i < n; ++i) r *= z;
    return k >= 0 ? r : Cplx(1.0) / r;
}

} // namespace

SymbolExpr::SymbolExpr() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->cval = Cplx(1.0);
    node_ = std::move(n);
}

SymbolExpr SymbolExpr::constant(Cplx v) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Constant;
    n->cval = v;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::z() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Z;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::rational(RationalFn r) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Rational;
    n->rat = std::move(r);
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::mobius(Automorphism m) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Mobius;
    n->mob = m;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::conj_z_pow(int k) {
    if (k < 0) throw std::invalid_argument("conj_z_pow: power must be nonnegative");
    auto n = std::make_shared<Node>();
    n->kind = Kind::ConjZPow;
    n->ipar = k;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::singular_inner(double t) {
    if (t < 0.0) throw std::invalid_argument("singular_inner: exponent must be nonnegative");
    auto n = std::make_shared<Node>();
    n->kind = Kind::SingularInner;
    n->tpar = t;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::sqrt_deriv(Automorphism m) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::SqrtDeriv;
    n->mob = m;
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::compose(SymbolExpr outer, SymbolExpr inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Compose;
    n->children = {std::move(outer), std::move(inner)};
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::conj_on_circle(SymbolExpr e) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ConjOnCircle;
    n->children = {std::move(e)};
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::operator*(const SymbolExpr& o) const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->children = {*this, o};
    return SymbolExpr(std::move(n));
}

SymbolExpr SymbolExpr::pow(int k) const {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Power;
    n->ipar = k;
    n->children = {*this};
    return SymbolExpr(std::move(n));
}

Cplx SymbolExpr::eval(Cplx zv) const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant: return n.cval;
        case Kind::Z: return zv;
        case Kind::Rational: return n.rat.eval(zv);
        case Kind::Mobius: return n.mob->eval(zv);
        case Kind::ConjZPow:
            require_on_circle(zv, "conj(z)^k");
            return ipow(std::conj(zv), n.ipar);
        case Kind::SingularInner: {
            if (std::abs(1.0 + zv) < 1e-8) {
                throw std::domain_error("phi^t: essential singularity at z = -1");
            }
            return std::exp(-n.tpar * (1.0 - zv) / (1.0 + zv));
        }
        case Kind::SqrtDeriv: {
            const Automorphism& m = *n.mob;
            return m.sqrt_deriv_scale() / (1.0 - std::conj(m.zero()) * zv);
        }
        case Kind::Product: {
            Cplx r(1.0);
            for (const auto& ch : n.children) r *= ch.eval(zv);
            return r;
        }
        case Kind::Power: return ipow(n.children[0].eval(zv), n.ipar);
        case Kind::Compose: return n.children[0].eval(n.children[1].eval(zv));
        case Kind::ConjOnCircle:
            require_on_circle(zv, "conj(.)");
            return std::conj(n.children[0].eval(zv));
    }
    throw std::logic_error("SymbolExpr::eval: unreachable");
}

std::vector<Cplx> SymbolExpr::eval_on_grid(const BoundaryGrid& grid) const {
    std::vector<Cplx> vals(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) vals[static_cast<size_t>(j)] = eval(grid.node(j));
    return vals;
}

std::pair<SymbolExpr, double> SymbolExpr::split_singular() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::SingularInner: return {SymbolExpr::constant(Cplx(1.0)), n.tpar};
        case Kind::Product: {
            SymbolExpr r = SymbolExpr::constant(Cplx(1.0));
            double t = 0.0;
            bool first = true;
            for (const auto& ch : n.children) {
                auto [cr, ct] = ch.split_singular();
                t += ct;
                r = first ? cr : r * cr;
                first = false;
            }
            return {r, t};
        }
        case Kind::Power: {
            auto [br, bt] = n.children[0].split_singular();
            if (bt > 0.0 && n.ipar < 0) {
                throw std::invalid_argument("split_singular: negative power of a singular factor");
            }
            return {br.pow(n.ipar), bt * n.ipar};
        }
        case Kind::Compose:
        case Kind::ConjOnCircle: {
            // No singular factor may hide below these nodes.
            bool buried = false;
            for (const auto& ch : n.children) {
                if (ch.split_singular().second != 0.0) buried = true;
            }
            if (buried) {
                throw std::invalid_argument("split_singular: singular factor under composition/conjugation");
            }
            return {*this, 0.0};
        }
        default: return {*this, 0.0};
    }
}

bool SymbolExpr::analytic_in_closed_disc() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant:
        case Kind::Z:
        case Kind::Mobius:
        case Kind::SingularInner:
        case Kind::SqrtDeriv:
            return true;
        case Kind::Rational: {
            for (const auto& p : n.rat.poles()) {
                if (std::abs(p) <= 1.0 + 1e-9) return false;
            }
            return true;
        }
        case Kind::ConjZPow: return n.ipar == 0;
        case Kind::ConjOnCircle: return false;
        case Kind::Product:
        case Kind::Compose: {
            for (const auto& ch : n.children) {
                if (!ch.analytic_in_closed_disc()) return false;
            }
            return true;
        }
        case Kind::Power:
            return n.ipar >= 0 && n.children[0].analytic_in_closed_disc();
    }
    return false;
}

bool SymbolExpr::antianalytic_on_circle() const {
    const Node& n = *node_;
    switch (n.kind) {
        case Kind::Constant: return true;
        case Kind::ConjZPow: return true;
        case Kind::ConjOnCircle: return n.children[0].analytic_in_closed_disc();
        case Kind::Product: {
            for (const auto& ch : n.children) {
                if (!ch.antianalytic_on_circle()) return false;
            }
            return true;
        }
        case Kind::Power:
            return n.ipar >= 0 && n.children[0].antianalytic_on_circle();
        default: return false;
    }
}

std::string SymbolExpr::str() const {
    const Node& n = *node_;
    std::ostringstream os;
    switch (n.kind) {
        case Kind::Constant: os << n.cval.real(); if (n.cval.imag() != 0) os << "+" << n.cval.imag() << "i"; break;
        case Kind::Z: os << "z"; break;
        case Kind::Rational: os << n.rat.str(); break;
        case Kind::Mobius: os << "blaschke(" << n.mob->zero().real() << (n.mob->zero().imag() ? "+i..." : "") << ")"; break;
        case Kind::ConjZPow: os << "conj(z)^" << n.ipar; break;
        case Kind::SingularInner: os << "phi(" << n.tpar << ")"; break;
        case Kind::SqrtDeriv: os << "sqrtderiv"; break;
        case Kind::Product: os << n.children[0].str() << "*" << n.children[1].str(); break;
        case Kind::Power: os << "(" << n.children[0].str() << ")^" << n.ipar; break;
        case Kind::Compose: os << "compose(" << n.children[0].str() << "," << n.children[1].str() << ")"; break;
        case Kind::ConjOnCircle: os << "conj(" << n.children[0].str() << ")"; break;
    }
    return os.str();
}

InnerOuter inner_outer_rational(const RationalFn& f) {
    if (f.num().is_zero()) {
        throw std::invalid_argument("inner_outer_rational: zero function");
    }
    for (const auto& p : f.poles()) {
        if (std::abs(p) <= 1.0 + 1e-9) {
            throw std::invalid_argument("inner_outer_rational: pole in the closed disc, not in H^2");
        }
    }
    std::vector<Cplx> inside, outer_roots;
    for (const auto& r : f.zeros()) {
        double m = std::abs(r);
        if (m < 1.0 - 1e-8) {
            inside.push_back(r);
        } else if (m <= 1.0 + 1e-8) {
            outer_roots.push_back(r / m); // snap to the circle
        } else {
            outer_roots.push_back(r);
        }
    }
    // f = lc * prod(z - r) / den. For each inside root, (z - r) = -(r - z)
    // = -b_r(z)(1 - conj(r) z), so the Blaschke part peels off exactly.
    SymbolExpr inner = SymbolExpr::constant(Cplx(1.0));
    for (const auto& r : inside) {
        inner = inner * SymbolExpr::mobius(blaschke(r));
    }
    Cplx lc = f.num().lead();
    Cplx sign = inside.size() % 2 == 0 ? Cplx(1.0) : Cplx(-1.0);
    Poly outer_num = Poly::from_roots(outer_roots, lc * sign);
    for (const auto& r : inside) {
        outer_num = outer_num * Poly({Cplx(1.0), -std::conj(r)});
    }
    RationalFn outer(outer_num, f.den());

    // Normalize the unimodular constant so that inner(1) = 1.
    Cplx at1 = inner.eval(Cplx(1.0));
    Cplx gamma = std::conj(at1);
    InnerOuter io;
    io.inner = SymbolExpr::constant(gamma) * inner;
    io.outer = outer * std::conj(gamma);
    io.blaschke_degree = static_cast<int>(inside.size());
    return io;
}

SymbolExpr pushforward_symbol(const SymbolExpr& F, const Automorphism& psi) {
    return SymbolExpr::compose(F, SymbolExpr::mobius(psi)) * SymbolExpr::mobius(psi) *
           SymbolExpr::conj_z_pow(1);
}

HardyFunction complement_vector(const SymbolExpr& theta, const Automorphism& psi, int order) {
    const Cplx a = psi.zero();
    const Cplx theta0 = theta.eval(Cplx(0.0));
    const Cplx num_at_a = a * theta.eval(psi.eval(a)) - a * theta0;
    if (std::abs(num_at_a) > 1e-8) {
        throw std::invalid_argument("complement_vector: numerator does not vanish at the automorphism zero");
    }
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        Cplx w = grid.node(j);
        samples[static_cast<size_t>(j)] = (w * theta.eval(psi.eval(w)) - a * theta0) / (w - a);
    }
    return analyze_to_order(samples, order);
}

} // namespace nisv
