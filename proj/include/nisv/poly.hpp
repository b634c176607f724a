#pragma once

#include "nisv/analytic.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nisv {

/// Dense univariate polynomial over C, coefficients ascending.
class Poly {
public:
    Poly() : c_{Cplx(0.0)} {}
    explicit Poly(std::vector<Cplx> coeffs);
    Poly(std::initializer_list<Cplx> coeffs);

    static Poly constant(Cplx v) { return Poly({v}); }
    static Poly variable() { return Poly({Cplx(0.0), Cplx(1.0)}); }
    /// Monic product of (x - r) over the given roots, scaled by lead.
    static Poly from_roots(const std::vector<Cplx>& roots, Cplx lead = Cplx(1.0));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const;
    Cplx coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Cplx(0.0);
    }
    const std::vector<Cplx>& coeffs() const { return c_; }
    Cplx lead() const { return c_.back(); }

    Cplx eval(Cplx x) const;
    Poly derivative() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Cplx s) const;
    Poly pow(int k) const;

    /// All complex roots via the companion-matrix eigenvalues, polished with
    /// two Newton steps. Empty for constants.
    std::vector<Cplx> roots() const;

    std::string str(const std::string& var = "z") const;

private:
    void trim();
    std::vector<Cplx> c_;
};

/// Rational function num/den with a monic denominator and matching
/// root pairs cancelled.
class RationalFn {
public:
    RationalFn() : num_(Poly::constant(Cplx(0.0))), den_(Poly::constant(Cplx(1.0))) {}
    RationalFn(Poly num, Poly den);

    static RationalFn constant(Cplx v) { return RationalFn(Poly::constant(v), Poly::constant(Cplx(1.0))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    /// Robust evaluation; for |x| > 1 the reversed polynomials are used so
    /// large arguments do not overflow.
    Cplx eval(Cplx x) const;

    RationalFn operator*(const RationalFn& o) const { return RationalFn(num_ * o.num_, den_ * o.den_); }
    RationalFn operator*(Cplx s) const { return RationalFn(num_ * s, den_); }
    RationalFn inverse() const { return RationalFn(den_, num_); }

    std::vector<Cplx> zeros() const { return num_.roots(); }
    std::vector<Cplx> poles() const { return den_.roots(); }

    std::string str(const std::string& var = "z") const;

private:
    void reduce();
    Poly num_, den_;
};

// ---------------------------------------------------------------------------
// Exact-arithmetic layer (used by the zero-tolerance identity checks).

using Rat = boost::rational<long long>;

/// Polynomial with exact rational coefficients.
class PolyQ {
public:
    PolyQ() : c_{Rat(0)} {}
    explicit PolyQ(std::vector<Rat> coeffs);
    PolyQ(std::initializer_list<long long> ints);

    static PolyQ constant(Rat v) { return PolyQ(std::vector<Rat>{v}); }
    static PolyQ variable() { return PolyQ(std::vector<Rat>{Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const;
    Rat coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : Rat(0);
    }

    PolyQ operator+(const PolyQ& o) const;
    PolyQ operator-(const PolyQ& o) const;
    PolyQ operator*(const PolyQ& o) const;
    PolyQ pow(int k) const;
    bool operator==(const PolyQ& o) const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Exact rational function; equality is decided by cross multiplication.
struct RationalQ {
    PolyQ num;
    PolyQ den;

    RationalQ() : num(PolyQ::constant(Rat(0))), den(PolyQ::constant(Rat(1))) {}
    RationalQ(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) {}

    RationalQ operator+(const RationalQ& o) const {
        return {num * o.den + o.num * den, den * o.den};
    }
    RationalQ operator*(const RationalQ& o) const { return {num * o.num, den * o.den}; }
    bool operator==(const RationalQ& o) const { return num * o.den == o.num * den; }
};

} // namespace nisv
