#include "nisv/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nisv {

namespace {
constexpr double kTrimTol = 0.0; // exact zeros only; callers decide numerics
}

Poly::Poly(std::vector<Cplx> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Cplx(0.0));
    trim();
}

Poly::Poly(std::initializer_list<Cplx> coeffs) : c_(coeffs) {
    if (c_.empty()) c_.push_back(Cplx(0.0));
    trim();
}

void Poly::trim() {
    while (c_.size() > 1 && std::abs(c_.back()) <= kTrimTol) c_.pop_back();
}

bool Poly::is_zero() const {
    return c_.size() == 1 && c_[0] == Cplx(0.0);
}

Poly Poly::from_roots(const std::vector<Cplx>& roots, Cplx lead) {
    Poly p = Poly::constant(lead);
    for (const auto& r : roots) {
        p = p * Poly({-r, Cplx(1.0)});
    }
    return p;
}

Cplx Poly::eval(Cplx x) const {
    Cplx acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly::constant(Cplx(0.0));
    std::vector<Cplx> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<double>(k);
    return Poly(std::move(d));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Cplx> out(std::max(c_.size(), o.c_.size()), Cplx(0.0));
    for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
    return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Cplx> out(std::max(c_.size(), o.c_.size()), Cplx(0.0));
    for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[k] -= o.c_[k];
    return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& o) const {
    std::vector<Cplx> out(c_.size() + o.c_.size() - 1, Cplx(0.0));
    for (size_t i = 0; i < c_.size(); ++i) {
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(out));
}

Poly Poly::operator*(Cplx s) const {
    std::vector<Cplx> out = c_;
    for (auto& v : out) v *= s;
    return Poly(std::move(out));
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(Cplx(1.0));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

std::vector<Cplx> Poly::roots() const {
    // Drop numerically negligible leading coefficients first.
    std::vector<Cplx> c = c_;
    double scale = 0.0;
    for (const auto& v : c) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return {};
    while (c.size() > 1 && std::abs(c.back()) < 1e-14 * scale) c.pop_back();
    const int n = static_cast<int>(c.size()) - 1;
    if (n < 1) return {};

    Mat companion = Mat::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<size_t>(i)] / c.back();
    Eigen::ComplexEigenSolver<Mat> es(companion, false);
    std::vector<Cplx> out(static_cast<size_t>(n));
    Poly p(c);
    Poly dp = p.derivative();
    for (int i = 0; i < n; ++i) {
        Cplx r = es.eigenvalues()[i];
        for (int it = 0; it < 2; ++it) { // Newton polish
            Cplx d = dp.eval(r);
            if (std::abs(d) < 1e-30) break;
            Cplx step = p.eval(r) / d;
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
            r -= step;
        }
        out[static_cast<size_t>(i)] = r;
    }
    std::sort(out.begin(), out.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

std::string Poly::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Cplx v = coeff(k);
        if (v == Cplx(0.0) && degree() > 0) continue;
        if (!first) os << " + ";
        os << "(" << v.real();
        if (v.imag() != 0.0) os << (v.imag() > 0 ? "+" : "") << v.imag() << "i";
        os << ")";
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    reduce();
}

void RationalFn::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(Cplx(1.0));
        return;
    }
    if (num_.degree() >= 1 && den_.degree() >= 1) {
        auto nr = num_.roots();
        auto dr = den_.roots();
        double scale = 1.0;
        for (const auto& r : nr) scale = std::max(scale, std::abs(r));
        for (const auto& r : dr) scale = std::max(scale, std::abs(r));
        std::vector<Cplx> keep_n;
        std::vector<bool> used(dr.size(), false);
        for (const auto& r : nr) {
            bool cancelled = false;
            for (size_t j = 0; j < dr.size(); ++j) {
                if (!used[j] && std::abs(r - dr[j]) <= 1e-10 * scale) {
                    used[j] = true;
                    cancelled = true;
                    break;
                }
            }
            if (!cancelled) keep_n.push_back(r);
        }
        if (keep_n.size() != nr.size()) {
            std::vector<Cplx> keep_d;
            for (size_t j = 0; j < dr.size(); ++j) {
                if (!used[j]) keep_d.push_back(dr[j]);
            }
            Cplx ln = num_.lead(), ld = den_.lead();
            num_ = Poly::from_roots(keep_n, ln);
            den_ = Poly::from_roots(keep_d, ld);
        }
    }
    // Monic denominator.
    Cplx ld = den_.lead();
    num_ = num_ * (Cplx(1.0) / ld);
    den_ = den_ * (Cplx(1.0) / ld);
}

Cplx RationalFn::eval(Cplx x) const {
    if (std::abs(x) <= 1.0) {
        return num_.eval(x) / den_.eval(x);
    }
    // p(x)/q(x) = x^(dp-dq) * prev(p)(1/x) / prev(q)(1/x)
    Cplx ix = Cplx(1.0) / x;
    auto rev_eval = [&](const Poly& p) {
        Cplx acc(0.0);
        for (int k = 0; k <= p.degree(); ++k) acc = acc * ix + p.coeff(k);
        return acc;
    };
    Cplx pn = rev_eval(num_), pd = rev_eval(den_);
    int dd = num_.degree() - den_.degree();
    Cplx xp(1.0);
    for (int i = 0; i < std::abs(dd); ++i) xp *= x;
    return dd >= 0 ? pn / pd * xp : pn / pd / xp;
}

std::string RationalFn::str(const std::string& var) const {
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

// --- exact layer -----------------------------------------------------------

PolyQ::PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) c_.push_back(Rat(0));
    trim();
}

PolyQ::PolyQ(std::initializer_list<long long> ints) {
    for (long long v : ints) c_.push_back(Rat(v));
    if (c_.empty()) c_.push_back(Rat(0));
    trim();
}

void PolyQ::trim() {
    while (c_.size() > 1 && c_.back() == Rat(0)) c_.pop_back();
}

bool PolyQ::is_zero() const {
    return c_.size() == 1 && c_[0] == Rat(0);
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[k] += o.c_[k];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
    std::vector<Rat> out(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t k = 0; k < c_.size(); ++k) out[k] += c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) out[k] -= o.c_[k];
    return PolyQ(std::move(out));
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
    std::vector<Rat> out(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    }
    return PolyQ(std::move(out));
}

PolyQ PolyQ::pow(int k) const {
    PolyQ r = PolyQ::constant(Rat(1));
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool PolyQ::operator==(const PolyQ& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] != o.c_[k]) return false;
    }
    return true;
}

} // namespace nisv
