#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <vector>

namespace nisv {

using Cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Boundary sampling grid on the unit circle.
///
/// Nodes carry a half-step offset, w_j = exp(2*pi*i*(j+1/2)/K), so that
/// neither z = 1 nor z = -1 is ever a sample point. K must be a power of two.
class BoundaryGrid {
public:
    explicit BoundaryGrid(int K);

    int size() const { return K_; }
    Cplx node(int j) const { return nodes_[j]; }
    const std::vector<Cplx>& nodes() const { return nodes_; }

    static bool is_power_of_two(int k) { return k > 0 && (k & (k - 1)) == 0; }

    /// Smallest power of two >= max(4*order, 8). The 4x oversampling bounds
    /// aliasing for products and compositions of the smooth symbols used here.
    static int for_order(int order);

private:
    int K_;
    std::vector<Cplx> nodes_;
};

/// Two-sided Fourier coefficients c_m for -K/2 < m <= K/2.
/// Storage is by FFT bin: bin i holds mode i for i <= K/2 and mode i-K above.
class TwoSidedSpectrum {
public:
    TwoSidedSpectrum(std::vector<Cplx> bins, int K) : bins_(std::move(bins)), K_(K) {}

    int grid_size() const { return K_; }

    /// Coefficient of mode m, -K/2 < m <= K/2.
    Cplx coeff(int m) const {
        int i = m >= 0 ? m : m + K_;
        return bins_[static_cast<size_t>(i)];
    }

    const std::vector<Cplx>& bins() const { return bins_; }

    double norm() const;

private:
    std::vector<Cplx> bins_;
    int K_;
};

/// Element of H^2(D) as a truncated Taylor coefficient vector (a_0..a_{N-1}).
/// The induced L^2 norm equals the Euclidean norm of the coefficients.
class HardyFunction {
public:
    HardyFunction() = default;
    explicit HardyFunction(Vec coeffs) : coeffs_(std::move(coeffs)) {}
    HardyFunction(std::initializer_list<Cplx> cs);

    static HardyFunction zero(int order) { return HardyFunction(Vec::Zero(order)); }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Vec& coeffs() const { return coeffs_; }
    Vec& coeffs() { return coeffs_; }
    Cplx coeff(int k) const { return k < order() ? coeffs_[k] : Cplx(0.0); }

    double norm() const { return coeffs_.norm(); }

private:
    Vec coeffs_;
};

/// Interpolating Fourier analysis of samples taken on the half-offset grid.
/// The result satisfies sum_m c_m w_j^m = samples[j] at every node.
TwoSidedSpectrum fourier_analyze(const std::vector<Cplx>& samples);

/// Riesz projection onto the analytic part, truncated to the given order.
/// Keeps modes 0 <= m < order; idempotent.
HardyFunction project_plus(const TwoSidedSpectrum& spec, int order);

/// Analyze-and-project in one step.
HardyFunction analyze_to_order(const std::vector<Cplx>& samples, int order);

/// Standard H^2 pairing: sum a_m conj(b_m). Orders must match.
Cplx inner_product(const HardyFunction& f, const HardyFunction& g);

/// Taylor sum at a point of the closed disc. Throws for |z| > 1 + eps.
Cplx evaluate_disc(const HardyFunction& f, Cplx z);

/// Coefficient left shift: (S*f)(z) = (f(z) - f(0))/z.
HardyFunction backward_shift(const HardyFunction& f);

/// Values of the truncated Taylor polynomial at every grid node.
std::vector<Cplx> evaluate_on_grid(const HardyFunction& f, const BoundaryGrid& grid);

/// Horner evaluation of a coefficient vector at one point (|z| <= 1 stable).
Cplx evaluate_coeffs(const Vec& coeffs, Cplx z);

} // namespace nisv
