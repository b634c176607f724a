#include "nisv/analytic.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>

namespace nisv {

namespace {

// The FFTW planner is not re-entrant; plan creation is serialized.
// fftw_execute_dft on distinct buffers is safe without locking.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

void fft_forward(std::vector<Cplx>& data) {
    const int n = static_cast<int>(data.size());
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
}

} // namespace

BoundaryGrid::BoundaryGrid(int K) : K_(K) {
    if (!is_power_of_two(K)) {
        throw std::invalid_argument("BoundaryGrid: sample count must be a power of two");
    }
    nodes_.resize(static_cast<size_t>(K));
    for (int j = 0; j < K; ++j) {
        double theta = 2.0 * std::numbers::pi * (j + 0.5) / K;
        nodes_[static_cast<size_t>(j)] = Cplx(std::cos(theta), std::sin(theta));
    }
}

int BoundaryGrid::for_order(int order) {
    int k = 8;
    while (k < 4 * order) k <<= 1;
    return k;
}

double TwoSidedSpectrum::norm() const {
    double s = 0.0;
    for (const auto& c : bins_) s += std::norm(c);
    return std::sqrt(s);
}

HardyFunction::HardyFunction(std::initializer_list<Cplx> cs) {
    coeffs_.resize(static_cast<Eigen::Index>(cs.size()));
    Eigen::Index i = 0;
    for (const auto& c : cs) coeffs_[i++] = c;
}

TwoSidedSpectrum fourier_analyze(const std::vector<Cplx>& samples) {
    const int K = static_cast<int>(samples.size());
    if (!BoundaryGrid::is_power_of_two(K)) {
        throw std::invalid_argument("fourier_analyze: sample count must be a power of two");
    }
    for (const auto& s : samples) {
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
            throw std::domain_error("fourier_analyze: non-finite sample");
        }
    }
    std::vector<Cplx> bins = samples;
    fft_forward(bins);
    // c_m = (1/K) e^{-i pi m / K} * DFT_m, with m the signed representative.
    for (int i = 0; i < K; ++i) {
        int m = i <= K / 2 ? i : i - K;
        double phase = -std::numbers::pi * m / K;
        bins[static_cast<size_t>(i)] *= Cplx(std::cos(phase), std::sin(phase)) / static_cast<double>(K);
    }
    return TwoSidedSpectrum(std::move(bins), K);
}

HardyFunction project_plus(const TwoSidedSpectrum& spec, int order) {
    if (order <= 0) throw std::invalid_argument("project_plus: order must be positive");
    Vec out = Vec::Zero(order);
    int top = std::min(order - 1, spec.grid_size() / 2);
    for (int m = 0; m <= top; ++m) out[m] = spec.coeff(m);
    return HardyFunction(std::move(out));
}

HardyFunction analyze_to_order(const std::vector<Cplx>& samples, int order) {
    return project_plus(fourier_analyze(samples), order);
}

Cplx inner_product(const HardyFunction& f, const HardyFunction& g) {
    if (f.order() != g.order()) {
        throw std::invalid_argument("inner_product: order mismatch");
    }
    return g.coeffs().dot(f.coeffs()); // Eigen dot conjugates the left argument
}

Cplx evaluate_coeffs(const Vec& coeffs, Cplx z) {
    Cplx acc(0.0);
    for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) {
        acc = acc * z + coeffs[k];
    }
    return acc;
}

Cplx evaluate_disc(const HardyFunction& f, Cplx z) {
    if (std::abs(z) >= 1.0 + 1e-12) {
        throw std::domain_error("evaluate_disc: point outside the closed disc");
    }
    return evaluate_coeffs(f.coeffs(), z);
}

HardyFunction backward_shift(const HardyFunction& f) {
    const int n = f.order();
    Vec out = Vec::Zero(n);
    if (n > 1) out.head(n - 1) = f.coeffs().tail(n - 1);
    return HardyFunction(std::move(out));
}

std::vector<Cplx> evaluate_on_grid(const HardyFunction& f, const BoundaryGrid& grid) {
    std::vector<Cplx> vals(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        vals[static_cast<size_t>(j)] = evaluate_coeffs(f.coeffs(), grid.node(j));
    }
    return vals;
}

} // namespace nisv
