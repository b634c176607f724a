#include "nisv/operators.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <sstream>

namespace nisv {

OperatorMatrix toeplitz_matrix(const SymbolExpr& phi, int order, int rows) {
    if (rows < 0) rows = order;
    if (rows < order) throw std::invalid_argument("toeplitz_matrix: rows < order");
    BoundaryGrid grid(BoundaryGrid::for_order(std::max(order, rows)));
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        Cplx v = phi.eval(grid.node(j));
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()) || std::abs(v) > 1e12) {
            throw std::domain_error("toeplitz_matrix: symbol unbounded on the grid");
        }
        samples[static_cast<size_t>(j)] = v;
    }
    TwoSidedSpectrum spec = fourier_analyze(samples);

    // Structural sparsity: one-sided symbols have exactly one-sided spectra;
    // the aliased counterpart modes are dropped rather than smeared into the
    // wrong triangle (the S*-commutation of co-analytic compressions is exact
    // only with the triangle enforced).
    const bool upper = phi.antianalytic_on_circle();
    const bool lower = phi.analytic_in_closed_disc();

    OperatorMatrix out;
    out.order = order;
    out.provenance = "toeplitz(" + phi.str() + ")";
    out.entries = Mat::Zero(rows, order);
    for (int j = 0; j < rows; ++j) {
        for (int k = 0; k < order; ++k) {
            const int m = j - k;
            if ((upper && m > 0) || (lower && m < 0)) continue;
            out.entries(j, k) = spec.coeff(m);
        }
    }
    return out;
}

KernelResult numeric_kernel(const OperatorMatrix& M, double tau) {
    if (tau <= 0.0 || tau >= 1.0) throw std::invalid_argument("numeric_kernel: tau in (0,1)");
    Eigen::BDCSVD<Mat> svd(M.entries, Eigen::ComputeThinV);
    const auto& s = svd.singularValues();
    const int n = static_cast<int>(s.size());

    KernelResult res;
    res.sigma_max = s(0);
    if (res.sigma_max == 0.0) {
        res.frame = Frame(Mat::Identity(M.order, M.order), "kernel(zero operator)");
        res.dim = M.order;
        res.spectral_gap = std::numeric_limits<double>::infinity();
        return res;
    }
    int cut = n;
    while (cut > 0 && s(cut - 1) <= tau * res.sigma_max) --cut;
    res.dim = n - cut;
    if (res.dim == 0) {
        res.frame = Frame(Mat(M.entries.cols(), 0), "kernel(" + M.provenance + ")");
        res.spectral_gap = std::numeric_limits<double>::infinity();
        return res;
    }
    double top_of_cluster = s(cut);
    double above = cut > 0 ? s(cut - 1) : res.sigma_max;
    res.spectral_gap = top_of_cluster > 0.0 ? above / top_of_cluster
                                            : std::numeric_limits<double>::infinity();
    if (cut > 0 && res.spectral_gap < 10.0) {
        std::ostringstream os;
        os << "numeric_kernel: no certified spectral gap at the cut (factor " << res.spectral_gap
           << ", sigma " << above << " vs " << top_of_cluster << ")";
        throw IllConditionedKernel(os.str(), res.spectral_gap);
    }
    res.frame = Frame(svd.matrixV().rightCols(res.dim), "kernel(" + M.provenance + ")");
    return res;
}

double boundary_modulus_deviation(const SymbolExpr& theta, int order) {
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    double dev = 0.0;
    for (int j = 0; j < grid.size(); ++j) {
        dev = std::max(dev, std::abs(std::abs(theta.eval(grid.node(j))) - 1.0));
    }
    return dev;
}

Frame model_space_frame(const SymbolExpr& theta, int order, double rel_tol, int model_samples) {
    if (boundary_modulus_deviation(theta, order) > 1e-6) {
        throw std::invalid_argument("model_space_frame: symbol is not inner (boundary modulus deviates)");
    }
    auto [R, delta] = theta.split_singular();
    if (delta > 0.0) {
        return model_space_generators(theta, order, model_samples).orth(rel_tol);
    }
    // Rational route: complement of {P_N(theta z^k) : k=0..N-1}.
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    auto tv = theta.eval_on_grid(grid);
    Mat cols(order, order);
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    std::vector<Cplx> wk(static_cast<size_t>(grid.size()), Cplx(1.0));
    for (int k = 0; k < order; ++k) {
        for (int j = 0; j < grid.size(); ++j) {
            samples[static_cast<size_t>(j)] = tv[static_cast<size_t>(j)] * wk[static_cast<size_t>(j)];
            wk[static_cast<size_t>(j)] *= grid.node(j);
        }
        cols.col(k) = analyze_to_order(samples, order).coeffs();
    }
    Eigen::BDCSVD<Mat> svd(cols, Eigen::ComputeFullU);
    const auto& s = svd.singularValues();
    int r = 0;
    while (r < s.size() && s(r) > 1e-8 * s(0)) ++r;
    return Frame(svd.matrixU().rightCols(order - r), "model(" + theta.str() + ")");
}

HardyFunction compose_apply(const SymbolExpr& phi, const HardyFunction& f) {
    const int n = f.order();
    BoundaryGrid grid(BoundaryGrid::for_order(n));
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        Cplx inner = phi.eval(grid.node(j));
        if (std::abs(inner) > 1.0 + 1e-9) {
            throw std::domain_error("compose_apply: |phi| > 1 on the circle, not an inner function");
        }
        samples[static_cast<size_t>(j)] = evaluate_coeffs(f.coeffs(), inner);
    }
    return analyze_to_order(samples, n);
}

HardyFunction compose_apply(const Automorphism& psi, const HardyFunction& f) {
    return compose_apply(SymbolExpr::mobius(psi), f);
}

HardyFunction toeplitz_apply(const SymbolExpr& phi, const HardyFunction& f) {
    const int n = f.order();
    BoundaryGrid grid(BoundaryGrid::for_order(n));
    std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
    for (int j = 0; j < grid.size(); ++j) {
        Cplx w = grid.node(j);
        samples[static_cast<size_t>(j)] = phi.eval(w) * evaluate_coeffs(f.coeffs(), w);
    }
    return analyze_to_order(samples, n);
}

} // namespace nisv
