#include "nisv/subspaces.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace nisv {

namespace {

Mat stack_columns(const std::vector<Vec>& cols, int order) {
    Mat A(order, static_cast<Eigen::Index>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != order) {
            throw std::invalid_argument("generator order mismatch");
        }
        A.col(static_cast<Eigen::Index>(j)) = cols[j];
    }
    return A;
}

Frame orth_matrix(const Mat& A, double rel_tol, const std::string& provenance) {
    if (A.cols() == 0) return Frame(Mat(A.rows(), 0), provenance);
    Eigen::BDCSVD<Mat> svd(A, Eigen::ComputeThinU);
    const auto& s = svd.singularValues();
    if (s.size() == 0 || s(0) == 0.0) {
        throw std::invalid_argument("orthonormalize: all generators are zero");
    }
    int r = 0;
    while (r < s.size() && s(r) > rel_tol * s(0)) ++r;
    return Frame(svd.matrixU().leftCols(r), provenance);
}

} // namespace

Frame::Frame(Mat basis, std::string provenance)
    : basis_(std::move(basis)), provenance_(std::move(provenance)) {}

double Frame::gram_defect() const {
    if (dim() == 0) return 0.0;
    Mat g = basis_.adjoint() * basis_;
    return (g - Mat::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

double Frame::distance(const Vec& x) const {
    Vec r = x;
    if (dim() > 0) r -= basis_ * (basis_.adjoint() * x);
    return r.norm();
}

void GenSet::add(const HardyFunction& f) {
    if (order == 0) order = f.order();
    cols.push_back(f.coeffs());
}

void GenSet::add(Vec v) {
    if (order == 0) order = static_cast<int>(v.size());
    cols.push_back(std::move(v));
}

void GenSet::append(const GenSet& o) {
    if (order == 0) order = o.order;
    for (const auto& c : o.cols) cols.push_back(c);
}

Frame GenSet::orth(double rel_tol) const {
    return orth_matrix(stack_columns(cols, order), rel_tol, provenance);
}

GenSet GenSet::multiplied(const SymbolExpr& h) const {
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    auto hv = h.eval_on_grid(grid);
    GenSet out;
    out.order = order;
    out.provenance = provenance + "*symbol";
    for (const auto& c : cols) {
        std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j) {
            samples[static_cast<size_t>(j)] =
                evaluate_coeffs(c, grid.node(j)) * hv[static_cast<size_t>(j)];
        }
        out.add(analyze_to_order(samples, order));
    }
    return out;
}

GenSet GenSet::composed(const SymbolExpr& phi) const {
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    auto pv = phi.eval_on_grid(grid);
    GenSet out;
    out.order = order;
    out.provenance = provenance + " o phi";
    for (const auto& c : cols) {
        std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j) {
            samples[static_cast<size_t>(j)] = evaluate_coeffs(c, pv[static_cast<size_t>(j)]);
        }
        out.add(analyze_to_order(samples, order));
    }
    return out;
}

Frame orthonormalize(const std::vector<HardyFunction>& generators, double rel_tol) {
    if (generators.empty()) {
        throw std::invalid_argument("orthonormalize: need at least one generator");
    }
    GenSet g;
    for (const auto& f : generators) g.add(f);
    g.provenance = "orthonormalize";
    return g.orth(rel_tol);
}

double subspace_defect(const Frame& A, const Frame& B) {
    if (A.dim() == 0) return 0.0;
    if (B.dim() == 0) return 1.0;
    if (A.order() != B.order()) {
        throw std::invalid_argument("subspace_defect: order mismatch");
    }
    Mat R = A.basis() - B.basis() * (B.basis().adjoint() * A.basis());
    Eigen::BDCSVD<Mat> svd(R);
    double d = svd.singularValues()(0);
    return std::min(d, 1.0);
}

GapResult subspace_gap(const Frame& A, const Frame& B) {
    GapResult r;
    r.defect_ab = subspace_defect(A, B);
    r.defect_ba = subspace_defect(B, A);
    r.gap = std::max(r.defect_ab, r.defect_ba);
    return r;
}

namespace {

// Orthonormal basis of {f in span M : row * coeffs(f) = 0}, expressed as
// coefficient columns. row acts on frame coordinates.
Mat slice_null_basis(const Frame& M, const Eigen::RowVectorXcd& row) {
    if (row.norm() < 1e-13) return M.basis();
    Eigen::JacobiSVD<Mat> svd(row, Eigen::ComputeFullV);
    // Right singular vectors beyond the first span the null space.
    Mat V = svd.matrixV();
    return M.basis() * V.rightCols(V.cols() - 1);
}

} // namespace

HardyFunction hitt_extremal(const Frame& M, double* conditioning) {
    if (M.dim() == 0) {
        throw std::invalid_argument("hitt_extremal: empty subspace");
    }
    // in-span representer of f -> f(0): coordinates conj(row of values at 0)
    Vec coords(M.dim());
    for (int k = 0; k < M.dim(); ++k) coords[k] = std::conj(M.basis()(0, k));
    double n = coords.norm();
    if (conditioning) *conditioning = n;
    if (n < 1e-14) {
        throw std::invalid_argument("hitt_extremal: every element vanishes at the origin");
    }
    Vec u = M.basis() * (coords / n);
    // u(0) = n > 0 automatically; rotate away any residual phase
    Cplx u0 = u[0];
    u *= std::conj(u0) / std::abs(u0);
    return HardyFunction(std::move(u));
}

double near_sstar_defect(const Frame& M, const Frame& target) {
    if (M.dim() == 0) return 0.0;
    Eigen::RowVectorXcd ev(M.dim());
    for (int k = 0; k < M.dim(); ++k) ev(k) = M.basis()(0, k); // f(0) per column
    Mat M0 = slice_null_basis(M, ev);
    if (M0.cols() == 0) return 0.0;
    const int n = M.order();
    Mat shifted = Mat::Zero(n, M0.cols());
    shifted.topRows(n - 1) = M0.bottomRows(n - 1);
    Mat R = shifted - target.basis() * (target.basis().adjoint() * shifted);
    Eigen::BDCSVD<Mat> svd(R);
    return std::min(svd.singularValues()(0), 1.0);
}

double near_sstar_defect(const Frame& M) { return near_sstar_defect(M, M); }

double near_div_defect(const Frame& M, const std::vector<Automorphism>& psis) {
    if (M.dim() == 0) return 0.0;
    const int n = M.order();
    BoundaryGrid grid(BoundaryGrid::for_order(n));
    double worst = 0.0;
    for (const auto& psi : psis) {
        const Cplx a = psi.zero();
        Eigen::RowVectorXcd ev(M.dim());
        for (int k = 0; k < M.dim(); ++k) ev(k) = evaluate_coeffs(M.basis().col(k), a);
        Mat M0 = slice_null_basis(M, ev);
        if (M0.cols() == 0) continue;
        Mat images(n, M0.cols());
        for (int k = 0; k < M0.cols(); ++k) {
            std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
            for (int j = 0; j < grid.size(); ++j) {
                Cplx w = grid.node(j);
                samples[static_cast<size_t>(j)] =
                    evaluate_coeffs(M0.col(k), w) / psi.eval(w);
            }
            images.col(k) = analyze_to_order(samples, n).coeffs();
        }
        Mat R = images - M.basis() * (M.basis().adjoint() * images);
        Eigen::BDCSVD<Mat> svd(R);
        worst = std::max(worst, std::min(svd.singularValues()(0), 1.0));
    }
    return worst;
}

GenSet cyclic_disc_generators(const SymbolExpr& h, double delta, int mpts, int order) {
    if (delta <= 0.0) throw std::invalid_argument("cyclic_disc: delta must be positive");
    if (mpts < 1) throw std::invalid_argument("cyclic_disc: need at least one sample");
    if (!h.analytic_in_closed_disc()) {
        throw std::invalid_argument("cyclic_disc: generator has a pole in the closed disc");
    }
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    auto hv = h.eval_on_grid(grid);
    GenSet out;
    out.order = order;
    out.provenance = "cyclic-disc";
    for (int i = 0; i < mpts; ++i) {
        double lam = mpts == 1 ? 0.0 : delta * i / (mpts - 1);
        std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j) {
            Cplx w = grid.node(j);
            samples[static_cast<size_t>(j)] =
                hv[static_cast<size_t>(j)] * std::exp(-lam * (1.0 - w) / (1.0 + w));
        }
        out.add(analyze_to_order(samples, order));
    }
    return out;
}

Frame cyclic_disc(const SymbolExpr& h, double delta, int mpts, int order, double rel_tol) {
    return cyclic_disc_generators(h, delta, mpts, order).orth(rel_tol);
}

GenSet cyclic_halfplane_generators(const HalfPlaneRational& g, double delta, int mpts, int order) {
    if (delta <= 0.0) throw std::invalid_argument("cyclic_halfplane: delta must be positive");
    if (mpts < 1) throw std::invalid_argument("cyclic_halfplane: need at least one sample");
    if (!g.in_h2()) {
        throw std::invalid_argument("cyclic_halfplane: generator not in H^2 of the half-plane");
    }
    GenSet out;
    out.order = order;
    out.provenance = "cyclic-halfplane";
    for (int i = 0; i < mpts; ++i) {
        double lam = mpts == 1 ? 0.0 : delta * i / (mpts - 1);
        out.add(v_inverse(HalfPlaneRational{g.rat, g.delay + lam}, order));
    }
    return out;
}

Frame cyclic_halfplane(const HalfPlaneRational& g, double delta, int mpts, int order,
                       double rel_tol) {
    return cyclic_halfplane_generators(g, delta, mpts, order).orth(rel_tol);
}

GenSet model_space_generators(const SymbolExpr& theta, int order, int model_samples) {
    auto [R, delta] = theta.split_singular();
    if (delta <= 0.0) {
        throw std::invalid_argument("model_space_generators: rational inner functions use the complement route");
    }
    BoundaryGrid grid(BoundaryGrid::for_order(order));
    auto Rv = R.eval_on_grid(grid);

    GenSet out;
    out.order = order;
    out.provenance = "model-structure";

    // K_R part: complement of {P_N(R z^k)} inside order-N space.
    {
        Mat cols(order, order);
        for (int k = 0; k < order; ++k) {
            std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
            for (int j = 0; j < grid.size(); ++j) {
                Cplx w = grid.node(j);
                Cplx wk = std::pow(w, k);
                samples[static_cast<size_t>(j)] = Rv[static_cast<size_t>(j)] * wk;
            }
            cols.col(k) = analyze_to_order(samples, order).coeffs();
        }
        Eigen::BDCSVD<Mat> svd(cols, Eigen::ComputeFullU);
        const auto& s = svd.singularValues();
        int r = 0;
        while (r < s.size() && s(r) > 1e-8 * s(0)) ++r;
        Mat comp = svd.matrixU().rightCols(order - r);
        for (int k = 0; k < comp.cols(); ++k) out.add(Vec(comp.col(k)));
    }

    // R * K_{phi^delta} part, K_{phi^delta} = span{ S* phi^mu }.
    for (int i = 0; i < model_samples; ++i) {
        double mu = model_samples == 1 ? delta : delta * i / (model_samples - 1);
        Cplx phi0 = std::exp(Cplx(-mu));
        std::vector<Cplx> samples(static_cast<size_t>(grid.size()));
        for (int j = 0; j < grid.size(); ++j) {
            Cplx w = grid.node(j);
            Cplx phimu = std::exp(-mu * (1.0 - w) / (1.0 + w));
            samples[static_cast<size_t>(j)] = Rv[static_cast<size_t>(j)] * (phimu - phi0) / w;
        }
        out.add(analyze_to_order(samples, order));
    }
    return out;
}

} // namespace nisv
