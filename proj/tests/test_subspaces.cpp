#include "nisv/operators.hpp"
#include "nisv/subspaces.hpp"

#include <doctest.h>

#include <random>

using namespace nisv;

namespace {

HardyFunction unit(int order, int k) {
    Vec v = Vec::Zero(order);
    v[k] = 1.0;
    return HardyFunction(v);
}

} // namespace

TEST_CASE("orthonormalize drops dependent generators") {
    const int N = 32;
    Vec a = Vec::Zero(N), b = Vec::Zero(N), c = Vec::Zero(N);
    a[0] = 1.0;
    b[1] = 1.0;
    c[0] = 1.0;
    c[1] = 1.0;
    Frame f = orthonormalize({HardyFunction(a), HardyFunction(b), HardyFunction(c)}, 1e-10);
    CHECK(f.dim() == 2);
    CHECK(f.gram_defect() < 1e-12);

    Vec ka(N);
    for (int k = 0; k < N; ++k) ka[k] = std::pow(0.5, k);
    Frame single = orthonormalize({HardyFunction(ka)}, 1e-10);
    CHECK(single.dim() == 1);
    CHECK(std::abs(single.basis().col(0).norm() - 1.0) < 1e-14);

    CHECK_THROWS_AS(orthonormalize({HardyFunction::zero(N)}, 1e-10), std::invalid_argument);
}

TEST_CASE("cyclic family rank equals the Gram-matrix numerical rank") {
    const int N = 256;
    const int M = 33;
    GenSet gens = cyclic_disc_generators(SymbolExpr(), 1.0, M, N);
    Frame f = gens.orth(1e-8);

    // independent oracle: eigenvalues of the Gram matrix of the same columns
    Mat A(N, M);
    for (int j = 0; j < M; ++j) A.col(j) = gens.cols[static_cast<size_t>(j)];
    Mat G = A.adjoint() * A;
    Eigen::SelfAdjointEigenSolver<Mat> es(G);
    int rank = 0;
    double top = es.eigenvalues().maxCoeff();
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        if (es.eigenvalues()(i) > 1e-16 * top) ++rank; // sigma^2 threshold
    }
    CHECK(f.dim() == rank);
}

TEST_CASE("subspace gap properties") {
    const int N = 64;
    Frame A = orthonormalize({unit(N, 0), unit(N, 2)}, 1e-10);
    auto self_gap = subspace_gap(A, A);
    CHECK(self_gap.gap == 0.0);

    Frame one = orthonormalize({unit(N, 0)}, 1e-10);
    Frame zed = orthonormalize({unit(N, 1)}, 1e-10);
    auto g = subspace_gap(one, zed);
    CHECK(g.gap == doctest::Approx(1.0));
    CHECK(g.defect_ab == doctest::Approx(g.defect_ba));

    // symmetry, boundedness, invariance under unitary recombination
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<HardyFunction> gens1, gens2;
    for (int i = 0; i < 3; ++i) {
        Vec x(N), y(N);
        for (int k = 0; k < N; ++k) {
            x[k] = Cplx(u(rng), u(rng));
            y[k] = Cplx(u(rng), u(rng));
        }
        gens1.emplace_back(x);
        gens2.emplace_back(y);
    }
    Frame F1 = orthonormalize(gens1, 1e-10), F2 = orthonormalize(gens2, 1e-10);
    auto g12 = subspace_gap(F1, F2);
    auto g21 = subspace_gap(F2, F1);
    CHECK(g12.gap == doctest::Approx(g21.gap));
    CHECK(g12.gap <= 1.0);

    // recombine F1 columns by a random unitary (QR of a random matrix)
    Mat R(3, 3);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) R(i, j) = Cplx(u(rng), u(rng));
    }
    Eigen::HouseholderQR<Mat> qr(R);
    Mat Q = qr.householderQ();
    Frame F1r(F1.basis() * Q, "recombined");
    CHECK(subspace_gap(F1r, F2).gap == doctest::Approx(g12.gap).epsilon(1e-10));

    CHECK_THROWS_AS(subspace_defect(F1, orthonormalize({unit(32, 0)}, 1e-10)),
                    std::invalid_argument);
}

TEST_CASE("near S*-invariance defect") {
    const int N = 64;
    // model space: defect ~ 0
    Frame K = model_space_frame(SymbolExpr::z().pow(3), N);
    CHECK(near_sstar_defect(K) < 1e-12);

    // span{1, z^2}: the slice is span{z^2}, S* z^2 = z is orthogonal
    Frame M = orthonormalize({unit(N, 0), unit(N, 2)}, 1e-10);
    CHECK(near_sstar_defect(M) == doctest::Approx(1.0));

    // vacuous slice
    Frame just1 = orthonormalize({unit(N, 0)}, 1e-10);
    CHECK(near_sstar_defect(just1) == 0.0);

    // Toeplitz kernels are nearly S*-invariant: certified-kernel symbols
    for (int k = 1; k <= 3; ++k) {
        auto ker = numeric_kernel(toeplitz_matrix(SymbolExpr::conj_z_pow(k), 256), 1e-7);
        CHECK(near_sstar_defect(ker.frame) <= 5e-6);
    }
    Automorphism b(Cplx(0.5), Cplx(1.0));
    auto kb = numeric_kernel(
        toeplitz_matrix(SymbolExpr::conj_on_circle(SymbolExpr::z() * SymbolExpr::mobius(b)), 256),
        1e-7);
    CHECK(near_sstar_defect(kb.frame) <= 5e-6);

    // singular symbol, hard cluster
    auto ks = numeric_kernel(
        toeplitz_matrix(
            SymbolExpr::conj_on_circle(SymbolExpr::z().pow(3) * SymbolExpr::singular_inner(1.0)),
            256),
        1e-9);
    CHECK(near_sstar_defect(ks.frame) <= 1e-6);
}

TEST_CASE("hitt extremal function extraction") {
    const int N = 64;
    // M = (2+z) K_{z^2}: the extremal element is (2+z)/||2+z||
    Frame K = model_space_frame(SymbolExpr::z().pow(2), N);
    GenSet gens;
    gens.order = N;
    for (int k = 0; k < K.dim(); ++k) gens.add(Vec(K.basis().col(k)));
    SymbolExpr u_sym = SymbolExpr::rational(RationalFn(Poly({Cplx(2.0), Cplx(1.0)}),
                                                       Poly::constant(Cplx(1.0))));
    Frame M = gens.multiplied(u_sym).orth(1e-10);

    double cond = 0.0;
    HardyFunction u = hitt_extremal(M, &cond);
    CHECK(std::abs(u.norm() - 1.0) < 1e-12);
    CHECK(u.coeff(0).real() > 0.0);
    CHECK(std::abs(u.coeff(0).imag()) < 1e-13);
    CHECK(cond > 0.1);
    // by hand: M = span{(2,1,0), (0,2,1)}; the unit element orthogonal to the
    // vanishing-at-0 slice span{(0,2,1)} is (2, 1/5, -2/5)/sqrt(4.2)
    Vec expect = Vec::Zero(N);
    expect[0] = 2.0;
    expect[1] = 0.2;
    expect[2] = -0.4;
    expect /= std::sqrt(4.2);
    CHECK((u.coeffs() - expect).norm() < 1e-10);
    // orthogonal to the vanishing-at-0 slice: <u, (2+z)z> = 0
    Vec slice = Vec::Zero(N);
    slice[1] = 2.0;
    slice[2] = 1.0;
    CHECK(std::abs(u.coeffs().dot(slice)) < 1e-12);

    // every element vanishing at 0: extraction must refuse
    Frame z2only = orthonormalize({unit(N, 2)}, 1e-10);
    CHECK_THROWS_AS(hitt_extremal(z2only, nullptr), std::invalid_argument);
}

TEST_CASE("near division defect") {
    const int N = 128;
    Automorphism psi(Cplx(0.5), Cplx(1.0));

    // the full truncated H^2 is nearly invariant
    std::vector<HardyFunction> all;
    for (int k = 0; k < N; ++k) all.push_back(unit(N, k));
    Frame full = orthonormalize(all, 1e-12);
    CHECK(near_div_defect(full, {psi}) < 1e-10);

    // Hitt-like subspace (u o psi) C_psi(K_{z^2}) with u = 2 + z
    Frame K = model_space_frame(SymbolExpr::z().pow(2), N);
    GenSet composed;
    composed.order = N;
    for (int k = 0; k < K.dim(); ++k) composed.add(compose_apply(psi, K.column(k)));
    SymbolExpr u_of_psi = SymbolExpr::compose(
        SymbolExpr::rational(RationalFn(Poly({Cplx(2.0), Cplx(1.0)}), Poly::constant(Cplx(1.0)))),
        SymbolExpr::mobius(psi));
    Frame M = composed.multiplied(u_of_psi).orth(1e-8);
    CHECK(near_div_defect(M, {psi}) <= 1e-6);

    // two-generator negative branch: u vanishing at psi1(a2)
    Automorphism psi2(Cplx(-1.0 / 3.0), Cplx(1.0));
    Cplx bad = psi.eval(psi2.zero());
    SymbolExpr u_neg = SymbolExpr::rational(RationalFn(Poly({-bad, Cplx(1.0)}),
                                                       Poly::constant(Cplx(1.0))));
    SymbolExpr u_neg_of_psi = SymbolExpr::compose(u_neg, SymbolExpr::mobius(psi));
    Frame Mneg = composed.multiplied(u_neg_of_psi).orth(1e-8);
    CHECK(near_div_defect(Mneg, {psi2}) >= 0.1);

    CHECK_THROWS_AS(near_div_defect(M, {Automorphism(Cplx(1.1), Cplx(1.0))}),
                    std::invalid_argument);

    // three generators: still nearly invariant when u avoids every psi1(a_k)
    Automorphism psi3(Cplx(0.2, 0.3), Cplx(1.0));
    CHECK(near_div_defect(M, {psi, psi2, psi3}) <= 1e-6);
}

TEST_CASE("generator multiplication acts pointwise on spans") {
    const int N = 64;
    Frame K = model_space_frame(SymbolExpr::z().pow(2), N); // span{1, z}
    GenSet gens;
    gens.order = N;
    for (int k = 0; k < K.dim(); ++k) gens.add(Vec(K.basis().col(k)));
    SymbolExpr mult = SymbolExpr::rational(RationalFn(Poly({Cplx(2.0), Cplx(1.0)}),
                                                      Poly::constant(Cplx(1.0))));
    Frame out = gens.multiplied(mult).orth(1e-10);
    CHECK(out.dim() == 2);
    // (2+z) span{1, z} = span{2+z, 2z+z^2}
    Vec g1 = Vec::Zero(N), g2 = Vec::Zero(N);
    g1[0] = 2.0;
    g1[1] = 1.0;
    g2[1] = 2.0;
    g2[2] = 1.0;
    CHECK(out.distance(g1 / g1.norm()) < 1e-12);
    CHECK(out.distance(g2 / g2.norm()) < 1e-12);
}

TEST_CASE("cyclic disc family basics") {
    const int N = 128;
    // delta -> 0 limit: a single sample spans the generator alone
    Frame f = cyclic_disc(SymbolExpr(), 1.0, 1, N);
    CHECK(f.dim() == 1);
    Vec one = Vec::Zero(N);
    one[0] = 1.0;
    CHECK(f.distance(one) < 1e-12);

    // nested spans: the 17-point grid divides the 33-point grid, so each
    // coarse generator is literally a fine generator
    GenSet gm = cyclic_disc_generators(SymbolExpr(), 1.0, 17, N);
    GenSet g2m = cyclic_disc_generators(SymbolExpr(), 1.0, 33, N);
    Frame fine = g2m.orth(1e-11);
    for (const auto& c : gm.cols) {
        CHECK(fine.distance(c / c.norm()) < 1e-10);
    }

    // rejected: pole inside the disc
    SymbolExpr pole = SymbolExpr::rational(RationalFn(Poly({Cplx(1.0)}),
                                                      Poly({Cplx(-0.5), Cplx(1.0)})));
    CHECK_THROWS_AS(cyclic_disc(pole, 1.0, 4, N), std::invalid_argument);
    CHECK_THROWS_AS(cyclic_disc(SymbolExpr(), -1.0, 4, N), std::invalid_argument);
}

TEST_CASE("cyclic halfplane family matches the disc family") {
    const int N = 256;
    // V^{-1}(e^{-lambda s}/(1+s)) = sqrt(pi) phi^lambda; spans agree exactly
    HalfPlaneRational g{RationalFn(Poly::constant(Cplx(1.0)), Poly({Cplx(1.0), Cplx(1.0)})), 0.0};
    Frame hp = cyclic_halfplane(g, 1.0, 9, N);
    Frame dc = cyclic_disc(SymbolExpr(), 1.0, 9, N);
    CHECK(subspace_gap(hp, dc).gap < 1e-10);

    HalfPlaneRational improper{RationalFn(Poly({Cplx(0.0), Cplx(1.0)}), Poly({Cplx(1.0), Cplx(1.0)})),
                               0.0};
    CHECK_THROWS_AS(cyclic_halfplane(improper, 1.0, 4, N), std::invalid_argument);
}

TEST_CASE("wrong identities are detected, not vacuously passed") {
    const int N = 256;
    // A(z+1) against the too-large K_{z^3 phi}: probes from the extra
    // directions stay far from the cyclic span
    GenSet big = model_space_generators(SymbolExpr::z().pow(3) * SymbolExpr::singular_inner(1.0),
                                        N, 129);
    Frame big_probe = big.orth(1e-4);
    Frame cyc = cyclic_disc(SymbolExpr::rational(RationalFn(Poly({Cplx(1.0), Cplx(1.0)}),
                                                            Poly::constant(Cplx(1.0)))),
                            1.0, 64, N, 1e-11);
    double worst = 0.0;
    for (int k = 0; k < big_probe.dim(); ++k) {
        worst = std::max(worst, cyc.distance(Vec(big_probe.basis().col(k))));
    }
    CHECK(worst >= 0.1);

    // and against the too-small K_{z phi}: some cyclic generator leaves it
    GenSet small = model_space_generators(SymbolExpr::z() * SymbolExpr::singular_inner(1.0), N, 129);
    Frame small_deep = small.orth(1e-11);
    GenSet cg = cyclic_disc_generators(SymbolExpr::rational(RationalFn(Poly({Cplx(1.0), Cplx(1.0)}),
                                                                       Poly::constant(Cplx(1.0)))),
                                       1.0, 64, N);
    double contain = 0.0;
    for (const auto& c : cg.cols) contain = std::max(contain, small_deep.distance(c / c.norm()));
    CHECK(contain >= 0.1);
}

TEST_CASE("monotone convergence of the cyclic approximation") {
    const int N = 256;
    // defect of a model probe against A(1) is nonincreasing in Mpts
    GenSet model = model_space_generators(SymbolExpr::z() * SymbolExpr::singular_inner(1.0), N, 129);
    Frame probe_src = model.orth(1e-4);
    Vec probe = probe_src.basis() * Vec::Ones(probe_src.dim());
    probe /= probe.norm();
    double prev = 2.0;
    for (int m : {8, 16, 32, 64}) {
        Frame cyc = cyclic_disc(SymbolExpr(), 1.0, m, N, 1e-11);
        double d = cyc.distance(probe);
        CHECK(d <= std::max(prev * 1.05 + 1e-12, 1e-3));
        prev = d;
    }
    CHECK(prev <= 1e-3);
}
