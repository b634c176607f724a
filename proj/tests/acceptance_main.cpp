// Acceptance suite: every criterion at its stated tolerance, one line each.
// Exit code 0 only if all criteria pass.

#include "nisv/analytic.hpp"
#include "nisv/checks.hpp"
#include "nisv/report.hpp"
#include "nisv/subspaces.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace nisv;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, bool ok) {
    std::printf("%s  criterion %2d: %s\n", ok ? "PASS" : "FAIL", number, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool protocol_ok(const CheckReport& r) {
    return r.pass && r.defects.at("contain") <= 1e-4 && r.defects.at("probe_final") <= 1e-3 &&
           r.defects.at("probes_decreasing") == 1.0;
}

} // namespace

int main() {
    Config cfg; // order 256, 64 lambda samples, delta 1, seed 17
    cfg.stable_output = true;

    // 1. images of conjugate-monomial Toeplitz kernels under C_psi
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            auto rep = run_check("THM-FG", {{"k", std::to_string(k)}, {"a", "0.5"}}, cfg);
            ok = ok && rep.pass && rep.defects.at("gap") <= 1e-6;
        }
        criterion(1, "pushforward kernel identity, k = 1..3, gap <= 1e-6", ok);
    }

    // 2. the weighted composition is unitary between model spaces
    {
        auto eq = run_check("COR-EQUAL", {{"theta_degree", "3"}, {"a", "0.5"}}, cfg);
        auto un = run_check("UNITARY-GMR", {{"theta_degree", "3"}, {"a", "0.5"}}, cfg);
        bool ok = eq.pass && un.pass && eq.defects.at("gap_image_weighted") <= 1e-6 &&
                  un.defects.at("gram_defect") <= 1e-6 && un.defects.at("gap_span") <= 1e-6;
        criterion(2, "C_psi(K_{z^3}) = (1/sqrt(psi')) K_{z^3 o psi}, Gram within 1e-6", ok);
    }

    // 3. the explicit complement direction z + a
    {
        auto sub = run_check("PROP-SUB", {{"a", "0.5"}}, cfg);
        auto ex = run_check("EXM-CBKB", {{"a", "0.5"}}, cfg);
        bool ok = sub.pass && ex.pass && ex.defects.at("angle_complement") <= 1e-8;
        criterion(3, "complement of C_b(K_b) in K_{z^2} is C(z + 1/2), angle <= 1e-8", ok);
    }

    // 4. composition with a non-automorphism kills near S*-invariance
    {
        auto rep = run_check("THM-CPHI-NEG", {{"a", "0.5"}}, cfg);
        bool ok = rep.pass && rep.defects.at("defect_exact_minus_one") <= 1e-12 &&
                  rep.defects.at("defect_nonautomorphism") >= 0.05;
        criterion(4, "C_{z^2}(K_{z^2}) defect = 1 (1e-12); z b_{1/2} defect >= 0.05", ok);
    }

    // 5. Hitt-like subspaces and the two-generator semigroup dichotomy
    {
        auto tp = run_check("THM-TPSI", {{"a", "0.5"}, {"u", "rat(2+z)"}}, cfg);
        auto ds = run_check("THM-DISCRETE", {{"a1", "0.5"}, {"a2", "-0.3333333333333333"}}, cfg);
        bool ok = tp.pass && ds.pass && tp.defects.at("div_defect") <= 1e-6 &&
                  ds.defects.at("defect_negative") >= 0.05;
        criterion(5, "near division invariance: u = 2+z passes, u(psi1(a2)) = 0 fails", ok);
    }

    // 6. cyclic orbits of (1+z)^n fill the model spaces, disc and half-plane
    {
        bool ok = true;
        for (int n = 0; n <= 2; ++n) {
            ok = ok && protocol_ok(run_check("THM-N-DISC", {{"n", std::to_string(n)}}, cfg));
            ok = ok && protocol_ok(run_check("THM-N-HALF", {{"n", std::to_string(n)}}, cfg));
        }
        criterion(6, "A((1+z)^n) and N(1/(1+s)^{n+1}), n = 0..2: contain <= 1e-4, probes -> <= 1e-3",
                  ok);
    }

    // 7. circle-zero factors
    {
        bool ok = protocol_ok(run_check("PROP-ZW", {{"w", "1"}}, cfg));
        ok = ok && protocol_ok(run_check("PROP-ZW", {{"w", "expi(1.0471975511965976)"}}, cfg));
        ok = ok && protocol_ok(run_check("PROP-PN", {{"w1", "1"}, {"w2", "-1"}}, cfg));
        criterion(7, "A(z+w) for w = 1, e^{i pi/3} and A((z+1)(z-1)) match their model spaces", ok);
    }

    // 8. rational half-plane examples and the pole obstruction
    {
        auto inv = run_check("EXM-INVERT", {}, cfg);
        auto s2 = run_check("EXM-S2", {}, cfg);
        auto gen = run_check("THM-GENERAL", {}, cfg);
        bool ok = protocol_ok(inv) && protocol_ok(s2) && protocol_ok(gen) &&
                  inv.defects.at("obstruction") >= 0.05;
        criterion(8, "N(g) identities at 1e-3 and the theta G/conj(G) inner test fails", ok);
    }

    // 9. exact arithmetic identities
    {
        auto rep = run_check("EXM-FM-EXACT", {{"m_max", "8"}, {"n_max", "4"}}, cfg);
        bool ok = rep.pass && rep.defects.at("fm_mismatch") == 0.0 &&
                  rep.defects.at("laplace_structural_mismatch") == 0.0;
        criterion(9, "F_m rational identity m = 1..8 exactly; Laplace transforms match the oracle",
                  ok);
    }

    // 10. infrastructure invariants
    {
        bool ok = true;

        // Parseval at machine precision
        {
            std::mt19937_64 rng(2024);
            std::uniform_real_distribution<double> u(-1.0, 1.0);
            std::vector<Cplx> samples(256);
            double snorm = 0.0;
            for (auto& s : samples) {
                s = Cplx(u(rng), u(rng));
                snorm += std::norm(s);
            }
            auto spec = fourier_analyze(samples);
            ok = ok && std::abs(spec.norm() - std::sqrt(snorm / 256.0)) < 1e-13;
        }
        // projector idempotence
        {
            BoundaryGrid g(256);
            std::vector<Cplx> samples(static_cast<size_t>(g.size()));
            for (int j = 0; j < g.size(); ++j) {
                Cplx w = g.node(j);
                samples[static_cast<size_t>(j)] = 1.0 / (1.0 - 0.4 * w) + std::conj(w) * 0.3;
            }
            HardyFunction once = analyze_to_order(samples, 64);
            HardyFunction twice = analyze_to_order(evaluate_on_grid(once, g), 64);
            ok = ok && (once.coeffs() - twice.coeffs()).norm() < 1e-12;
        }
        // frame orthonormality and gap symmetry
        {
            Frame f = cyclic_disc(SymbolExpr(), 1.0, 16, 128);
            ok = ok && f.gram_defect() < 1e-10;
            Frame h = cyclic_disc(SymbolExpr::z() * SymbolExpr::constant(Cplx(1.0)) , 1.0, 12, 128);
            auto gab = subspace_gap(f, h);
            auto gba = subspace_gap(h, f);
            ok = ok && std::abs(gab.gap - gba.gap) < 1e-13 && gab.gap <= 1.0;
        }
        // determinism: byte-identical stable reports
        {
            auto r1 = run_check("COR-PHIDELTA", {}, cfg);
            auto r2 = run_check("COR-PHIDELTA", {}, cfg);
            ok = ok && render_reports({r1}, ReportFormat::Json) ==
                           render_reports({r2}, ReportFormat::Json);
        }
        // registry coverage of the manifest
        {
            std::ifstream in(std::string(NISV_SOURCE_DIR) + "/data/checks_manifest.txt");
            std::set<std::string> manifest;
            std::string line;
            while (std::getline(in, line)) {
                auto b = line.find_first_not_of(" \t\r\n");
                if (b == std::string::npos) continue;
                auto e = line.find_last_not_of(" \t\r\n");
                std::string id = line.substr(b, e - b + 1);
                if (!id.empty() && id[0] != '#') manifest.insert(id);
            }
            std::set<std::string> reg;
            for (const auto& [id, def] : check_registry()) reg.insert(id);
            ok = ok && !manifest.empty() && manifest == reg;
        }
        criterion(10, "Parseval, idempotence, orthonormality, gap symmetry, determinism, coverage",
                  ok);
    }

    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
