// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "chowkl/certify.hpp"
#include "chowkl/equivariant.hpp"
#include "chowkl/hz.hpp"
#include "chowkl/io.hpp"
#include "chowkl/sweep.hpp"
#include "corpus.hpp"
#include "golden_values.hpp"

using namespace chowkl;

namespace {

// Collects the first few mismatches of a criterion.
struct Ledger {
    bool ok = true;
    std::ostringstream why;
    int notes = 0;
    void require(bool cond, const std::string& what)
    {
        if (cond)
            return;
        if (notes++ < 3)
            why << (ok ? "" : "; ") << what;
        ok = false;
    }
};

double since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string kn(int k, int n) { return "U" + std::to_string(k) + "," + std::to_string(n); }

// ------------------------------------------------------------------------

void c1(Ledger& L)
{
    auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::pair<const std::vector<golden::Col>*, int>> chow_tabs{{&golden::chow_k_k1, 1}, {&golden::chow_k_k2, 2}};
    const std::vector<std::pair<const std::vector<golden::Col>*, int>> aug_tabs{{&golden::aug_k_k1, 1}, {&golden::aug_k_k2, 2}};
    for (auto [tab, off] : chow_tabs)
        for (int k = 1; k <= 7; ++k) {
            Poly want = golden::poly((*tab)[static_cast<std::size_t>(k - 1)]);
            FlatsLattice lat(uniform(k, k + off));
            L.require(chow_uniform(k, k + off) == want, "chow_uniform " + kn(k, k + off));
            L.require(chow_chains(lat) == want, "chow chains " + kn(k, k + off));
            L.require(chow_incidence_inv(lat) == want, "chow incidence " + kn(k, k + off));
        }
    for (auto [tab, off] : aug_tabs)
        for (int k = 1; k <= 7; ++k) {
            Poly want = golden::poly((*tab)[static_cast<std::size_t>(k - 1)]);
            FlatsLattice lat(uniform(k, k + off));
            L.require(aug_chow_uniform(k, k + off) == want, "aug_chow_uniform " + kn(k, k + off));
            L.require(aug_chow_chains(lat) == want, "augchow chains " + kn(k, k + off));
            L.require(aug_chow_incidence_inv(lat) == want, "augchow incidence " + kn(k, k + off));
        }
    L.require(since(t0) < 5.0, "slower than 5 s");
}

void c2(Ledger& L)
{
    auto t0 = std::chrono::steady_clock::now();
    for (const auto& e : corpus::full()) {
        InvariantEngine eng(e.m, e.braid_n);
        for (Kind k : {Kind::uH, Kind::H, Kind::P, Kind::Z}) {
            InvariantReport r = eng.report(k);
            L.require(r.agree(), std::string(to_string(k)) + " disagrees on " + e.name);
            if (e.braid) {
                bool has = false;
                for (const auto& m : r.results)
                    has = has || m.method == Method::braid_closed;
                L.require(k != Kind::uH || has, "braid_closed not applied to " + e.name);
            }
        }
    }
    L.require(since(t0) < 180.0, "slower than 3 min");
}

void c3(Ledger& L)
{
    const Matroid v = vamos();
    const Poly uh = golden::poly(golden::vamos_chow), h = golden::poly(golden::vamos_aug);
    L.require(chow_paving(4, 8, {{4, 5}}) == uh, "paving formula uH");
    L.require(aug_chow_paving(4, 8, {{4, 5}}) == h, "paving formula H");
    L.require(chow_of_paving(v) == uh && aug_chow_of_paving(v) == h, "paving engine on V_8");
    FlatsLattice lat(v);
    L.require(chow_chains(lat) == uh, "chains uH");
    L.require(aug_chow_chains(lat) == h, "chains H");
    auto st = stressed_hyperplane_counts(v);
    L.require(st.size() == 1 && st.count(4) && st.at(4) == 5, "V_8 should have five stressed hyperplanes of size 4");
}

void c4(Ledger& L)
{
    BivariatePoly want;
    for (const auto& t : golden::tutte_m1m2)
        want = want + BivariatePoly::monomial(t.i, t.j, t.c);
    const Matroid a = corpus::m1(), b = corpus::m2();
    L.require(tutte(a) == want, "T_M1 differs from the quoted polynomial");
    L.require(tutte(b) == want, "T_M2 differs from the quoted polynomial");
    L.require(chow_poly(a, Method::chains) == golden::poly(golden::m1_chow), "uH_M1");
    L.require(chow_poly(b, Method::chains) == golden::poly(golden::m2_chow), "uH_M2");
    L.require(aug_chow_poly(a, Method::chains) == golden::poly(golden::m1_aug), "H_M1");
    L.require(aug_chow_poly(b, Method::chains) == golden::poly(golden::m2_aug), "H_M2");
}

void c5(Ledger& L)
{
    auto t0 = std::chrono::steady_clock::now();
    Poly p = kl_uniform(15, 16);
    double dt = since(t0);
    L.require(p == golden::poly(golden::kl_15_16), "kl_uniform(15,16)");
    L.require(dt < 1.0, "kl_uniform(15,16) took " + std::to_string(dt) + " s");
    for (int n = 0; n <= 10; ++n) {
        Poly want = linear(1, 1).pow(static_cast<unsigned>(n));
        InvariantEngine e(boolean(n));
        L.require(e.compute(Kind::Z, Method::conv_def) == want, "Z boolean " + std::to_string(n) + " conv_def");
        L.require(e.compute(Kind::Z, Method::bv_deletion) == want, "Z boolean " + std::to_string(n) + " bv_deletion");
    }
}

void c6(Ledger& L)
{
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 9; ++n)
        for (int k = 2; k <= n; ++k) {
            L.require(hz_uniform(k, n) == aug_chow_uniform(k, n), "E_{k,n} vs H at " + kn(k, n));
            L.require(hz_recursion_check(k, n), "recursion at " + kn(k, n));
        }
    L.require(since(t0) < 120.0, "slower than 2 min");
}

void c7(Ledger& L)
{
    int direct = 0;
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            try {
                direct += hrs_identity(k, n).direct.has_value();
            } catch (const InternalError& e) {
                L.require(false, e.what());
            }
        }
    L.require(direct == 28, "expected 28 direct order-complex checks for n <= 7");
}

void c8(Ledger& L)
{
    for (const auto& e : corpus::full()) {
        InvariantEngine eng(e.m, e.braid_n);
        const int r = e.m.rank();
        Check a = check_gamma("uH", eng.compute(Kind::uH, Method::char_conv), chow_center_degree(r));
        Check b = check_gamma("H", eng.compute(Kind::H, Method::contraction_conv), r);
        Check c = check_gamma("Z", eng.compute(Kind::Z, Method::conv_def), r);
        L.require(a.pass && b.pass && c.pass, "negative gamma on " + e.name);
    }
    for (int n = 0; n <= 8; ++n)
        L.require(gamma_vector(z_poly(boolean(n)), n) == Poly::constant(1), "gamma(Z_boolean" + std::to_string(n) + ") != 1");
    GradedPoset fig2 = poset_from_json(read_json_file(std::string(CHOWKL_FIXTURES) + "/fig2-left.poset.json"));
    Certificate cert = certify_gamma_poset(fig2);
    L.require(!cert.pass(), "the non-matroidal poset should fail");
    L.require(cert.checks[0].witness == golden::poly(golden::fig2_gamma), "poset gamma is " + cert.checks[0].witness.to_string());
    L.require(kls_uH_general(fig2) == golden::poly(golden::fig2_chow), "poset uH");
    L.require(kls_H_general(fig2) == golden::poly(golden::fig2_aug), "poset H");
}

void c9(Ledger& L)
{
    auto A = eulerian_table(15);
    auto D = derangement_table(15);
    auto B = binomial_eulerian_table(15);
    for (int n = 1; n <= 15; ++n) {
        const std::size_t i = static_cast<std::size_t>(n);
        L.require(real_rooted(A[i]), "A_" + std::to_string(n));
        L.require(D[i].is_zero() || real_rooted(D[i]), "d_" + std::to_string(n));
        L.require(real_rooted(B[i]), "binomial Eulerian " + std::to_string(n));
    }
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            L.require(real_rooted(aug_chow_uniform(k, n)), "H " + kn(k, n));
    for (const auto& e : corpus::loopless())
        if (e.m.rank() <= 5)
            L.require(real_rooted(chow_poly(e.m)), "uH " + e.name);
    for (int n = 1; n <= 15; ++n)
        L.require(real_rooted(chow_braid(n)), "chow_braid " + std::to_string(n));
    for (int n = 1; n <= 20; ++n) {
        Poly p = linear(1, 1).pow(static_cast<unsigned>(n));
        L.require(real_rooted(p) && count_distinct_real_roots(p) == 1, "Sturm on (x+1)^" + std::to_string(n));
    }
    Poly q = Poly::from_ints({1, 1, 1});
    L.require(!real_rooted(q) && count_distinct_real_roots(q) == 0, "Sturm on x^2+x+1");
}

void c10(Ledger& L)
{
    for (const auto& e : corpus::loopless())
        L.require(certify_dominance(e.m).pass(), "dominance fails on " + e.name);
}

void c11(Ledger& L)
{
    for (const auto& e : corpus::loopless()) {
        FlatsLattice lat(e.m);
        const GradedPoset& p = lat.poset();
        const int r = e.m.rank();
        Poly s, t;
        for (int f = 0; f < p.size(); ++f) {
            t = t + p.char_poly(f, p.top());
            if (f != p.top())
                s = s + p.reduced_char_poly(f, p.top());
        }
        L.require(t == Poly::monomial(r), "sum chi_{M/F} on " + e.name);
        L.require(r == 0 || s == one_to(r - 1), "telescoping on " + e.name);

        // H from uH of contraction matroids, built as matroids, not lattice intervals
        if (e.m.size() <= 8) {
            Poly conv, alt = Poly::constant(1);
            for (int f = 0; f < p.size(); ++f) {
                Poly u = chow_poly(contraction(e.m, lat.flat(f)), Method::chains);
                conv = conv + u.shift(p.rank(f));
                if (f != p.top())
                    alt = alt + u.shift(1);
            }
            Poly h = aug_chow_poly(e.m, Method::chains);
            L.require(conv == h, "H = sum x^rk F uH_{M/F} on " + e.name);
            L.require(alt == h, "H = 1 + x sum uH_{M/F} on " + e.name);

            Poly z;
            for (int f = 0; f < p.size(); ++f)
                z = z + kl_poly(contraction(e.m, lat.flat(f)), Method::intrinsic).shift(p.rank(f));
            L.require(z == z_poly(e.m, Method::bv_deletion), "Z = sum x^rk F P_{M/F} on " + e.name);
        }
    }
    std::vector<Matroid> ms{uniform(2, 3), uniform(2, 4), complete_graph(4), uniform(3, 5), boolean(2), uniform(1, 2)};
    for (const auto& a : ms)
        for (const auto& b : ms) {
            if (a.size() + b.size() > 10)
                continue;
            Matroid s = direct_sum(a, b);
            L.require(kl_poly(s) == kl_poly(a) * kl_poly(b), "P not multiplicative");
            L.require(kl_poly(s, Method::bv_deletion) == kl_poly(a) * kl_poly(b), "P (deletion) not multiplicative");
        }
    Matroid u11 = uniform(1, 1), u12 = uniform(1, 2);
    L.require(chow_poly(direct_sum(u11, u12)) != chow_poly(u11) * chow_poly(u12), "uH of U11+U12 should not factor");
}

void c12(Ledger& L)
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            L.require(eq_kl_uniform(k, n).dims() == kl_uniform(k, n), "dim P^S " + kn(k, n));
            L.require(eq_z_uniform(k, n).dims() == z_poly(uniform(k, n)), "dim Z^S " + kn(k, n));
        }
    auto V = [](Partition p) { return VirtualRep::irreducible(std::move(p)); };
    GradedVirtualRep z = eq_z_uniform(2, 2);
    L.require(z.coeffs.size() == 3 && z[0] == V({2}) && z[1] == V({2}) + V({1, 1}) && z[2] == V({2}), "Z of U2,2");
    GammaDecomposition g = gamma_decompose_eq(z, 2);
    L.require(g.gamma.size() == 2 && g.gamma[1] == V({1, 1}) - V({2}) && !g.honest(), "Gamma_1 of U2,2");
    for (int n = 3; n <= 5; ++n) {
        GammaDecomposition gr = gamma_decompose_eq(restrict_to(eq_z_uniform(n, n), 2), n);
        L.require(gr.gamma[1] == V({1, 1}) - V({2}) && !gr.honest(), "Boolean restriction n=" + std::to_string(n));
    }
}

struct Proc {
    int code = -1;
    std::string out;
};

Proc run_cli(const std::string& args)
{
    Proc r;
    FILE* f = popen((std::string(CHOWKL_CLI) + " " + args + " 2>/dev/null").c_str(), "r");
    if (!f)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, f)) > 0)
        r.out.append(buf, got);
    int st = pclose(f);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

void c13(Ledger& L)
{
    auto t0 = std::chrono::steady_clock::now();
    const int hw = std::max(2u, std::thread::hardware_concurrency());
    Proc one = run_cli("--json --jobs 1 sweep sparse-paving --n 14 --k 7");
    Proc many = run_cli("--json --jobs " + std::to_string(hw) + " sweep sparse-paving --n 14 --k 7");
    L.require(one.code == 0, "sweep exit code " + std::to_string(one.code));
    L.require(one.out == many.out, "output depends on --jobs");
    try {
        Json j = Json::parse(one.out);
        L.require(j["lambda_min"] == 0 && j["lambda_max"] == 429, "lambda range");
        L.require(j["failures"] == 0, "failures reported");
        L.require(j["points"].size() == 430, "point count");
    } catch (const std::exception& e) {
        L.require(false, std::string("bad JSON: ") + e.what());
    }
    // the in-process sweep agrees with the binary
    SweepSummary s = sweep_sparse_paving(7, 14, 0, sparse_paving_lambda_max(7, 14), hw);
    L.require(s.failures() == 0 && s.points.size() == 430, "in-process sweep");
    L.require(since(t0) < 600.0, "slower than 10 min");
}

void c14(Ledger& L)
{
    for (const auto& e : corpus::loopless()) {
        InvariantEngine eng(e.m, e.braid_n);
        const int N = 2 * e.m.rank();
        L.require(check_koszul_prefix("uH", eng.compute(Kind::uH, Method::char_conv), N).pass, "1/uH(-x) on " + e.name);
        L.require(check_koszul_prefix("H", eng.compute(Kind::H, Method::contraction_conv), N).pass, "1/H(-x) on " + e.name);
    }
    Poly w = whitney_numbers(uniform(3, 5));
    L.require(w == golden::poly(golden::whitney_u35), "Whitney numbers of U3,5");
    Check c = check_koszul_prefix("W", w, 6);
    L.require(c.witness == golden::poly(golden::whitney_u35_inverse), "Whitney inverse is " + c.witness.to_string());
}

} // namespace

int main()
{
    const std::vector<std::pair<const char*, std::function<void(Ledger&)>>> criteria{
        {"uniform tables", c1},         {"cross-method agreement", c2}, {"Vamos golden values", c3},
        {"Tutte counterexample", c4},   {"KL desk-scale", c5},          {"inversion sequences", c6},
        {"HRS identity", c7},           {"gamma-positivity", c8},       {"real-rootedness", c9},
        {"dominance", c10},             {"identity suites", c11},       {"equivariant", c12},
        {"sparse paving sweep", c13},   {"Koszul prefixes", c14},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Ledger L;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(L);
        } catch (const std::exception& e) {
            L.require(false, std::string("exception: ") + e.what());
        }
        std::printf("%s %2zu %-24s %8.2fs%s%s\n", L.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, since(t0), L.ok ? "" : "  ",
                    L.why.str().c_str());
        std::fflush(stdout);
        failed += !L.ok;
    }
    return failed ? 1 : 0;
}
