#include <functional>

#include <gtest/gtest.h>

#include "chowkl/families.hpp"
#include "chowkl/poset.hpp"
#include "corpus.hpp"

using namespace chowkl;

namespace {

Poly P(std::vector<long long> v) { return Poly::from_ints(v); }

GradedPoset fig2_left()
{
    return GradedPoset::from_covers({0, 1, 2, 2, 3, 3, 4, 4, 5}, {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 7}, {6, 8}, {7, 8}});
}

GradedPoset chain(int r)
{
    std::vector<int> rank;
    std::vector<std::pair<int, int>> cov;
    for (int i = 0; i <= r; ++i) {
        rank.push_back(i);
        if (i)
            cov.emplace_back(i - 1, i);
    }
    return GradedPoset::from_covers(rank, cov);
}

// Chain sums over a poset: multichains from the bottom, weights per gap.
Poly chain_sum_uH(const GradedPoset& p, int z)
{
    Poly s = Poly::constant(1);
    for (int w : p.up(z))
        if (w != z)
            s = s + geometric(1, p.rank(w) - p.rank(z) - 1) * chain_sum_uH(p, w);
    return s;
}

Poly chain_sum_H(const GradedPoset& p)
{
    Poly s = Poly::constant(1);
    int b = p.bottom();
    for (int w : p.up(b))
        if (w != b)
            s = s + geometric(1, p.rank(w)) * chain_sum_uH(p, w);
    return s;
}

// P by the defining relation x^r P(1/x) - P(x) = sum_{z<w} chi_[z,w] P_[w],
// solved for the low half, straight recursion without memo.
Poly epw_oracle(const GradedPoset& p, int z)
{
    int r = p.rank(p.top()) - p.rank(z);
    if (r == 0)
        return Poly::constant(1);
    Poly rhs;
    for (int w : p.up(z))
        if (w != z)
            rhs = rhs + p.char_poly(z, w) * epw_oracle(p, w);
    std::vector<BigInt> c;
    for (int i = 0; 2 * i < r; ++i)
        c.push_back(-rhs.coeff(i));
    return Poly(std::move(c));
}

// Möbius by summing signed chains (Hall's theorem).
BigInt hall_mobius(const GradedPoset& p, int a, int b)
{
    if (a == b)
        return 1;
    BigInt s = 0;
    for (int c : p.up(a))
        if (c != a && p.leq(c, b))
            s -= hall_mobius(p, c, b);
    return s;
}

} // namespace

TEST(Poset, Validation)
{
    EXPECT_THROW(GradedPoset::from_covers({}, {}), InvalidArgument);
    // two minimal elements
    EXPECT_THROW(GradedPoset::from_covers({0, 0, 1}, {{0, 2}, {1, 2}}), InvalidArgument);
    // cover skipping a rank
    EXPECT_THROW(GradedPoset::from_covers({0, 1, 2}, {{0, 1}, {0, 2}}), InvalidArgument);
    // bottom of nonzero rank
    EXPECT_THROW(GradedPoset::from_covers({1, 2}, {{0, 1}}), InvalidArgument);
    EXPECT_THROW(GradedPoset::from_covers({0, 1}, {{0, 7}}), InvalidArgument);
    GradedPoset pt = GradedPoset::from_covers({0}, {});
    EXPECT_EQ(kls_P_general(pt), P({1}));
    EXPECT_EQ(kls_Z_general(pt), P({1}));
    EXPECT_EQ(kls_uH_general(pt), P({1}));
}

TEST(Poset, NonMatroidalExample)
{
    GradedPoset p = fig2_left();
    EXPECT_EQ(kls_uH_general(p), P({1, 7, 11, 7, 1}));
    EXPECT_EQ(kls_H_general(p), P({1, 8, 18, 18, 8, 1}));
    EXPECT_EQ(chain_sum_uH(p, p.bottom()), P({1, 7, 11, 7, 1}));
    EXPECT_EQ(chain_sum_H(p), P({1, 8, 18, 18, 8, 1}));
    EXPECT_EQ(gamma_vector(kls_uH_general(p), 4), P({1, 3, -1}));
    EXPECT_EQ(kls_P_general(p), epw_oracle(p, p.bottom()));
}

TEST(Poset, ChainsAgainstOracles)
{
    for (int r = 0; r <= 7; ++r) {
        GradedPoset c = chain(r);
        EXPECT_EQ(kls_uH_general(c), chain_sum_uH(c, c.bottom())) << r;
        EXPECT_EQ(kls_H_general(c), chain_sum_H(c)) << r;
        EXPECT_EQ(kls_P_general(c), epw_oracle(c, c.bottom())) << r;
        auto kl = kls_kl_tables(c);
        EXPECT_TRUE(kl.Z[0].is_palindromic(r)) << r;
        for (int a = 0; a <= r; ++a)
            for (int b = a; b <= r; ++b)
                EXPECT_EQ(c.mobius(a, b), b == a ? 1 : b == a + 1 ? -1 : 0);
    }
}

TEST(Flats, Counts)
{
    EXPECT_EQ(lattice_of_flats(uniform(4, 8)).size(), 94);
    for (int n = 0; n <= 8; ++n)
        EXPECT_EQ(lattice_of_flats(boolean(n)).size(), 1 << n);
    FlatsLattice k4 = lattice_of_flats(complete_graph(4));
    EXPECT_EQ(k4.size(), 15);
    EXPECT_EQ(k4.poset().mobius(k4.poset().bottom(), k4.poset().top()), -6);
    EXPECT_EQ(k4.flat(0), 0u);
    EXPECT_EQ(k4.flat(k4.size() - 1), complete_graph(4).ground());
    EXPECT_THROW(lattice_of_flats(Matroid::from_basis_lists(2, {{0}})), PreconditionError);
}

TEST(Flats, Mobius)
{
    for (const auto& e : corpus::small()) {
        if (!is_loopless(e.m))
            continue;
        FlatsLattice L(e.m);
        const GradedPoset& p = L.poset();
        p.freeze();
        for (int a = 0; a < p.size(); ++a) {
            for (int b = 0; b < p.size(); ++b) {
                if (!p.leq(a, b)) {
                    ASSERT_EQ(p.mobius(a, b), 0);
                    continue;
                }
                if (p.size() <= 60) {
                    ASSERT_EQ(p.mobius(a, b), hall_mobius(p, a, b)) << e.name;
                }
                BigInt s = 0;
                for (int c : p.up(a))
                    if (p.leq(c, b))
                        s += p.mobius(a, c);
                ASSERT_EQ(s, a == b ? 1 : 0);
            }
            int sign = p.rank(a) % 2 ? -1 : 1;
            ASSERT_GT(sign * p.mobius(p.bottom(), a), 0) << e.name;
        }
        for (int a = 0; a < p.size(); ++a)
            if (p.rank(a) == 1) {
                ASSERT_EQ(p.mobius(p.bottom(), a), -1);
            }
    }
}

TEST(Flats, CharacteristicPolynomials)
{
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<BigInt> c(static_cast<std::size_t>(k));
            for (int j = 0; j < k; ++j)
                c[static_cast<std::size_t>(k - 1 - j)] = (j % 2 ? -1 : 1) * binomial(n - 1, j);
            EXPECT_EQ(reduced_char_poly(uniform(k, n)), Poly(c)) << k << "," << n;
        }
    for (int n = 2; n <= 6; ++n) {
        Poly expect = P({1});
        for (int i = 2; i <= n - 1; ++i)
            expect = expect * P({-i, 1});
        EXPECT_EQ(reduced_char_poly(complete_graph(n)), expect) << n;
    }
    EXPECT_EQ(reduced_char_poly(empty_matroid()), P({-1}));
    EXPECT_TRUE(char_poly(Matroid::from_basis_lists(2, {{0}})).is_zero());
    for (const auto& e : corpus::small()) {
        if (!is_loopless(e.m) || e.m.size() == 0)
            continue;
        Poly chi = char_poly(e.m);
        EXPECT_EQ(chi.eval(1), 0) << e.name;
        EXPECT_EQ(reduced_char_poly(e.m) * linear(-1, 1), chi);
    }
}

// sum over flats F != E of reduced chi of M/F is 1 + x + ... + x^(rk-1).
TEST(Flats, MobiusInversionIdentity)
{
    for (const auto& e : corpus::loopless()) {
        if (e.m.size() > 7 && e.name.rfind("boolean", 0) == 0)
            continue;
        FlatsLattice L(e.m);
        const GradedPoset& p = L.poset();
        Poly s, t;
        for (int f = 0; f < p.size(); ++f) {
            t = t + p.char_poly(f, p.top());
            if (f != p.top())
                s = s + p.reduced_char_poly(f, p.top());
        }
        EXPECT_EQ(t, Poly::monomial(e.m.rank())) << e.name;
        if (e.m.rank() > 0) {
            EXPECT_EQ(s, one_to(e.m.rank() - 1)) << e.name;
        }
        // contraction char poly agrees with the interval one
        if (e.m.size() <= 8) {
            for (int f = 0; f < p.size(); f += 3)
                ASSERT_EQ(char_poly(contraction(e.m, L.flat(f))), p.char_poly(f, p.top())) << e.name;
        }
    }
}

TEST(Flats, WhitneyNumbers)
{
    EXPECT_EQ(whitney_numbers(uniform(3, 5)), P({1, 5, 10, 1}));
    EXPECT_EQ(whitney_numbers(complete_graph(4)), P({1, 6, 7, 1}));
    for (int n = 0; n <= 7; ++n)
        EXPECT_EQ(whitney_numbers(boolean(n)), P({1, 1}).pow(static_cast<unsigned>(n)));
    for (const auto& e : corpus::loopless()) {
        if (e.m.size() > 8)
            continue;
        Poly w = whitney_numbers(e.m);
        int k = e.m.rank();
        for (int i = 0; i <= k; ++i)
            for (int j = i; j <= k - i; ++j)
                ASSERT_LE(w.coeff(i), w.coeff(j)) << e.name;
    }
}

TEST(Flats, BergmanFH)
{
    auto [f, h] = bergman_f_h(uniform(2, 3));
    EXPECT_EQ(f, P({3, 1}));
    EXPECT_EQ(h, P({2, 1}));
    EXPECT_EQ(bergman_f_h(uniform(1, 3)).second, P({1}));
    EXPECT_THROW(bergman_f_h(empty_matroid()), InvalidArgument);
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            Poly bw;
            for (int j = 0; j < k; ++j)
                bw = bw + binomial(n, j) * eulerian(j) * P({-1, 1}).pow(static_cast<unsigned>(k - 1 - j));
            EXPECT_EQ(bergman_f_h(uniform(k, n)).second, bw) << k << "," << n;
        }
    // f counts chains: f(1) is the number of chains of proper flats incl. the empty one.
    for (const auto& e : corpus::small()) {
        if (!is_loopless(e.m) || e.m.rank() == 0)
            continue;
        auto [fe, he] = bergman_f_h(e.m);
        EXPECT_TRUE(is_nonneg(he)) << e.name;
        FlatsLattice L(e.m);
        const GradedPoset& p = L.poset();
        std::function<long long(int)> count = [&](int a) {
            long long c = 1;
            for (int b : p.up(a))
                if (b != a && b != p.top())
                    c += count(b);
            return c;
        };
        EXPECT_EQ(fe.eval(1), count(p.bottom())) << e.name;
    }
}

TEST(Flats, KLSOnLatticeOfFlats)
{
    for (int n = 0; n <= 7; ++n) {
        FlatsLattice L(boolean(n));
        EXPECT_EQ(kls_P_general(L.poset()), P({1}));
        EXPECT_EQ(kls_Z_general(L.poset()), P({1, 1}).pow(static_cast<unsigned>(n)));
    }
    FlatsLattice u23(uniform(2, 3));
    EXPECT_EQ(kls_Z_general(u23.poset()), P({1, 3, 1}));
    EXPECT_EQ(kls_P_general(u23.poset()), P({1}));
    for (const auto& e : corpus::small()) {
        if (!is_loopless(e.m))
            continue;
        FlatsLattice L(e.m);
        const GradedPoset& p = L.poset();
        EXPECT_EQ(kls_uH_general(p), chain_sum_uH(p, p.bottom())) << e.name;
        EXPECT_EQ(kls_H_general(p), chain_sum_H(p)) << e.name;
        if (p.size() <= 40) {
            EXPECT_EQ(kls_P_general(p), epw_oracle(p, p.bottom())) << e.name;
        }
    }
}
