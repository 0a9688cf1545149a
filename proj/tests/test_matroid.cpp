#include <random>

#include <gtest/gtest.h>

#include "chowkl/matroid.hpp"
#include "corpus.hpp"

using namespace chowkl;

namespace {

// Tutte polynomial from the corank-nullity expansion over all subsets.
BivariatePoly tutte_by_subsets(const Matroid& m)
{
    // T = sum_A (x-1)^(r-r(A)) (y-1)^(|A|-r(A)); expand the binomials.
    BivariatePoly t;
    int r = m.rank();
    for (Mask a = 0; a <= m.ground(); ++a) {
        int ra = m.rank_of(a);
        int p = r - ra, q = popcount(a) - ra;
        for (int i = 0; i <= p; ++i)
            for (int j = 0; j <= q; ++j) {
                BigInt c = binomial(p, i) * binomial(q, j);
                if ((p - i + q - j) % 2)
                    c = -c;
                t = t + BivariatePoly::monomial(i, j, c);
            }
        if (a == m.ground())
            break;
    }
    return t;
}

int rank_by_bases(const Matroid& m, Mask a)
{
    int r = 0;
    for (Mask b : m.bases())
        r = std::max(r, popcount(a & b));
    return r;
}

BivariatePoly golden_tutte()
{
    BivariatePoly t;
    for (auto [i, j, c] : std::vector<std::tuple<int, int, int>>{{4, 0, 1}, {3, 0, 3}, {2, 1, 2}, {1, 2, 1}, {0, 3, 1}, {2, 0, 4}, {1, 1, 5}, {0, 2, 3}, {1, 0, 2}, {0, 1, 2}})
        t = t + BivariatePoly::monomial(i, j, c);
    return t;
}

} // namespace

TEST(Matroid, FromBases)
{
    Matroid u12 = Matroid::from_basis_lists(2, {{0}, {1}});
    EXPECT_EQ(u12, uniform(1, 2));
    Matroid par = Matroid::from_basis_lists(3, {{0, 1}, {0, 2}});
    EXPECT_EQ(par.rank(), 2);
    Matroid lp = Matroid::from_basis_lists(1, {{}});
    EXPECT_EQ(lp.loops(), Mask(1));
    EXPECT_THROW(Matroid::from_bases(3, {}), EmptyBasisFamilyError);
    EXPECT_THROW(Matroid::from_basis_lists(3, {{0}, {1, 2}}), MixedCardinalityError);
    EXPECT_THROW(Matroid::from_basis_lists(4, {{0, 1}, {2, 3}}), ExchangeAxiomError);
    EXPECT_THROW(Matroid::from_basis_lists(2, {{0, 5}}), InvalidArgument);
    EXPECT_THROW(Matroid::from_bases(25, {0}), InvalidArgument);
}

TEST(Matroid, RankClosureLoops)
{
    EXPECT_EQ(uniform(2, 4).rank_of(mask_of({0, 1, 2})), 2);
    EXPECT_EQ(boolean(3).closure(mask_of({0})), mask_of({0}));
    EXPECT_EQ(Matroid::from_basis_lists(2, {{0}}).loops(), mask_of({1}));
    EXPECT_EQ(Matroid::from_basis_lists(2, {{0}}).coloops(), mask_of({0}));
    for (const auto& e : corpus::small())
        for (Mask a = 0; a <= e.m.ground(); ++a) {
            ASSERT_EQ(e.m.rank_of(a), rank_by_bases(e.m, a)) << e.name;
            if (a == e.m.ground())
                break;
        }
}

TEST(Matroid, Constructors)
{
    Matroid k4 = complete_graph(4);
    EXPECT_EQ(k4.rank(), 3);
    EXPECT_EQ(k4.size(), 6);
    EXPECT_EQ(k4.bases().size(), 16u);
    EXPECT_EQ(complete_graph(5).bases().size(), 125u);
    EXPECT_EQ(vamos().bases().size(), 65u);
    EXPECT_EQ(empty_matroid().size(), 0);
    EXPECT_EQ(empty_matroid().bases().size(), 1u);
    EXPECT_EQ(add_coloop(uniform(1, 1)), boolean(2));
    EXPECT_EQ(corpus::m1().rank(), 4);
    EXPECT_EQ(corpus::m2().rank(), 4);
}

TEST(Matroid, DualityIdentities)
{
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            EXPECT_EQ(dual(uniform(k, n)), uniform(n - k, n));
    std::mt19937 rng(3);
    for (const auto& e : corpus::small()) {
        const Matroid& m = e.m;
        EXPECT_EQ(dual(dual(m)), m);
        EXPECT_EQ(m.rank() + dual(m).rank(), m.size());
        std::uniform_int_distribution<Mask> md(0, m.ground());
        for (int t = 0; t < 10; ++t) {
            Mask a = md(rng);
            EXPECT_EQ(contraction(m, a), dual(deletion(dual(m), a))) << e.name;
        }
    }
    EXPECT_THROW(deletion(uniform(2, 3), mask_of({5})), InvalidArgument);
}

TEST(Matroid, UniformFlats)
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k) {
            Matroid u = uniform(k, n);
            for (Mask a = 0; a <= u.ground(); ++a) {
                bool flat = popcount(a) < k || a == u.ground();
                ASSERT_EQ(u.is_flat(a), flat);
                if (a == u.ground())
                    break;
            }
        }
}

TEST(Matroid, PavingAndStressed)
{
    for (int n = 1; n <= 7; ++n)
        for (int k = 1; k <= n; ++k) {
            EXPECT_TRUE(is_paving(uniform(k, n)));
            EXPECT_TRUE(stressed_hyperplane_counts(uniform(k, n)).empty());
        }
    Matroid v = vamos();
    EXPECT_TRUE(is_paving(v));
    EXPECT_TRUE(is_sparse_paving(v));
    auto lv = stressed_hyperplane_counts(v);
    EXPECT_EQ(lv.size(), 1u);
    EXPECT_EQ(lv[4], 5);
    Matroid k4 = complete_graph(4);
    EXPECT_TRUE(is_sparse_paving(k4));
    auto lk = stressed_hyperplane_counts(k4);
    EXPECT_EQ(lk[3], 4);
    EXPECT_FALSE(is_paving(complete_graph(5)));
    for (const auto& e : corpus::small())
        if (is_sparse_paving(e.m))
            EXPECT_TRUE(is_paving(e.m));
    EXPECT_THROW(stressed_hyperplane_counts(Matroid::from_basis_lists(2, {{0}})), PreconditionError);
}

TEST(Matroid, Relaxation)
{
    Matroid m = complete_graph(4);
    for (int round = 0; round < 4; ++round) {
        Mask tri = 0;
        for (Mask h : hyperplanes(m))
            if (popcount(h) == 3 && is_stressed(m, h)) {
                tri = h;
                break;
            }
        ASSERT_NE(tri, 0u);
        std::size_t before = m.bases().size();
        std::size_t cs = cusp(m, tri).size();
        m = relax(m, tri);
        EXPECT_EQ(m.bases().size(), before + cs);
    }
    EXPECT_EQ(m, uniform(3, 6));

    Matroid v = vamos();
    for (Mask h : hyperplanes(vamos()))
        if (popcount(h) == 4 && is_stressed(vamos(), h))
            v = relax(v, h);
    EXPECT_EQ(v.bases().size(), 70u);
    EXPECT_EQ(v, uniform(4, 8));

    Matroid u = uniform(2, 4);
    EXPECT_TRUE(cusp(u, mask_of({0})).empty());
    EXPECT_EQ(relax(u, mask_of({0})), u);
    EXPECT_THROW(relax(complete_graph(5), mask_of({0, 1, 2, 3, 4, 5})), PreconditionError);
}

TEST(Matroid, Tutte)
{
    EXPECT_EQ(tutte(uniform(1, 1)), BivariatePoly::monomial(1, 0));
    EXPECT_EQ(tutte(uniform(0, 1)), BivariatePoly::monomial(0, 1));
    BivariatePoly g = golden_tutte();
    EXPECT_EQ(tutte(corpus::m1()), g) << tutte(corpus::m1());
    EXPECT_EQ(tutte(corpus::m2()), g) << tutte(corpus::m2());
    EXPECT_EQ(tutte(corpus::m1()), tutte_by_subsets(corpus::m1()));
    EXPECT_FALSE(corpus::m1() == corpus::m2());
    // General position for the extra points is ruled out by the base count.
    Matroid generic = dual(corpus::rank3_from_lines(7, {{1, 2, 3}, {1, 5, 6}, {2, 6, 7}, {3, 5, 7}}));
    EXPECT_EQ(generic.bases().size(), 31u);
    EXPECT_NE(tutte(generic), g);
    for (const auto& e : corpus::small())
        EXPECT_EQ(tutte(e.m), tutte_by_subsets(e.m)) << e.name;
    Matroid a = uniform(2, 4), b = complete_graph(4);
    EXPECT_EQ(tutte(direct_sum(a, b)), tutte(a) * tutte(b));
}

TEST(Matroid, Simplify)
{
    Matroid m = Matroid::from_basis_lists(4, {{0, 2}, {1, 2}});
    // 3 is a loop, 0 and 1 are parallel.
    EXPECT_EQ(simplify(m), boolean(2));
    EXPECT_EQ(simplify(uniform(1, 5)), uniform(1, 1));
}
