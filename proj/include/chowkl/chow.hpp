#ifndef CHOWKL_CHOW_HPP
#define CHOWKL_CHOW_HPP

#include <map>
#include <unordered_map>
#include <vector>

#include "families.hpp"
#include "matroid.hpp"
#include "poset.hpp"

namespace chowkl {

// ---------------------------------------------------------------------------
// Lattice engines.  Upper tables are indexed by flat id z and hold the value
// for the contraction M/F_z; lower tables hold the value for M|F_z.

namespace detail {

inline std::vector<Poly> chain_suffix_sums(const GradedPoset& p)
{
    // c[z] = sum over chains z = F_0 < F_1 < ... of prod (x + ... + x^(gap-1))
    std::vector<Poly> c(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        Poly s = Poly::constant(1);
        for (int w : p.up(z)) {
            const int gap = p.rank(w) - p.rank(z);
            if (gap >= 2)
                s = s + geometric(1, gap - 1) * c[static_cast<std::size_t>(w)];
        }
        c[static_cast<std::size_t>(z)] = std::move(s);
    }
    return c;
}

} // namespace detail

inline Poly chow_chains(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    return detail::chain_suffix_sums(p)[static_cast<std::size_t>(p.bottom())];
}

inline Poly aug_chow_chains(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    auto c = detail::chain_suffix_sums(p);
    Poly s = Poly::constant(1);
    for (int w : p.up(p.bottom()))
        if (w != p.bottom())
            s = s + geometric(1, p.rank(w)) * c[static_cast<std::size_t>(w)];
    return s;
}

// uH_[z,E] = sum_{w>z} rchi_[z,w] uH_[w,E]
inline std::vector<Poly> chow_char_conv_table(const GradedPoset& p)
{
    std::vector<Poly> t(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        if (z == p.top()) {
            t[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        Poly s;
        for (int w : p.up(z))
            if (w != z)
                s = s + p.reduced_char_poly(z, w) * t[static_cast<std::size_t>(w)];
        t[static_cast<std::size_t>(z)] = std::move(s);
    }
    return t;
}

inline Poly chow_char_conv(const FlatsLattice& L)
{
    return chow_char_conv_table(L.poset())[static_cast<std::size_t>(L.poset().bottom())];
}

inline Poly chow_intrinsic(const FlatsLattice& L) { return kls_uH_general(L.poset()); }
inline Poly aug_chow_intrinsic(const FlatsLattice& L) { return kls_H_general(L.poset()); }

// uH_[0,z] = sum_{w<z} uH_[0,w] rchi_[w,z]
inline Poly chow_incidence_inv(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    std::vector<Poly> t(static_cast<std::size_t>(p.size()));
    for (int z : p.order()) {
        if (z == p.bottom()) {
            t[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        Poly s;
        for (int w : p.down(z))
            if (w != z)
                s = s + t[static_cast<std::size_t>(w)] * p.reduced_char_poly(w, z);
        t[static_cast<std::size_t>(z)] = std::move(s);
    }
    return t[static_cast<std::size_t>(p.top())];
}

// H = sum_F x^rk(F) uH_{M/F}
inline Poly aug_chow_contraction_conv(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    auto u = chow_char_conv_table(p);
    Poly s;
    for (int w = 0; w < p.size(); ++w)
        s = s + u[static_cast<std::size_t>(w)].shift(p.rank(w));
    return s;
}

// H = 1 + x sum_{F != E} uH_{M/F}
inline Poly aug_chow_alt_conv(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    auto u = chow_char_conv_table(p);
    Poly s;
    for (int w = 0; w < p.size(); ++w)
        if (w != p.top())
            s = s + u[static_cast<std::size_t>(w)];
    return Poly::constant(1) + s.shift(1);
}

// H_[z,E] = -sum_{w>z} mu(z,w) (1 + ... + x^(rk w - rk z)) H_[w,E]
inline Poly aug_chow_mobius_conv(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    std::vector<Poly> t(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        if (z == p.top()) {
            t[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        Poly s;
        for (int w : p.up(z))
            if (w != z)
                s = s - p.mobius(z, w) * (one_to(p.rank(w) - p.rank(z)) * t[static_cast<std::size_t>(w)]);
        t[static_cast<std::size_t>(z)] = std::move(s);
    }
    return t[static_cast<std::size_t>(p.bottom())];
}

// H_[0,z] = -sum_{w<z} H_[0,w] mu(w,z) (1 + ... + x^(rk z - rk w))
inline Poly aug_chow_incidence_inv(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    std::vector<Poly> t(static_cast<std::size_t>(p.size()));
    for (int z : p.order()) {
        if (z == p.bottom()) {
            t[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        Poly s;
        for (int w : p.down(z))
            if (w != z)
                s = s - p.mobius(w, z) * (t[static_cast<std::size_t>(w)] * one_to(p.rank(z) - p.rank(w)));
        t[static_cast<std::size_t>(z)] = std::move(s);
    }
    return t[static_cast<std::size_t>(p.top())];
}

// ---------------------------------------------------------------------------
// Closed forms for uniform matroids and relatives.

inline void check_uniform_args(int k, int n, const char* where)
{
    if (k < 0 || n < 0 || k > n)
        throw InvalidArgument(std::string(where) + ": need 0 <= k <= n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
}

// uH_{U_{k,n}} = sum_{j<k} C(n,j) d_j (1 + ... + x^(k-1-j))
inline Poly chow_uniform(int k, int n)
{
    check_uniform_args(k, n, "chow_uniform");
    if (k == 0)
        return n == 0 ? Poly::constant(1) : Poly(); // U_{0,n} has loops
    auto d = derangement_table(k - 1);
    Poly s;
    for (int j = 0; j < k; ++j)
        s = s + binomial(n, j) * (d[static_cast<std::size_t>(j)] * one_to(k - 1 - j));
    return s;
}

// H_{U_{k,n}} = 1 + x sum_{j<k} C(n,j) A_j (1 + ... + x^(k-1-j))
inline Poly aug_chow_uniform(int k, int n)
{
    check_uniform_args(k, n, "aug_chow_uniform");
    auto a = eulerian_table(k);
    Poly s;
    for (int j = 0; j < k; ++j)
        s = s + binomial(n, j) * (a[static_cast<std::size_t>(j)] * one_to(k - 1 - j));
    return Poly::constant(1) + s.shift(1);
}

inline Poly reduced_char_uniform(int k, int n)
{
    check_uniform_args(k, n, "reduced_char_uniform");
    if (n == 0)
        return Poly::constant(-1);
    if (k == 0)
        return {};
    std::vector<BigInt> c(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j)
        c[static_cast<std::size_t>(k - 1 - j)] = (j % 2 ? -1 : 1) * binomial(n - 1, j);
    return Poly(std::move(c));
}

// Alternating form: sum_{j<k} C(n,j) A_j rchi_{U_{k-j,n-j}}
inline Poly chow_uniform_inverse(int k, int n)
{
    check_uniform_args(k, n, "chow_uniform_inverse");
    if (k == 0)
        return n == 0 ? Poly::constant(1) : Poly();
    auto a = eulerian_table(k);
    Poly s;
    for (int j = 0; j < k; ++j)
        s = s + binomial(n, j) * (a[static_cast<std::size_t>(j)] * reduced_char_uniform(k - j, n - j));
    return s;
}

// sum_{j<k} (-1)^(k-1-j) C(n,j) C(n-1-j,k-1-j) Ã_j (1 + ... + x^(k-j))
inline Poly aug_chow_uniform_inverse(int k, int n)
{
    check_uniform_args(k, n, "aug_chow_uniform_inverse");
    if (k == 0)
        return Poly::constant(1);
    auto b = binomial_eulerian_table(k);
    Poly s;
    for (int j = 0; j < k; ++j) {
        BigInt c = binomial(n, j) * binomial(n - 1 - j, k - 1 - j);
        if ((k - 1 - j) % 2)
            c = -c;
        s = s + c * (b[static_cast<std::size_t>(j)] * one_to(k - j));
    }
    return s;
}

// U_{k,n} plus a coloop.
inline Poly chow_uniform_coloop(int k, int n)
{
    check_uniform_args(k, n, "chow_uniform_coloop");
    if (k == 0)
        return n == 0 ? Poly::constant(1) : Poly();
    auto a = eulerian_table(k);
    Poly s;
    for (int j = 1; j < k; ++j)
        s = s + binomial(n, j) * (chow_uniform(k - j, n - j) * a[static_cast<std::size_t>(j)]);
    return linear(1, 1) * chow_uniform(k, n) + s.shift(1);
}

inline Poly aug_chow_uniform_coloop(int k, int n)
{
    check_uniform_args(k, n, "aug_chow_uniform_coloop");
    auto b = binomial_eulerian_table(k);
    Poly s;
    for (int j = 0; j < k; ++j)
        s = s + binomial(n, j) * (chow_uniform(k - j, n - j) * b[static_cast<std::size_t>(j)]);
    return linear(1, 1) * aug_chow_uniform(k, n) + s.shift(1);
}

namespace detail {

template <class Uni, class Col>
Poly paving_formula(int k, int n, const std::map<int, long long>& lambda, Uni uni, Col col, const char* where)
{
    check_uniform_args(k, n, where);
    if (k < 1)
        throw InvalidArgument(std::string(where) + ": rank must be at least 1");
    Poly s = uni(k, n);
    for (auto [h, cnt] : lambda) {
        if (cnt < 0)
            throw InvalidArgument(std::string(where) + ": negative hyperplane count");
        if (cnt == 0)
            continue;
        if (h < k || h >= n)
            throw InvalidArgument(std::string(where) + ": stressed hyperplane size " + std::to_string(h) + " out of range");
        s = s - BigInt(cnt) * (uni(k, h + 1) - col(k - 1, h));
    }
    return s;
}

} // namespace detail

inline Poly chow_paving(int k, int n, const std::map<int, long long>& lambda)
{
    return detail::paving_formula(k, n, lambda, chow_uniform, chow_uniform_coloop, "chow_paving");
}

inline Poly aug_chow_paving(int k, int n, const std::map<int, long long>& lambda)
{
    return detail::paving_formula(k, n, lambda, aug_chow_uniform, aug_chow_uniform_coloop, "aug_chow_paving");
}

inline Poly chow_of_paving(const Matroid& m)
{
    if (!is_paving(m))
        throw PreconditionError("chow_of_paving: matroid is not paving");
    return chow_paving(m.rank(), m.size(), stressed_hyperplane_counts(m));
}

inline Poly aug_chow_of_paving(const Matroid& m)
{
    if (!is_paving(m))
        throw PreconditionError("aug_chow_of_paving: matroid is not paving");
    return aug_chow_paving(m.rank(), m.size(), stressed_hyperplane_counts(m));
}

/**
 * Chow polynomial of the braid matroid K_n as a sum over R = {r_1 < r_2 < ...}
 * in [n] with r_0 = 0 of prod (x + ... + x^(r_i - r_{i-1} - 1)) S(n - r_{i-1}, n - r_i).
 * Summed by last element; terms with r_i = n vanish since S(m, 0) = 0 for m > 0.
 */
inline Poly chow_braid(int n)
{
    if (n < 1)
        throw InvalidArgument("chow_braid: n must be at least 1");
    std::vector<Poly> g(static_cast<std::size_t>(n) + 1); // g[r]: all R ending at r
    g[0] = Poly::constant(1);
    Poly total = g[0];
    for (int r = 1; r <= n; ++r) {
        Poly s;
        for (int q = 0; q < r; ++q)
            s = s + stirling2(n - q, n - r) * (g[static_cast<std::size_t>(q)] * geometric(1, r - q - 1));
        g[static_cast<std::size_t>(r)] = s;
        total = total + s;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Semi-small recursions on single-element deletions.  Minors are memoized on
// their exact relabeled bases set.

class SemismallEngine {
public:
    Poly uH(const Matroid& m)
    {
        require_loopless(m, "chow_semismall");
        if (m.rank() <= 1)
            return Poly::constant(1);
        if (auto it = uh_.find(m); it != uh_.end())
            return it->second;
        Poly r;
        const Mask nonco = m.ground() & ~m.coloops();
        if (nonco) {
            const int i = std::countr_zero(nonco);
            const Mask bi = Mask(1) << i;
            r = uH(deletion(m, bi));
            Poly s;
            for_each_flat_pair(m, i, [&](Mask f) {
                if (f != 0)
                    s = s + uH(contraction(m, f | bi)) * uH(restriction(m, f));
            });
            r = r + s.shift(1);
        } else {
            r = coloop_step(m, true);
        }
        uh_.emplace(m, r);
        return r;
    }

    Poly H(const Matroid& m)
    {
        require_loopless(m, "aug_chow_semismall");
        if (m.rank() == 0)
            return Poly::constant(1);
        if (auto it = h_.find(m); it != h_.end())
            return it->second;
        Poly r;
        const Mask nonco = m.ground() & ~m.coloops();
        if (nonco) {
            const int i = std::countr_zero(nonco);
            const Mask bi = Mask(1) << i;
            r = H(deletion(m, bi));
            Poly s;
            for_each_flat_pair(m, i, [&](Mask f) { s = s + uH(contraction(m, f | bi)) * H(restriction(m, f)); });
            r = r + s.shift(1);
        } else {
            r = coloop_step(m, false);
        }
        h_.emplace(m, r);
        return r;
    }

private:
    // F with F a flat, F proper in E - i, and F + i a flat.
    template <class F>
    static void for_each_flat_pair(const Matroid& m, int i, F&& f)
    {
        const Mask rest = m.ground() & ~(Mask(1) << i);
        for (Mask a = rest;; a = (a - 1) & rest) {
            if (a != rest && m.is_flat(a) && m.is_flat(a | Mask(1) << i))
                f(a);
            if (a == 0)
                break;
        }
    }

    // M = N + coloop c with N = M - c.
    Poly coloop_step(const Matroid& m, bool under)
    {
        const int c = std::countr_zero(m.coloops());
        Matroid n = deletion(m, Mask(1) << c);
        Poly s;
        const Mask g = n.ground();
        for (Mask a = g;; a = (a - 1) & g) {
            if (a != g && (under ? a != 0 : true) && n.is_flat(a))
                s = s + uH(contraction(n, a)) * (under ? uH(restriction(n, a)) : H(restriction(n, a)));
            if (a == 0)
                break;
        }
        return linear(1, 1) * (under ? uH(n) : H(n)) + s.shift(1);
    }

    std::unordered_map<Matroid, Poly, MatroidHash> uh_, h_;
};

inline Poly chow_semismall(const Matroid& m) { return SemismallEngine().uH(m); }
inline Poly aug_chow_semismall(const Matroid& m) { return SemismallEngine().H(m); }

} // namespace chowkl

#endif
