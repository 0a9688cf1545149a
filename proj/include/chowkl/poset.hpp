#ifndef CHOWKL_POSET_HPP
#define CHOWKL_POSET_HPP

#include <algorithm>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "matroid.hpp"
#include "poly.hpp"
#include "shape.hpp"

namespace chowkl {

/**
 * Finite bounded graded poset.  Elements are 0..m-1; rank(bottom) = 0 and
 * every cover raises the rank by one.  Möbius rows are computed lazily, one
 * source element at a time, and are safe to query from several threads.
 */
class GradedPoset {
public:
    // Build from a rank vector and cover pairs (lo, hi); validates the shape.
    static GradedPoset from_covers(std::vector<int> rank, const std::vector<std::pair<int, int>>& covers)
    {
        const int m = static_cast<int>(rank.size());
        if (m == 0)
            throw InvalidArgument("poset: no elements");
        std::vector<std::vector<int>> upc(static_cast<std::size_t>(m));
        for (auto [lo, hi] : covers) {
            if (lo < 0 || hi < 0 || lo >= m || hi >= m)
                throw InvalidArgument("poset: cover refers to unknown element");
            if (rank[static_cast<std::size_t>(hi)] != rank[static_cast<std::size_t>(lo)] + 1)
                throw InvalidArgument("poset: cover (" + std::to_string(lo) + "," + std::to_string(hi) + ") does not raise rank by one");
            upc[static_cast<std::size_t>(lo)].push_back(hi);
        }
        std::vector<std::vector<bool>> leq(static_cast<std::size_t>(m), std::vector<bool>(static_cast<std::size_t>(m), false));
        for (int a = 0; a < m; ++a) {
            std::vector<int> stack{a};
            leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : upc[static_cast<std::size_t>(x)])
                    if (!leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)]) {
                        leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)] = true;
                        stack.push_back(y);
                    }
            }
        }
        return GradedPoset(std::move(rank), std::move(leq));
    }

    // Build from ranks and a full order relation (must be reflexive and transitive).
    static GradedPoset from_relation(std::vector<int> rank, std::vector<std::vector<bool>> leq)
    {
        return GradedPoset(std::move(rank), std::move(leq));
    }

    GradedPoset(GradedPoset&&) = default;
    GradedPoset& operator=(GradedPoset&&) = default;

    int size() const { return m_; }
    int rank(int a) const { return rank_[static_cast<std::size_t>(a)]; }
    int bottom() const { return bottom_; }
    int top() const { return top_; }
    int height() const { return rank(top_); }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }

    // Elements >= a (resp. <= a), ordered by rank then id; a itself included.
    const std::vector<int>& up(int a) const { return up_[static_cast<std::size_t>(a)]; }
    const std::vector<int>& down(int a) const { return down_[static_cast<std::size_t>(a)]; }
    // All elements ordered by rank then id.
    const std::vector<int>& order() const { return order_; }

    BigInt mobius(int a, int b) const
    {
        if (!leq(a, b))
            return 0;
        return row(a)[static_cast<std::size_t>(b)];
    }

    // chi_[a,b](x) = sum_{a<=c<=b} mu(a,c) x^(rk b - rk c)
    Poly char_poly(int a, int b) const
    {
        if (!leq(a, b))
            throw InvalidArgument("char_poly: a is not below b");
        const auto& r = row(a);
        const int h = rank(b) - rank(a);
        std::vector<BigInt> c(static_cast<std::size_t>(h) + 1);
        for (int x : up(a)) {
            if (rank(x) > rank(b))
                break;
            if (leq(x, b))
                c[static_cast<std::size_t>(rank(b) - rank(x))] += r[static_cast<std::size_t>(x)];
        }
        return Poly(std::move(c));
    }

    // chi_[a,b] / (x-1), and -1 for a == b.
    Poly reduced_char_poly(int a, int b) const
    {
        if (a == b)
            return Poly::constant(-1);
        return exact_div(char_poly(a, b), linear(-1, 1));
    }

    // Compute every Möbius row now; afterwards all queries are read-only.
    void freeze() const
    {
        for (int a = 0; a < m_; ++a)
            row(a);
    }

private:
    GradedPoset(std::vector<int> rk, std::vector<std::vector<bool>> rel)
        : m_(static_cast<int>(rk.size())), rank_(std::move(rk)), leq_(std::move(rel))
    {
        if (m_ == 0)
            throw InvalidArgument("poset: no elements");
        bottom_ = top_ = -1;
        for (int a = 0; a < m_; ++a) {
            bool is_bottom = true, is_top = true;
            for (int b = 0; b < m_; ++b) {
                if (!leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                    is_bottom = false;
                if (!leq_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                    is_top = false;
                if (a != b && leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] && leq_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                    throw InvalidArgument("poset: relation is not antisymmetric");
            }
            if (is_bottom)
                bottom_ = a;
            if (is_top)
                top_ = a;
        }
        if (bottom_ < 0 || top_ < 0)
            throw InvalidArgument("poset: not bounded (needs a unique bottom and top)");
        if (rank(bottom_) != 0)
            throw InvalidArgument("poset: bottom element must have rank 0");
        order_.resize(static_cast<std::size_t>(m_));
        for (int a = 0; a < m_; ++a)
            order_[static_cast<std::size_t>(a)] = a;
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) { return rank(x) < rank(y); });
        up_.resize(static_cast<std::size_t>(m_));
        down_.resize(static_cast<std::size_t>(m_));
        for (int x : order_)
            for (int a = 0; a < m_; ++a) {
                if (leq(a, x))
                    up_[static_cast<std::size_t>(a)].push_back(x);
                if (leq(x, a))
                    down_[static_cast<std::size_t>(a)].push_back(x);
            }
        // Graded: a < b implies rank(a) < rank(b), and every relation is
        // realized by a saturated chain of rank-one steps.
        for (int a = 0; a < m_; ++a)
            for (int b : up(a)) {
                if (a == b)
                    continue;
                if (rank(b) <= rank(a))
                    throw InvalidArgument("poset: rank is not strictly increasing");
                bool has_step = false;
                for (int c : up(a)) {
                    if (rank(c) > rank(a) + 1)
                        break;
                    if (rank(c) == rank(a) + 1 && leq(c, b)) {
                        has_step = true;
                        break;
                    }
                }
                if (!has_step)
                    throw InvalidArgument("poset: not graded");
            }
        rows_.resize(static_cast<std::size_t>(m_));
        flags_ = std::make_unique<std::once_flag[]>(static_cast<std::size_t>(m_));
    }

    const std::vector<BigInt>& row(int a) const
    {
        std::call_once(flags_[static_cast<std::size_t>(a)], [&] {
            auto r = std::make_unique<std::vector<BigInt>>(static_cast<std::size_t>(m_));
            const auto& u = up(a);
            for (int b : u) {
                if (b == a) {
                    (*r)[static_cast<std::size_t>(b)] = 1;
                    continue;
                }
                BigInt s = 0;
                for (int c : u) {
                    if (rank(c) >= rank(b))
                        break;
                    if (leq(c, b))
                        s += (*r)[static_cast<std::size_t>(c)];
                }
                (*r)[static_cast<std::size_t>(b)] = -s;
            }
            rows_[static_cast<std::size_t>(a)] = std::move(r);
        });
        return *rows_[static_cast<std::size_t>(a)];
    }

    int m_ = 0;
    std::vector<int> rank_;
    std::vector<std::vector<bool>> leq_;
    int bottom_ = 0, top_ = 0;
    std::vector<int> order_;
    std::vector<std::vector<int>> up_, down_;
    mutable std::vector<std::unique_ptr<std::vector<BigInt>>> rows_;
    mutable std::unique_ptr<std::once_flag[]> flags_;
};

/**
 * Lattice of flats of a loopless matroid.  Flats are stored in rank order
 * (ties by mask), so element 0 is the empty flat and the last one is E.
 */
class FlatsLattice {
public:
    explicit FlatsLattice(const Matroid& m) : n_(m.size()), rank_(m.rank())
    {
        require_loopless(m, "lattice_of_flats");
        std::vector<std::vector<Mask>> levels{{Mask(0)}};
        std::vector<std::pair<Mask, Mask>> cover_masks;
        for (int r = 0; r < rank_; ++r) {
            std::unordered_set<Mask> next;
            for (Mask f : levels.back())
                for (int e = 0; e < n_; ++e)
                    if (!(f >> e & 1u)) {
                        Mask g = m.closure(f | Mask(1) << e);
                        next.insert(g);
                        cover_masks.emplace_back(f, g);
                    }
            std::vector<Mask> lv(next.begin(), next.end());
            std::sort(lv.begin(), lv.end());
            levels.push_back(std::move(lv));
        }
        std::vector<int> ranks;
        for (int r = 0; r <= rank_; ++r)
            for (Mask f : levels[static_cast<std::size_t>(r)]) {
                index_[f] = static_cast<int>(flats_.size());
                flats_.push_back(f);
                ranks.push_back(r);
            }
        const std::size_t k = flats_.size();
        std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                leq[i][j] = (flats_[i] & ~flats_[j]) == 0;
        for (auto [f, g] : cover_masks)
            covers_.emplace_back(index_.at(f), index_.at(g));
        std::sort(covers_.begin(), covers_.end());
        covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());
        poset_ = std::make_unique<GradedPoset>(GradedPoset::from_relation(std::move(ranks), std::move(leq)));
    }

    int size() const { return static_cast<int>(flats_.size()); }
    int ground_size() const { return n_; }
    int rank() const { return rank_; }
    Mask flat(int i) const { return flats_[static_cast<std::size_t>(i)]; }
    const std::vector<Mask>& flats() const { return flats_; }
    int index_of(Mask f) const
    {
        auto it = index_.find(f);
        return it == index_.end() ? -1 : it->second;
    }
    const std::vector<std::pair<int, int>>& covers() const { return covers_; }
    const GradedPoset& poset() const { return *poset_; }

private:
    int n_ = 0, rank_ = 0;
    std::vector<Mask> flats_;
    std::unordered_map<Mask, int> index_;
    std::vector<std::pair<int, int>> covers_;
    std::unique_ptr<GradedPoset> poset_;
};

inline FlatsLattice lattice_of_flats(const Matroid& m) { return FlatsLattice(m); }

// ---------------------------------------------------------------------------
// Matroid-level polynomials

inline Poly char_poly(const Matroid& m)
{
    if (!is_loopless(m))
        return {};
    FlatsLattice L(m);
    return L.poset().char_poly(L.poset().bottom(), L.poset().top());
}

inline Poly reduced_char_poly(const Matroid& m)
{
    if (!is_loopless(m))
        return {};
    if (m.size() == 0)
        return Poly::constant(-1);
    return exact_div(char_poly(m), linear(-1, 1));
}

inline Poly whitney_numbers(const GradedPoset& p)
{
    std::vector<BigInt> c(static_cast<std::size_t>(p.height()) + 1);
    for (int a = 0; a < p.size(); ++a)
        c[static_cast<std::size_t>(p.rank(a))] += 1;
    return Poly(std::move(c));
}

inline Poly whitney_numbers(const Matroid& m)
{
    require_loopless(m, "whitney_numbers");
    return whitney_numbers(FlatsLattice(m).poset());
}

/**
 * f- and h-polynomials of the order complex of the proper part of p.
 * With D = height - 1 and f_j the number of chains of j+1 proper elements
 * (f_{-1} = 1): f(x) = sum_{i=0}^{D} f_{i-1} x^{D-i}, h(x) = f(x-1).
 */
inline std::pair<Poly, Poly> order_complex_f_h(const GradedPoset& p)
{
    if (p.height() < 1)
        throw InvalidArgument("order complex: poset of rank 0");
    const int D = p.height() - 1;
    // chains[a][j] = number of chains of j+1 proper elements ending at a
    std::vector<std::vector<BigInt>> chains(static_cast<std::size_t>(p.size()));
    std::vector<BigInt> f(static_cast<std::size_t>(D) + 1); // f[j+1] = f_j
    f[0] = 1;
    for (int a : p.order()) {
        if (a == p.bottom() || a == p.top())
            continue;
        auto& ca = chains[static_cast<std::size_t>(a)];
        ca.assign(static_cast<std::size_t>(D), 0);
        ca[0] = 1;
        for (int b : p.down(a)) {
            if (b == a || b == p.bottom())
                continue;
            const auto& cb = chains[static_cast<std::size_t>(b)];
            for (int j = 0; j + 1 < D; ++j)
                ca[static_cast<std::size_t>(j + 1)] += cb[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j < D; ++j)
            f[static_cast<std::size_t>(j + 1)] += ca[static_cast<std::size_t>(j)];
    }
    std::vector<BigInt> fc(static_cast<std::size_t>(D) + 1);
    for (int i = 0; i <= D; ++i)
        fc[static_cast<std::size_t>(D - i)] = f[static_cast<std::size_t>(i)];
    Poly fp(std::move(fc));
    // h(x) = f(x - 1)
    Poly h;
    const Poly xm1 = linear(-1, 1);
    for (int i = fp.degree(); i >= 0; --i)
        h = h * xm1 + Poly::constant(fp.coeff(i));
    return {fp, h};
}

inline std::pair<Poly, Poly> bergman_f_h(const Matroid& m)
{
    require_loopless(m, "bergman_f_h");
    if (m.rank() < 1)
        throw InvalidArgument("bergman_f_h: rank 0 matroid");
    return order_complex_f_h(FlatsLattice(m).poset());
}

// ---------------------------------------------------------------------------
// Intrinsic engines on an arbitrary bounded graded poset.  Tables are indexed
// by element z and hold the invariant of the upper interval [z, top].

struct ChowTables {
    std::vector<Poly> uH, H;
};

inline ChowTables kls_chow_tables(const GradedPoset& p)
{
    ChowTables t;
    t.uH.resize(static_cast<std::size_t>(p.size()));
    t.H.resize(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        if (z == p.top()) {
            t.uH[static_cast<std::size_t>(z)] = t.H[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        Poly s;
        for (int w : p.up(z))
            if (w != z)
                s = s + t.uH[static_cast<std::size_t>(w)].shift(p.rank(w) - p.rank(z));
        auto [a, b] = palindromic_decompose(s);
        t.uH[static_cast<std::size_t>(z)] = -b;
        t.H[static_cast<std::size_t>(z)] = a;
    }
    return t;
}

inline Poly kls_uH_general(const GradedPoset& p) { return kls_chow_tables(p).uH[static_cast<std::size_t>(p.bottom())]; }
inline Poly kls_H_general(const GradedPoset& p) { return kls_chow_tables(p).H[static_cast<std::size_t>(p.bottom())]; }

struct KLTables {
    std::vector<Poly> P, Z;
};

// P_[z,top] from palindromicity of Z = sum_w x^(rk w - rk z) P_[w,top] and deg P < r/2.
inline KLTables kls_kl_tables(const GradedPoset& p)
{
    KLTables t;
    t.P.resize(static_cast<std::size_t>(p.size()));
    t.Z.resize(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        if (z == p.top()) {
            t.P[static_cast<std::size_t>(z)] = t.Z[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        const int r = p.rank(p.top()) - p.rank(z);
        Poly s;
        for (int w : p.up(z))
            if (w != z)
                s = s + t.P[static_cast<std::size_t>(w)].shift(p.rank(w) - p.rank(z));
        std::vector<BigInt> c;
        for (int i = 0; 2 * i < r; ++i)
            c.push_back(s.coeff(r - i) - s.coeff(i));
        Poly P(std::move(c));
        t.Z[static_cast<std::size_t>(z)] = P + s;
        t.P[static_cast<std::size_t>(z)] = std::move(P);
    }
    return t;
}

inline Poly kls_P_general(const GradedPoset& p) { return kls_kl_tables(p).P[static_cast<std::size_t>(p.bottom())]; }
inline Poly kls_Z_general(const GradedPoset& p) { return kls_kl_tables(p).Z[static_cast<std::size_t>(p.bottom())]; }

} // namespace chowkl

#endif
