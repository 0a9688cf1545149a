#ifndef CHOWKL_MATROID_HPP
#define CHOWKL_MATROID_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "families.hpp"
#include "poly.hpp"

namespace chowkl {

using Mask = std::uint32_t;
constexpr int kMaxGround = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : ((Mask(1) << n) - 1); }

inline std::vector<int> mask_elements(Mask m)
{
    std::vector<int> v;
    while (m) {
        v.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return v;
}

inline Mask mask_of(const std::vector<int>& elems)
{
    Mask m = 0;
    for (int e : elems) {
        if (e < 0 || e >= kMaxGround)
            throw InvalidArgument("element index out of range: " + std::to_string(e));
        m |= Mask(1) << e;
    }
    return m;
}

// Calls f(mask) for every k-subset of the bits in `universe`.
template <typename F>
void for_each_subset_of_size(Mask universe, int k, F&& f)
{
    std::vector<int> el = mask_elements(universe);
    int n = static_cast<int>(el.size());
    if (k < 0 || k > n)
        return;
    if (k == 0) {
        f(Mask(0));
        return;
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        Mask m = 0;
        for (int i : idx)
            m |= Mask(1) << el[static_cast<std::size_t>(i)];
        f(m);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Re-index the bits of m that lie in `keep` to 0..|keep|-1, preserving order.
inline Mask compress(Mask m, Mask keep)
{
    Mask out = 0;
    int j = 0;
    for (int e = 0; keep >> e; ++e)
        if (keep >> e & 1u) {
            if (m >> e & 1u)
                out |= Mask(1) << j;
            ++j;
        }
    return out;
}

/**
 * Matroid on ground set {0, ..., n-1} given by its bases as bit masks.
 * Immutable.  For n <= 16 a rank table over all subsets is built at
 * construction; larger ground sets fall back to scanning the bases.
 */
class Matroid {
public:
    static Matroid from_bases(int n, std::vector<Mask> bases)
    {
        check_size(n);
        if (bases.empty())
            throw EmptyBasisFamilyError("from_bases: empty basis family");
        Mask ground = full_mask(n);
        for (Mask b : bases)
            if (b & ~ground)
                throw InvalidArgument("from_bases: basis uses an element outside the ground set");
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        int r = popcount(bases.front());
        for (Mask b : bases)
            if (popcount(b) != r)
                throw MixedCardinalityError("from_bases: bases of different cardinalities");
        Matroid m(n, std::move(bases));
        m.check_exchange();
        return m;
    }

    static Matroid from_bases_unchecked(int n, std::vector<Mask> bases)
    {
        check_size(n);
        std::sort(bases.begin(), bases.end());
        bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
        return Matroid(n, std::move(bases));
    }

    static Matroid from_basis_lists(int n, const std::vector<std::vector<int>>& lists)
    {
        std::vector<Mask> b;
        for (const auto& l : lists) {
            for (int e : l)
                if (e >= n)
                    throw InvalidArgument("from_bases: element " + std::to_string(e) + " outside ground set of size " + std::to_string(n));
            Mask m = mask_of(l);
            if (popcount(m) != static_cast<int>(l.size()))
                throw InvalidArgument("from_bases: repeated element in a basis");
            b.push_back(m);
        }
        return from_bases(n, std::move(b));
    }

    int size() const { return n_; }
    int rank() const { return rank_; }
    Mask ground() const { return full_mask(n_); }
    const std::vector<Mask>& bases() const { return bases_; }

    bool is_basis(Mask b) const { return std::binary_search(bases_.begin(), bases_.end(), b); }

    int rank_of(Mask a) const
    {
        if (table_)
            return (*table_)[a & ground()];
        int r = 0;
        for (Mask b : bases_) {
            r = std::max(r, popcount(a & b));
            if (r == rank_)
                break;
        }
        return r;
    }

    bool is_independent(Mask a) const { return rank_of(a) == popcount(a); }

    Mask closure(Mask a) const
    {
        int r = rank_of(a);
        Mask c = a;
        for (int e = 0; e < n_; ++e)
            if (!(a >> e & 1u) && rank_of(a | Mask(1) << e) == r)
                c |= Mask(1) << e;
        return c;
    }

    bool is_flat(Mask a) const { return closure(a) == a; }

    Mask loops() const
    {
        Mask u = 0;
        for (Mask b : bases_)
            u |= b;
        return ground() & ~u;
    }

    Mask coloops() const
    {
        Mask c = ground();
        for (Mask b : bases_)
            c &= b;
        return c;
    }

    bool operator==(const Matroid& o) const { return n_ == o.n_ && bases_ == o.bases_; }

private:
    Matroid(int n, std::vector<Mask> bases) : n_(n), rank_(bases.empty() ? 0 : popcount(bases.front())), bases_(std::move(bases))
    {
        if (n_ <= 16)
            build_table();
    }

    static void check_size(int n)
    {
        if (n < 0 || n > kMaxGround)
            throw InvalidArgument("ground set size must be in [0, 24]");
    }

    void build_table()
    {
        const std::size_t N = std::size_t(1) << n_;
        auto t = std::make_shared<std::vector<std::uint8_t>>(N, 0);
        std::vector<std::uint8_t> indep(N, 0);
        for (Mask b : bases_)
            indep[b] = 1;
        // Downward closure: A independent iff A + e independent for some e.
        for (std::size_t a = N; a-- > 0;) {
            if (indep[a])
                continue;
            for (int e = 0; e < n_; ++e)
                if (!(a >> e & 1u) && indep[a | (std::size_t(1) << e)]) {
                    indep[a] = 1;
                    break;
                }
        }
        for (std::size_t a = 1; a < N; ++a) {
            if (indep[a]) {
                (*t)[a] = static_cast<std::uint8_t>(std::popcount(static_cast<Mask>(a)));
                continue;
            }
            std::uint8_t best = 0;
            for (Mask r = static_cast<Mask>(a); r; r &= r - 1)
                best = std::max(best, (*t)[a & ~(r & -r)]);
            (*t)[a] = best;
        }
        table_ = std::move(t);
    }

    void check_exchange() const
    {
        for (Mask b1 : bases_)
            for (Mask b2 : bases_) {
                Mask only1 = b1 & ~b2;
                Mask only2 = b2 & ~b1;
                for (Mask a = only1; a; a &= a - 1) {
                    Mask abit = a & -a;
                    bool ok = false;
                    for (Mask b = only2; b; b &= b - 1)
                        if (is_basis((b1 & ~abit) | (b & -b))) {
                            ok = true;
                            break;
                        }
                    if (!ok)
                        throw ExchangeAxiomError("from_bases: basis exchange axiom fails");
                }
            }
    }

    int n_ = 0;
    int rank_ = 0;
    std::vector<Mask> bases_;
    std::shared_ptr<const std::vector<std::uint8_t>> table_;
};

struct MatroidHash {
    std::size_t operator()(const Matroid& m) const
    {
        std::size_t h = std::hash<int>()(m.size());
        for (Mask b : m.bases())
            h ^= std::hash<Mask>()(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

// ---------------------------------------------------------------------------
// Constructors

inline Matroid uniform(int k, int n)
{
    if (k < 0 || n < 0 || k > n)
        throw InvalidArgument("uniform: need 0 <= k <= n");
    std::vector<Mask> b;
    for_each_subset_of_size(full_mask(n), k, [&](Mask m) { b.push_back(m); });
    return Matroid::from_bases_unchecked(n, std::move(b));
}

inline Matroid boolean(int n) { return uniform(n, n); }

inline Matroid empty_matroid() { return uniform(0, 0); }

// V_8 on {0..7}: all 4-sets except five circuit-hyperplanes.
inline Matroid vamos()
{
    const std::vector<Mask> ch{mask_of({0, 1, 2, 3}), mask_of({0, 1, 4, 5}), mask_of({2, 3, 4, 5}),
                               mask_of({0, 1, 6, 7}), mask_of({2, 3, 6, 7})};
    std::vector<Mask> b;
    for_each_subset_of_size(full_mask(8), 4, [&](Mask m) {
        if (std::find(ch.begin(), ch.end(), m) == ch.end())
            b.push_back(m);
    });
    return Matroid::from_bases(8, std::move(b));
}

// Edges of K_m in lexicographic order (i < j).
inline std::vector<std::pair<int, int>> complete_graph_edges(int m)
{
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            e.emplace_back(i, j);
    return e;
}

// Graphic matroid of K_m (the braid matroid); bases are spanning trees.
inline Matroid complete_graph(int m)
{
    if (m < 1)
        throw InvalidArgument("complete_graph: need m >= 1");
    auto edges = complete_graph_edges(m);
    int n = static_cast<int>(edges.size());
    if (n > kMaxGround)
        throw InvalidArgument("complete_graph: too many edges for a 24-element ground set");
    std::vector<Mask> b;
    for_each_subset_of_size(full_mask(n), m - 1, [&](Mask s) {
        std::vector<int> parent(static_cast<std::size_t>(m));
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
        for (int e : mask_elements(s)) {
            int u = find(edges[static_cast<std::size_t>(e)].first), v = find(edges[static_cast<std::size_t>(e)].second);
            if (u == v)
                return;
            parent[static_cast<std::size_t>(u)] = v;
        }
        b.push_back(s);
    });
    return Matroid::from_bases_unchecked(n, std::move(b));
}

// ---------------------------------------------------------------------------
// Combinators.  Minors are relabeled onto 0..n'-1 preserving element order.

inline Matroid dual(const Matroid& m)
{
    std::vector<Mask> b;
    b.reserve(m.bases().size());
    for (Mask x : m.bases())
        b.push_back(m.ground() & ~x);
    return Matroid::from_bases_unchecked(m.size(), std::move(b));
}

inline Matroid direct_sum(const Matroid& a, const Matroid& b)
{
    std::vector<Mask> out;
    out.reserve(a.bases().size() * b.bases().size());
    for (Mask x : a.bases())
        for (Mask y : b.bases())
            out.push_back(x | y << a.size());
    return Matroid::from_bases_unchecked(a.size() + b.size(), std::move(out));
}

inline void check_subset(const Matroid& m, Mask s)
{
    if (s & ~m.ground())
        throw InvalidArgument("subset is not contained in the ground set");
}

// M | S
inline Matroid restriction(const Matroid& m, Mask s)
{
    check_subset(m, s);
    int r = m.rank_of(s);
    std::vector<Mask> b;
    for (Mask x : m.bases())
        if (popcount(x & s) == r)
            b.push_back(compress(x & s, s));
    return Matroid::from_bases_unchecked(popcount(s), std::move(b));
}

// M \ S
inline Matroid deletion(const Matroid& m, Mask s)
{
    check_subset(m, s);
    return restriction(m, m.ground() & ~s);
}

// M / S
inline Matroid contraction(const Matroid& m, Mask s)
{
    check_subset(m, s);
    int r = m.rank_of(s);
    Mask keep = m.ground() & ~s;
    std::vector<Mask> b;
    for (Mask x : m.bases())
        if (popcount(x & s) == r)
            b.push_back(compress(x & keep, keep));
    return Matroid::from_bases_unchecked(popcount(keep), std::move(b));
}

inline Matroid add_coloop(const Matroid& m) { return direct_sum(m, uniform(1, 1)); }

// Remove loops and keep the smallest element of each parallel class.
inline Matroid simplify(const Matroid& m)
{
    Mask keep = 0;
    Mask lp = m.loops();
    for (int e = 0; e < m.size(); ++e) {
        if (lp >> e & 1u)
            continue;
        bool parallel = false;
        for (int f : mask_elements(keep))
            if (m.rank_of(Mask(1) << e | Mask(1) << f) == 1) {
                parallel = true;
                break;
            }
        if (!parallel)
            keep |= Mask(1) << e;
    }
    return restriction(m, keep);
}

// ---------------------------------------------------------------------------
// Predicates

inline bool is_uniform(const Matroid& m) { return BigInt(m.bases().size()) == binomial(m.size(), m.rank()); }

inline bool is_loopless(const Matroid& m) { return m.loops() == 0; }

inline void require_loopless(const Matroid& m, const char* where)
{
    if (!is_loopless(m))
        throw PreconditionError(std::string(where) + ": matroid has loops");
}

// Every circuit has at least rank(M) elements, i.e. every (k-1)-set is independent.
inline bool is_paving(const Matroid& m)
{
    bool ok = true;
    for_each_subset_of_size(m.ground(), m.rank() - 1, [&](Mask s) {
        if (ok && !m.is_independent(s))
            ok = false;
    });
    return ok;
}

inline bool is_sparse_paving(const Matroid& m) { return is_paving(m) && is_paving(dual(m)); }

inline std::vector<Mask> hyperplanes(const Matroid& m)
{
    std::unordered_set<Mask> seen;
    if (m.rank() == 0)
        return {};
    for_each_subset_of_size(m.ground(), m.rank() - 1, [&](Mask s) {
        if (m.is_independent(s))
            seen.insert(m.closure(s));
    });
    std::vector<Mask> h(seen.begin(), seen.end());
    std::sort(h.begin(), h.end());
    return h;
}

inline bool is_stressed(const Matroid& m, Mask a)
{
    return is_uniform(restriction(m, a)) && is_uniform(contraction(m, a));
}

// h -> number of stressed hyperplanes of size h, for h >= rank.
inline std::map<int, long long> stressed_hyperplane_counts(const Matroid& m)
{
    require_loopless(m, "stressed_hyperplane_counts");
    std::map<int, long long> out;
    for (Mask h : hyperplanes(m)) {
        int sz = popcount(h);
        if (sz >= m.rank() && is_stressed(m, h))
            ++out[sz];
    }
    return out;
}

inline std::vector<Mask> cusp(const Matroid& m, Mask a)
{
    check_subset(m, a);
    int ra = m.rank_of(a);
    std::vector<Mask> out;
    for_each_subset_of_size(m.ground(), m.rank(), [&](Mask s) {
        if (popcount(s & a) >= ra + 1)
            out.push_back(s);
    });
    return out;
}

inline Matroid relax(const Matroid& m, Mask a)
{
    check_subset(m, a);
    if (!is_stressed(m, a))
        throw PreconditionError("relax: subset is not stressed");
    std::vector<Mask> b = m.bases();
    for (Mask s : cusp(m, a))
        b.push_back(s);
    return Matroid::from_bases(m.size(), std::move(b));
}

// ---------------------------------------------------------------------------
// Tutte polynomial

/**
 * Polynomial in x and y with big integer coefficients, stored sparsely.
 */
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly monomial(int i, int j, const BigInt& c = 1)
    {
        BivariatePoly p;
        if (c != 0)
            p.t_[{i, j}] = c;
        return p;
    }

    const std::map<std::pair<int, int>, BigInt>& terms() const { return t_; }

    BigInt coeff(int i, int j) const
    {
        auto it = t_.find({i, j});
        return it == t_.end() ? BigInt(0) : it->second;
    }

    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b)
    {
        for (const auto& [k, v] : b.t_) {
            BigInt& s = a.t_[k];
            s += v;
            if (s == 0)
                a.t_.erase(k);
        }
        return a;
    }

    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b)
    {
        BivariatePoly r;
        for (const auto& [ka, va] : a.t_)
            for (const auto& [kb, vb] : b.t_) {
                std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
                BigInt& s = r.t_[k];
                s += va * vb;
                if (s == 0)
                    r.t_.erase(k);
            }
        return r;
    }

    bool operator==(const BivariatePoly& o) const { return t_ == o.t_; }

    std::string to_string() const
    {
        if (t_.empty())
            return "0";
        std::string s;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            auto [i, j] = it->first;
            const BigInt& c = it->second;
            s += c < 0 ? "-" : (s.empty() ? "" : "+");
            BigInt m = abs(c);
            if (m != 1 || (i == 0 && j == 0))
                s += m.str();
            if (i >= 1)
                s += i == 1 ? "x" : "x^" + std::to_string(i);
            if (j >= 1)
                s += j == 1 ? "y" : "y^" + std::to_string(j);
        }
        return s;
    }

private:
    std::map<std::pair<int, int>, BigInt> t_;
};

inline std::ostream& operator<<(std::ostream& os, const BivariatePoly& p) { return os << p.to_string(); }

namespace detail {

inline BivariatePoly tutte_rec(const Matroid& m, std::unordered_map<Matroid, BivariatePoly, MatroidHash>& memo)
{
    if (m.size() == 0)
        return BivariatePoly::monomial(0, 0);
    auto it = memo.find(m);
    if (it != memo.end())
        return it->second;
    const Mask e = 1;
    BivariatePoly r;
    if (m.loops() & e)
        r = BivariatePoly::monomial(0, 1) * tutte_rec(deletion(m, e), memo);
    else if (m.coloops() & e)
        r = BivariatePoly::monomial(1, 0) * tutte_rec(contraction(m, e), memo);
    else
        r = tutte_rec(deletion(m, e), memo) + tutte_rec(contraction(m, e), memo);
    memo.emplace(m, r);
    return r;
}

} // namespace detail

// Deletion-contraction on element 0, memoized per call.
inline BivariatePoly tutte(const Matroid& m)
{
    std::unordered_map<Matroid, BivariatePoly, MatroidHash> memo;
    return detail::tutte_rec(m, memo);
}

} // namespace chowkl

#endif
