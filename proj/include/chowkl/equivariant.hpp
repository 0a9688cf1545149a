#ifndef CHOWKL_EQUIVARIANT_HPP
#define CHOWKL_EQUIVARIANT_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "poly.hpp"
#include "shape.hpp"

namespace chowkl {

// Weakly decreasing positive parts; the empty partition is the one of 0.
using Partition = std::vector<int>;

inline int partition_size(const Partition& p)
{
    int s = 0;
    for (int v : p)
        s += v;
    return s;
}

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1]))
            return false;
    return true;
}

inline std::string to_string(const Partition& p)
{
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

// All partitions of m, largest first part first.
inline std::vector<Partition> partitions(int m)
{
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rest, int cap) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int v = std::min(rest, cap); v >= 1; --v) {
            cur.push_back(v);
            self(self, rest - v, v);
            cur.pop_back();
        }
    };
    rec(rec, m, m);
    return out;
}

// hook length formula
inline BigInt specht_dim(const Partition& p)
{
    if (!is_partition(p))
        throw InvalidArgument("specht_dim: not a partition " + to_string(p));
    BigInt hooks = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int below = 0;
            for (std::size_t r = i + 1; r < p.size() && p[r] > j; ++r)
                ++below;
            hooks *= p[i] - j - 1 + below + 1;
        }
    return factorial(partition_size(p)) / hooks;
}

/**
 * A virtual representation of S_m as multiplicities of Specht modules.
 * Zero multiplicities are never stored.
 */
class VirtualRep {
public:
    VirtualRep() = default;
    explicit VirtualRep(int m) : m_(m) {}
    static VirtualRep irreducible(Partition p, BigInt mult = 1)
    {
        if (!is_partition(p))
            throw InvalidArgument("not a partition " + chowkl::to_string(p));
        VirtualRep r(partition_size(p));
        r.add(p, mult);
        return r;
    }
    static VirtualRep trivial(int m) { return m == 0 ? irreducible({}) : irreducible({m}); }

    int group_size() const { return m_; }
    const std::map<Partition, BigInt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    BigInt mult(const Partition& p) const
    {
        auto it = t_.find(p);
        return it == t_.end() ? BigInt(0) : it->second;
    }

    void add(const Partition& p, const BigInt& c)
    {
        if (partition_size(p) != m_)
            throw InvalidArgument("VirtualRep: " + chowkl::to_string(p) + " is not a partition of " + std::to_string(m_));
        if (c == 0)
            return;
        BigInt& v = t_[p];
        v += c;
        if (v == 0)
            t_.erase(p);
    }

    VirtualRep& operator+=(const VirtualRep& o)
    {
        same_group(o);
        for (const auto& [p, c] : o.t_)
            add(p, c);
        return *this;
    }
    VirtualRep& operator-=(const VirtualRep& o)
    {
        same_group(o);
        for (const auto& [p, c] : o.t_)
            add(p, -c);
        return *this;
    }
    friend VirtualRep operator+(VirtualRep a, const VirtualRep& b) { return a += b; }
    friend VirtualRep operator-(VirtualRep a, const VirtualRep& b) { return a -= b; }
    friend VirtualRep operator*(const BigInt& c, const VirtualRep& a)
    {
        VirtualRep r(a.m_);
        for (const auto& [p, v] : a.t_)
            r.add(p, c * v);
        return r;
    }
    friend bool operator==(const VirtualRep& a, const VirtualRep& b) { return a.m_ == b.m_ && a.t_ == b.t_; }

    BigInt dim() const
    {
        BigInt d = 0;
        for (const auto& [p, c] : t_)
            d += c * specht_dim(p);
        return d;
    }

    bool honest() const
    {
        for (const auto& kv : t_)
            if (kv.second < 0)
                return false;
        return true;
    }

    // every multiplicity of *this is at most that in o
    bool summand_of(const VirtualRep& o) const
    {
        same_group(o);
        for (const auto& [p, c] : t_)
            if (o.mult(p) < c)
                return false;
        return true;
    }

    std::string to_string() const
    {
        if (t_.empty())
            return "0";
        std::string s;
        bool first = true;
        // larger partitions (dominance-ish, lexicographic) first
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            BigInt c = it->second;
            if (!first)
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            if (c < 0)
                c = -c;
            if (c != 1)
                s += c.str() + "*";
            s += "V" + chowkl::to_string(it->first);
            first = false;
        }
        return s;
    }

private:
    void same_group(const VirtualRep& o) const
    {
        if (o.m_ != m_)
            throw InvalidArgument("VirtualRep: group sizes differ");
    }

    int m_ = 0;
    std::map<Partition, BigInt> t_;
};

// Coefficient i is a rep of S_m; all coefficients share m.
struct GradedVirtualRep {
    int m = 0;
    std::vector<VirtualRep> coeffs;

    const VirtualRep& operator[](std::size_t i) const { return coeffs[i]; }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Poly dims() const
    {
        std::vector<BigInt> c;
        for (const auto& v : coeffs)
            c.push_back(v.dim());
        return Poly(std::move(c));
    }
};

// Branching: remove one corner box in every way.
inline VirtualRep restrict_once(const VirtualRep& r)
{
    if (r.group_size() < 1)
        throw InvalidArgument("restrict_once: nothing to restrict");
    VirtualRep out(r.group_size() - 1);
    for (const auto& [p, c] : r.terms())
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i + 1 == p.size() || p[i + 1] < p[i]) {
                Partition q = p;
                if (--q[i] == 0)
                    q.pop_back();
                out.add(q, c);
            }
    return out;
}

inline VirtualRep restrict_to(VirtualRep r, int m)
{
    if (m < 1 || m > r.group_size())
        throw InvalidArgument("restrict_to: need 1 <= m <= " + std::to_string(r.group_size()));
    while (r.group_size() > m)
        r = restrict_once(r);
    return r;
}

inline GradedVirtualRep restrict_to(const GradedVirtualRep& g, int m)
{
    GradedVirtualRep out{m, {}};
    for (const auto& v : g.coeffs)
        out.coeffs.push_back(restrict_to(v, m));
    return out;
}

// Ind from S_r x S_m of trivial x V_lambda: horizontal strips of size r.
inline VirtualRep pieri_induce_trivial(const Partition& lam, int r)
{
    if (r < 0)
        throw InvalidArgument("pieri_induce_trivial: negative r");
    if (!is_partition(lam))
        throw InvalidArgument("not a partition " + to_string(lam));
    VirtualRep out(partition_size(lam) + r);
    Partition mu(lam.size() + 1, 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == mu.size()) {
            if (left == 0) {
                Partition q = mu;
                while (!q.empty() && q.back() == 0)
                    q.pop_back();
                out.add(q, 1);
            }
            return;
        }
        const int base = i < lam.size() ? lam[i] : 0;
        const int cap = i == 0 ? base + left : std::min(base + left, lam[i - 1]);
        for (int v = base; v <= cap; ++v) {
            mu[i] = v;
            self(self, i + 1, left - (v - base));
        }
    };
    rec(rec, 0, r);
    return out;
}

inline VirtualRep induce_trivial(const VirtualRep& v, int r)
{
    VirtualRep out(v.group_size() + r);
    for (const auto& [p, c] : v.terms())
        out += c * pieri_induce_trivial(p, r);
    return out;
}

namespace detail {
inline void check_eq_args(int k, int n, const char* who)
{
    if (k < 1 || k > n)
        throw InvalidArgument(std::string(who) + ": need 1 <= k <= n");
}
} // namespace detail

/**
 * S_n-equivariant KL polynomial of U_{k,n}: trivial constant term, and for
 * i >= 1 the sum over 1 <= b <= min(n-k, k-2i) of V[n-2i-b+1, b+1, 2^(i-1)].
 * Shapes that fail to be partitions are skipped; none occur for 1 <= k <= n.
 */
inline GradedVirtualRep eq_kl_uniform(int k, int n)
{
    detail::check_eq_args(k, n, "eq_kl_uniform");
    GradedVirtualRep g{n, {VirtualRep::trivial(n)}};
    for (int i = 1; 2 * i < k; ++i) {
        VirtualRep c(n);
        for (int b = 1; b <= std::min(n - k, k - 2 * i); ++b) {
            Partition p{n - 2 * i - b + 1, b + 1};
            p.insert(p.end(), static_cast<std::size_t>(i - 1), 2);
            if (is_partition(p))
                c.add(p, 1);
        }
        g.coeffs.push_back(std::move(c));
    }
    while (g.coeffs.size() > 1 && g.coeffs.back().is_zero())
        g.coeffs.pop_back();
    return g;
}

// One flat orbit per rank r < k (the r-subsets), induced from S_r x S_{n-r}, plus E.
inline GradedVirtualRep eq_z_uniform(int k, int n)
{
    detail::check_eq_args(k, n, "eq_z_uniform");
    GradedVirtualRep z{n, std::vector<VirtualRep>(static_cast<std::size_t>(k) + 1, VirtualRep(n))};
    for (int r = 0; r < k; ++r) {
        GradedVirtualRep p = eq_kl_uniform(k - r, n - r);
        for (std::size_t i = 0; i < p.coeffs.size(); ++i)
            z.coeffs[i + static_cast<std::size_t>(r)] += induce_trivial(p.coeffs[i], r);
    }
    z.coeffs[static_cast<std::size_t>(k)] += VirtualRep::trivial(n);
    return z;
}

struct GammaDecomposition {
    std::vector<VirtualRep> gamma;
    bool honest() const
    {
        for (const auto& g : gamma)
            if (!g.honest())
                return false;
        return true;
    }
};

// F = sum_i Gamma_i x^i (1+x)^(d-2i), peeled from the low end.
inline GammaDecomposition gamma_decompose_eq(const GradedVirtualRep& f, int d)
{
    if (d < 0 || f.degree() > d)
        throw InvalidArgument("gamma_decompose_eq: degree exceeds center");
    auto at = [&](int i) { return i <= f.degree() ? f.coeffs[static_cast<std::size_t>(i)] : VirtualRep(f.m); };
    for (int i = 0; i <= d; ++i)
        if (!(at(i) == at(d - i)))
            throw InvalidArgument("gamma_decompose_eq: not palindromic at degree " + std::to_string(i));
    GammaDecomposition out;
    for (int i = 0; 2 * i <= d; ++i) {
        VirtualRep g = at(i);
        for (int j = 0; j < i; ++j)
            g -= binomial(d - 2 * j, i - j) * out.gamma[static_cast<std::size_t>(j)];
        out.gamma.push_back(std::move(g));
    }
    return out;
}

} // namespace chowkl

#endif
