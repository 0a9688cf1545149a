#ifndef CHOWKL_KL_HPP
#define CHOWKL_KL_HPP

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chow.hpp"
#include "families.hpp"
#include "matroid.hpp"
#include "poset.hpp"

namespace chowkl {

// x^r P(1/x) - P(x) = sum_{w>z} chi_[z,w] P_[w]; P is the negated low half.
inline std::vector<Poly> kl_epw_table(const GradedPoset& p)
{
    std::vector<Poly> t(static_cast<std::size_t>(p.size()));
    const auto& ord = p.order();
    for (auto it = ord.rbegin(); it != ord.rend(); ++it) {
        const int z = *it;
        if (z == p.top()) {
            t[static_cast<std::size_t>(z)] = Poly::constant(1);
            continue;
        }
        const int r = p.rank(p.top()) - p.rank(z);
        Poly rhs;
        for (int w : p.up(z))
            if (w != z)
                rhs = rhs + p.char_poly(z, w) * t[static_cast<std::size_t>(w)];
        std::vector<BigInt> c;
        for (int i = 0; 2 * i < r; ++i)
            c.push_back(-rhs.coeff(i));
        t[static_cast<std::size_t>(z)] = Poly(std::move(c));
    }
    return t;
}

inline Poly kl_epw(const FlatsLattice& L) { return kl_epw_table(L.poset())[static_cast<std::size_t>(L.poset().bottom())]; }
inline Poly kl_intrinsic(const FlatsLattice& L) { return kls_P_general(L.poset()); }
inline Poly z_intrinsic(const FlatsLattice& L) { return kls_Z_general(L.poset()); }

// Z = sum_F x^rk(F) P_{M/F}
inline Poly z_conv_def(const FlatsLattice& L)
{
    const GradedPoset& p = L.poset();
    auto t = kl_epw_table(p);
    Poly s;
    for (int w = 0; w < p.size(); ++w)
        s = s + t[static_cast<std::size_t>(w)].shift(p.rank(w));
    return s;
}

inline BigInt tau_of(const Poly& P, int rank)
{
    return rank % 2 ? P.coeff((rank - 1) / 2) : BigInt(0);
}

/**
 * P_{U_{k,n}} by the EPW recursion grouped by flat rank: proper flats of rank
 * r are C(n,r) Boolean restrictions with contraction U_{k-r,n-r}.
 */
class UniformKL {
public:
    const Poly& get(int k, int n)
    {
        check_uniform_args(k, n, "kl_uniform");
        auto key = std::make_pair(k, n);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Poly P;
        if (k == 0 || k == n) {
            P = Poly::constant(1);
        } else {
            Poly rhs = linear(-1, 1) * reduced_char_uniform(k, n);
            for (int r = 1; r < k; ++r)
                rhs = rhs + binomial(n, r) * (linear(-1, 1).pow(static_cast<unsigned>(r)) * get(k - r, n - r));
            std::vector<BigInt> c;
            for (int i = 0; 2 * i < k; ++i)
                c.push_back(-rhs.coeff(i));
            P = Poly(std::move(c));
        }
        return memo_.emplace(key, std::move(P)).first->second;
    }

private:
    std::map<std::pair<int, int>, Poly> memo_;
};

inline Poly kl_uniform(int k, int n)
{
    UniformKL u;
    return u.get(k, n);
}

/**
 * Braden-Vysogorets deletion recursions for P and Z, pivoting on the smallest
 * non-coloop; Boolean matroids are the base case.  tau is read off the P
 * computed by this same recursion.
 */
class DeletionKLEngine {
public:
    Poly P(const Matroid& m)
    {
        if (!is_loopless(m))
            return {};
        if (m.coloops() == m.ground())
            return Poly::constant(1);
        if (auto it = p_.find(m); it != p_.end())
            return it->second;
        const int i = std::countr_zero(m.ground() & ~m.coloops());
        const Mask bi = Mask(1) << i;
        const int k = m.rank();
        Poly r = P(deletion(m, bi)) - P(contraction(m, bi)).shift(1);
        for_each_s(m, i, [&](Mask f) {
            Matroid c = contraction(m, f | bi);
            BigInt t = tau(c);
            if (t != 0)
                r = r + t * P(restriction(m, f)).shift((k - m.rank_of(f)) / 2);
        });
        p_.emplace(m, r);
        return r;
    }

    Poly Z(const Matroid& m)
    {
        require_loopless(m, "z_bv_deletion");
        if (m.coloops() == m.ground())
            return linear(1, 1).pow(static_cast<unsigned>(m.size()));
        if (auto it = z_.find(m); it != z_.end())
            return it->second;
        const int i = std::countr_zero(m.ground() & ~m.coloops());
        const Mask bi = Mask(1) << i;
        const int k = m.rank();
        Poly r = Z(deletion(m, bi));
        for_each_s(m, i, [&](Mask f) {
            BigInt t = tau(contraction(m, f | bi));
            if (t != 0)
                r = r + t * Z(restriction(m, f)).shift((k - m.rank_of(f)) / 2);
        });
        z_.emplace(m, r);
        return r;
    }

    BigInt tau(const Matroid& m) { return tau_of(P(m), m.rank()); }

private:
    template <class F>
    static void for_each_s(const Matroid& m, int i, F&& f)
    {
        const Mask rest = m.ground() & ~(Mask(1) << i);
        for (Mask a = rest;; a = (a - 1) & rest) {
            if (a != rest && m.is_flat(a) && m.is_flat(a | Mask(1) << i))
                f(a);
            if (a == 0)
                break;
        }
    }

    std::unordered_map<Matroid, Poly, MatroidHash> p_, z_;
};

inline Poly kl_bv_deletion(const Matroid& m) { return DeletionKLEngine().P(m); }
inline Poly z_bv_deletion(const Matroid& m) { return DeletionKLEngine().Z(m); }

} // namespace chowkl

#endif
