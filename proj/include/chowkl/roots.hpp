#ifndef CHOWKL_ROOTS_HPP
#define CHOWKL_ROOTS_HPP

#include <utility>
#include <vector>

#include "poly.hpp"

namespace chowkl {

namespace detail {

inline Poly primitive_part(const Poly& p)
{
    if (p.is_zero())
        return p;
    BigInt g = p.content();
    std::vector<BigInt> c = p.coeffs();
    for (auto& v : c)
        v /= g;
    return Poly(std::move(c));
}

// Returns (r, e) with lc(b)^e a = q b + r and deg r < deg b.
inline std::pair<Poly, int> pseudo_remainder(const Poly& a, const Poly& b)
{
    Poly r = a;
    int e = 0;
    const BigInt lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly t = r.leading() * b.shift(r.degree() - b.degree());
        r = lb * r - t;
        ++e;
    }
    return {r, e};
}

inline int sign_at_infinity(const Poly& p, bool positive)
{
    int s = p.leading().sign();
    if (!positive && p.degree() % 2 == 1)
        s = -s;
    return s;
}

inline int count_changes(const std::vector<int>& signs)
{
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++changes;
        last = s;
    }
    return changes;
}

} // namespace detail

/**
 * Sturm sequence of p kept in Z[x]: each remainder is replaced by a
 * positive multiple of itself, so sign patterns are unchanged.
 */
class SturmChain {
public:
    explicit SturmChain(const Poly& p)
    {
        if (p.is_zero())
            throw InvalidArgument("SturmChain: zero polynomial");
        chain_.push_back(detail::primitive_part(p));
        if (p.degree() == 0)
            return;
        chain_.push_back(detail::primitive_part(p.derivative()));
        while (true) {
            const Poly& a = chain_[chain_.size() - 2];
            const Poly& b = chain_.back();
            if (b.degree() == 0)
                break;
            auto [r, e] = detail::pseudo_remainder(a, b);
            if (r.is_zero())
                break;
            bool flip = true;
            if (b.leading() < 0 && e % 2 == 1)
                flip = !flip;
            r = detail::primitive_part(r);
            chain_.push_back(flip ? -r : r);
        }
    }

    int changes_at(const BigRat& x) const
    {
        const BigInt num = boost::multiprecision::numerator(x);
        const BigInt den = boost::multiprecision::denominator(x);
        std::vector<int> s;
        s.reserve(chain_.size());
        for (const auto& f : chain_)
            s.push_back(f.sign_at(num, den));
        return detail::count_changes(s);
    }

    int changes_at_infinity(bool positive) const
    {
        std::vector<int> s;
        for (const auto& f : chain_)
            s.push_back(detail::sign_at_infinity(f, positive));
        return detail::count_changes(s);
    }

    // Distinct real roots in (a, b]; exact when a is not a root.
    int count(const BigRat& a, const BigRat& b) const { return changes_at(a) - changes_at(b); }

    int count_all() const { return changes_at_infinity(false) - changes_at_infinity(true); }

    const Poly& base() const { return chain_.front(); }

private:
    std::vector<Poly> chain_;
};

// p / gcd(p, p') as a primitive integer polynomial with positive leading coefficient.
inline Poly squarefree_part(const Poly& p)
{
    if (p.is_zero())
        throw InvalidArgument("squarefree_part: zero polynomial");
    if (p.degree() == 0)
        return Poly::constant(1);
    RatPoly rp(p);
    RatPoly g = gcd(rp, rp.derivative());
    return divmod(rp, g).first.primitive();
}

// Yun decomposition p = c * prod_i s_i^i with the s_i squarefree and coprime.
inline std::vector<Poly> squarefree_factors(const Poly& p)
{
    if (p.is_zero())
        throw InvalidArgument("squarefree_factors: zero polynomial");
    std::vector<Poly> out;
    if (p.degree() == 0)
        return out;
    RatPoly f(p);
    RatPoly fp = f.derivative();
    RatPoly b = gcd(f, fp);
    RatPoly c = divmod(f, b).first;
    RatPoly d = divmod(fp, b).first - c.derivative();
    while (c.degree() > 0) {
        RatPoly a = gcd(c, d);
        out.push_back(a.primitive());
        c = divmod(c, a).first;
        d = divmod(d, a).first - c.derivative();
    }
    return out;
}

inline BigInt cauchy_bound(const Poly& p)
{
    BigInt m = 0;
    for (int i = 0; i < p.degree(); ++i)
        m = std::max(m, BigInt(abs(p.coeff(i))));
    BigInt l = abs(p.leading());
    return 1 + (m + l - 1) / l;
}

inline bool real_rooted(const Poly& p)
{
    if (p.is_zero())
        throw InvalidArgument("real_rooted: zero polynomial");
    Poly r = p.drop_low(p.low_order());
    if (r.degree() <= 1)
        return true;
    Poly q = squarefree_part(r);
    return SturmChain(q).count_all() == q.degree();
}

// Number of distinct real roots.
inline int count_distinct_real_roots(const Poly& p)
{
    if (p.is_zero())
        throw InvalidArgument("count_distinct_real_roots: zero polynomial");
    if (p.degree() == 0)
        return 0;
    return SturmChain(squarefree_part(p)).count_all();
}

struct RootInterval {
    BigRat lo, hi; // open interval (lo, hi), endpoints are never roots
};

/**
 * Isolating intervals for the real roots of a squarefree polynomial, in
 * ascending order.
 */
inline std::vector<RootInterval> isolate_real_roots(const Poly& q)
{
    std::vector<RootInterval> out;
    if (q.degree() <= 0)
        return out;
    SturmChain sc(q);
    BigRat B(cauchy_bound(q));

    auto nonroot_between = [&](const BigRat& a, const BigRat& b) {
        for (int k = 2;; ++k) {
            for (int j = 1; j < k; ++j) {
                BigRat m = a + (b - a) * BigRat(j, k);
                if (q.sign_at(boost::multiprecision::numerator(m), boost::multiprecision::denominator(m)) != 0)
                    return m;
            }
        }
    };

    std::vector<RootInterval> stack{{-B, B}};
    while (!stack.empty()) {
        RootInterval iv = stack.back();
        stack.pop_back();
        int c = sc.count(iv.lo, iv.hi);
        if (c == 0)
            continue;
        if (c == 1) {
            out.push_back(iv);
            continue;
        }
        BigRat m = nonroot_between(iv.lo, iv.hi);
        stack.push_back({m, iv.hi});
        stack.push_back({iv.lo, m});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

/**
 * Weak interlacing: with roots listed ascending, p interlaces q when
 *   deg q = deg p + 1:  b1 <= a1 <= b2 <= ... <= an <= b(n+1)
 *   deg q = deg p:      b1 <= a1 <= b2 <= a2 <= ... <= bn <= an
 * Other degree combinations return false.
 */
inline bool interlaces(const Poly& p, const Poly& q)
{
    if (p.is_zero() || q.is_zero())
        throw PreconditionError("interlaces: zero polynomial");
    if (!real_rooted(p) || !real_rooted(q))
        throw PreconditionError("interlaces: input is not real-rooted");
    if (q.degree() != p.degree() && q.degree() != p.degree() + 1)
        return false;

    Poly L = squarefree_part(p * q);
    std::vector<RootInterval> ivs = isolate_real_roots(L);

    auto multiplicities = [&](const Poly& f) {
        std::vector<int> mult(ivs.size(), 0);
        std::vector<Poly> factors = squarefree_factors(f);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (factors[i].degree() <= 0)
                continue;
            SturmChain sc(factors[i]);
            for (std::size_t r = 0; r < ivs.size(); ++r)
                if (sc.count(ivs[r].lo, ivs[r].hi) > 0)
                    mult[r] += static_cast<int>(i + 1);
        }
        return mult;
    };

    std::vector<int> mp = multiplicities(p), mq = multiplicities(q);
    std::vector<int> alpha, beta; // root ids ascending
    for (std::size_t r = 0; r < ivs.size(); ++r) {
        alpha.insert(alpha.end(), static_cast<std::size_t>(mp[r]), static_cast<int>(r));
        beta.insert(beta.end(), static_cast<std::size_t>(mq[r]), static_cast<int>(r));
    }
    if (static_cast<int>(alpha.size()) != p.degree() || static_cast<int>(beta.size()) != q.degree())
        throw InternalError("interlaces: root count mismatch");

    std::vector<int> merged;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        merged.push_back(beta[i]);
        if (i < alpha.size())
            merged.push_back(alpha[i]);
    }
    for (std::size_t i = 1; i < merged.size(); ++i)
        if (merged[i] < merged[i - 1])
            return false;
    return true;
}

} // namespace chowkl

#endif
