#ifndef CHOWKL_HZ_HPP
#define CHOWKL_HZ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "families.hpp"
#include "poly.hpp"

namespace chowkl {

/**
 * Generalized binomial Eulerian polynomials of inversion sequences.
 *
 * For s = (s_1..s_n) the sequences e with 0 <= e_i < s_i are padded with
 * e_0 = e_{n+1} = 0, s_0 = s_{n+1} = 1.  Position i in [0,n] is an ascent
 * when e_i/s_i < e_{i+1}/s_{i+1} and a collision on equality.  The
 * polynomial is sum_e (1+x)^col(e) x^asc(e).
 */
namespace detail {

inline void hz_validate(const std::vector<int>& s)
{
    for (int v : s)
        if (v <= 0)
            throw InvalidArgument("hz: entries of s must be positive, got " + std::to_string(v));
}

// -1, 0, 1 for a/sa <, =, > b/sb
inline int hz_cmp(long long a, long long sa, long long b, long long sb)
{
    long long l = a * sb, r = b * sa;
    return l < r ? -1 : (l == r ? 0 : 1);
}

class HzEnumerator {
public:
    explicit HzEnumerator(const std::vector<int>& s) : s_(s), e_(s.size(), 0)
    {
        const std::size_t m = s.size() + 2;
        counts_.assign(m * m, 0);
    }

    Poly run()
    {
        walk(0, 0, 0);
        const int m = static_cast<int>(s_.size()) + 2;
        Poly out;
        for (int col = 0; col < m; ++col)
            for (int asc = 0; asc < m; ++asc) {
                std::uint64_t c = counts_[static_cast<std::size_t>(col * m + asc)];
                if (c)
                    out = out + BigInt(c) * linear(1, 1).pow(static_cast<unsigned>(col)).shift(asc);
            }
        return out;
    }

private:
    // positions 0..i-1 of the padded sequence are scored
    void walk(std::size_t i, int col, int asc)
    {
        const std::size_t n = s_.size();
        long long prev = i == 0 ? 0 : e_[i - 1], sprev = i == 0 ? 1 : s_[i - 1];
        if (i == n) {
            int c = hz_cmp(prev, sprev, 0, 1);
            ++counts_[static_cast<std::size_t>((col + (c == 0)) * static_cast<int>(n + 2) + asc + (c < 0))];
            return;
        }
        for (int v = 0; v < s_[i]; ++v) {
            e_[i] = v;
            int c = hz_cmp(prev, sprev, v, s_[i]);
            walk(i + 1, col + (c == 0), asc + (c < 0));
        }
    }

    std::vector<int> s_;
    std::vector<int> e_;
    std::vector<std::uint64_t> counts_;
};

} // namespace detail

// Empty s is the single padded pair (0,0): one collision, so 1+x.
inline Poly hz_poly(const std::vector<int>& s)
{
    detail::hz_validate(s);
    return detail::HzEnumerator(s).run();
}

inline std::vector<int> hz_uniform_s(int k, int n)
{
    std::vector<int> s;
    for (int v = n - k + 2; v <= n; ++v)
        s.push_back(v);
    return s;
}

inline Poly hz_uniform(int k, int n)
{
    if (k < 0 || k > n)
        throw InvalidArgument("hz_uniform: need 0 <= k <= n");
    if (k == 0)
        return Poly::constant(1);
    return hz_poly(hz_uniform_s(k, n));
}

// E_{k,n} = E_{k-1,n-1} + x sum_j C(n-1,j) A_j E_{k-1-j,n-1-j}, both sides enumerated.
inline bool hz_recursion_check(int k, int n)
{
    if (k < 1 || k > n)
        throw InvalidArgument("hz_recursion_check: need 1 <= k <= n");
    auto A = eulerian_table(k - 1);
    Poly rhs;
    for (int j = 0; j <= k - 1; ++j)
        rhs = rhs + binomial(n - 1, j) * (A[static_cast<std::size_t>(j)] * hz_uniform(k - 1 - j, n - 1 - j));
    rhs = hz_uniform(k - 1, n - 1) + rhs.shift(1);
    return hz_uniform(k, n) == rhs;
}

/**
 * All s of length len with hz_poly(s) == target.  Every sequence contributes
 * 2^col >= 1 at x = 1, so prod s_i <= target(1); the search covers exactly
 * that box.
 */
inline std::vector<std::vector<int>> hz_search(const Poly& target, int len)
{
    if (len < 0)
        throw InvalidArgument("hz_search: negative length");
    const BigInt bound_big = target.eval(BigInt(1));
    std::vector<std::vector<int>> hits;
    if (bound_big < 1)
        return hits;
    if (bound_big > BigInt(1'000'000))
        throw InvalidArgument("hz_search: target too large for an exhaustive search");
    const long long bound = static_cast<long long>(bound_big);
    std::vector<int> s;
    auto rec = [&](auto&& self, long long prod) -> void {
        if (static_cast<int>(s.size()) == len) {
            if (hz_poly(s) == target)
                hits.push_back(s);
            return;
        }
        for (long long v = 1; prod * v <= bound; ++v) {
            s.push_back(static_cast<int>(v));
            self(self, prod * v);
            s.pop_back();
        }
    };
    rec(rec, 1);
    return hits;
}

} // namespace chowkl

#endif
