#ifndef CHOWKL_SHAPE_HPP
#define CHOWKL_SHAPE_HPP

#include <utility>
#include <vector>

#include "families.hpp"
#include "poly.hpp"

namespace chowkl {

/**
 * Split p of degree d as a + b with a = x^d a(1/x) and b = x^(d-1) b(1/x):
 *   a_i = p_d + ... + p_{d-i} - p_0 - ... - p_{i-1}
 *   b_i = p_0 + ... + p_i - p_d - ... - p_{d-i}
 */
inline std::pair<Poly, Poly> palindromic_decompose(const Poly& p)
{
    if (p.is_zero())
        throw InvalidArgument("palindromic_decompose: zero polynomial");
    const int d = p.degree();
    std::vector<BigInt> a(static_cast<std::size_t>(d) + 1), b(static_cast<std::size_t>(d) + 1);
    BigInt low = 0;  // p_0 + ... + p_{i-1}
    BigInt high = 0; // p_d + ... + p_{d-i}
    for (int i = 0; i <= d; ++i) {
        high += p.coeff(d - i);
        a[static_cast<std::size_t>(i)] = high - low;
        low += p.coeff(i);
        b[static_cast<std::size_t>(i)] = low - high;
    }
    return {Poly(std::move(a)), Poly(std::move(b))};
}

// gamma(p): p = sum_i g_i x^i (1+x)^(d-2i).
inline Poly gamma_vector(const Poly& p, int d)
{
    if (p.is_zero())
        return {};
    if (!p.is_palindromic(d))
        throw NotPalindromicError("gamma_vector: polynomial is not palindromic with center " + std::to_string(d));
    Poly r = p;
    std::vector<BigInt> g(static_cast<std::size_t>(d / 2) + 1);
    const Poly one_plus_x = linear(1, 1);
    for (int i = 0; 2 * i <= d; ++i) {
        BigInt gi = r.coeff(i);
        g[static_cast<std::size_t>(i)] = gi;
        if (gi != 0)
            r = r - gi * one_plus_x.pow(static_cast<unsigned>(d - 2 * i)).shift(i);
    }
    if (!r.is_zero())
        throw InternalError("gamma_vector: residual after peeling");
    return Poly(std::move(g));
}

inline Poly gamma_expand(const Poly& g, int d)
{
    Poly acc;
    const Poly one_plus_x = linear(1, 1);
    for (int i = 0; i <= g.degree(); ++i)
        if (g.coeff(i) != 0)
            acc = acc + g.coeff(i) * one_plus_x.pow(static_cast<unsigned>(d - 2 * i)).shift(i);
    return acc;
}

inline bool is_nonneg(const Poly& p)
{
    for (const auto& a : p.coeffs())
        if (a < 0)
            return false;
    return true;
}

// Index of the first negative coefficient, or -1.
inline int first_negative(const Poly& p)
{
    for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i) < 0)
            return i;
    return -1;
}

inline bool is_unimodal(const Poly& p)
{
    bool descending = false;
    for (int i = 1; i <= p.degree(); ++i) {
        if (p.coeff(i) > p.coeff(i - 1)) {
            if (descending)
                return false;
        } else if (p.coeff(i) < p.coeff(i - 1)) {
            descending = true;
        }
    }
    return true;
}

inline bool is_log_concave(const Poly& p)
{
    for (int i = 1; i < p.degree(); ++i)
        if (p.coeff(i) * p.coeff(i) < p.coeff(i - 1) * p.coeff(i + 1))
            return false;
    return true;
}

inline Poly abs_coeffs(const Poly& p)
{
    std::vector<BigInt> c = p.coeffs();
    for (auto& v : c)
        v = abs(v);
    return Poly(std::move(c));
}

// Coefficientwise p <= q; returns the first violating index or -1.
inline int dominance_violation(const Poly& p, const Poly& q)
{
    for (int i = 0; i <= std::max(p.degree(), q.degree()); ++i)
        if (p.coeff(i) > q.coeff(i))
            return i;
    return -1;
}

// First N+1 coefficients of 1/p as a power series.
inline std::vector<BigInt> series_inverse_prefix(const Poly& p, int N)
{
    if (N < 0)
        throw InvalidArgument("series_inverse_prefix: negative length");
    const BigInt c0 = p.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw NonUnitError("series_inverse_prefix: constant term is not a unit");
    std::vector<BigInt> s(static_cast<std::size_t>(N) + 1);
    s[0] = c0;
    for (int m = 1; m <= N; ++m) {
        BigInt acc = 0;
        for (int i = 1; i <= std::min(m, p.degree()); ++i)
            acc += p.coeff(i) * s[static_cast<std::size_t>(m - i)];
        s[static_cast<std::size_t>(m)] = -acc * c0;
    }
    return s;
}

} // namespace chowkl

#endif
