#ifndef CHOWKL_FAMILIES_HPP
#define CHOWKL_FAMILIES_HPP

#include <vector>

#include "poly.hpp"

namespace chowkl {

// Generalized binomial a(a-1)...(a-b+1)/b!; zero for b < 0.  Accepts a < 0,
// so binomial(-1, 0) = 1.
inline BigInt binomial(long long a, long long b)
{
    if (b < 0)
        return 0;
    BigInt num = 1, den = 1;
    for (long long i = 0; i < b; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

inline BigInt factorial(int n)
{
    BigInt r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

// A_n(x) by the triangle A(n,k) = (k+1)A(n-1,k) + (n-k)A(n-1,k-1).
inline Poly eulerian(int n)
{
    if (n < 0)
        throw InvalidArgument("eulerian: negative index");
    if (n == 0)
        return Poly::constant(1);
    std::vector<BigInt> row{1};
    for (int m = 2; m <= n; ++m) {
        std::vector<BigInt> next(static_cast<std::size_t>(m));
        for (int k = 0; k < m; ++k) {
            BigInt v = 0;
            if (k < m - 1)
                v += BigInt(k + 1) * row[static_cast<std::size_t>(k)];
            if (k >= 1)
                v += BigInt(m - k) * row[static_cast<std::size_t>(k - 1)];
            next[static_cast<std::size_t>(k)] = v;
        }
        row = std::move(next);
    }
    return Poly(std::move(row));
}

inline std::vector<Poly> eulerian_table(int n)
{
    std::vector<Poly> t;
    for (int j = 0; j <= n; ++j)
        t.push_back(eulerian(j));
    return t;
}

// d_n = sum_{j=0}^{n-2} C(n,j) d_j (x + ... + x^{n-j-1})
inline std::vector<Poly> derangement_table(int n)
{
    if (n < 0)
        throw InvalidArgument("derangement: negative index");
    std::vector<Poly> d;
    d.push_back(Poly::constant(1));
    for (int m = 1; m <= n; ++m) {
        Poly acc;
        for (int j = 0; j <= m - 2; ++j)
            acc = acc + binomial(m, j) * (d[static_cast<std::size_t>(j)] * geometric(1, m - j - 1));
        d.push_back(acc);
    }
    return d;
}

inline Poly derangement(int n) { return derangement_table(n).back(); }

// 1 + x sum_{j=1}^n C(n,j) A_j
inline Poly binomial_eulerian(int n)
{
    if (n < 0)
        throw InvalidArgument("binomial_eulerian: negative index");
    Poly acc;
    for (int j = 1; j <= n; ++j)
        acc = acc + binomial(n, j) * eulerian(j);
    return Poly::constant(1) + acc.shift(1);
}

inline std::vector<Poly> binomial_eulerian_table(int n)
{
    std::vector<Poly> t;
    for (int j = 0; j <= n; ++j)
        t.push_back(binomial_eulerian(j));
    return t;
}

// Stirling numbers of the second kind.
inline BigInt stirling2(int a, int b)
{
    if (a < 0 || b < 0)
        throw InvalidArgument("stirling2: negative argument");
    if (b > a)
        return 0;
    std::vector<BigInt> row(static_cast<std::size_t>(b) + 1);
    row[0] = 1;
    for (int m = 1; m <= a; ++m) {
        for (int j = std::min(m, b); j >= 1; --j)
            row[static_cast<std::size_t>(j)] = BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j - 1)];
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(b)];
}

} // namespace chowkl

#endif
