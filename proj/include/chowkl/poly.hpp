#ifndef CHOWKL_POLY_HPP
#define CHOWKL_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace chowkl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/**
 * Dense univariate polynomial with exact integer coefficients, stored in
 * ascending degree.  The zero polynomial has no coefficients.
 */
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

    Poly(std::initializer_list<BigInt> c) : c_(c) { trim(); }

    static Poly constant(const BigInt& a) { return Poly(std::vector<BigInt>{a}); }

    static Poly monomial(int deg, const BigInt& a = 1)
    {
        if (deg < 0)
            throw InvalidArgument("monomial: negative degree");
        std::vector<BigInt> c(static_cast<std::size_t>(deg) + 1);
        c.back() = a;
        return Poly(std::move(c));
    }

    static Poly from_ints(const std::vector<long long>& v)
    {
        std::vector<BigInt> c(v.begin(), v.end());
        return Poly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    std::size_t size() const { return c_.size(); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    const BigInt& leading() const { return c_.back(); }

    Poly shift(int r) const
    {
        if (r < 0)
            throw InvalidArgument("shift: negative exponent");
        if (is_zero())
            return {};
        std::vector<BigInt> c(static_cast<std::size_t>(r));
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

    // x^d p(1/x)
    Poly reverse(int d) const
    {
        if (d < degree())
            throw InvalidArgument("reverse: center degree below polynomial degree");
        if (is_zero())
            return {};
        std::vector<BigInt> c(static_cast<std::size_t>(d) + 1);
        for (std::size_t i = 0; i < c_.size(); ++i)
            c[static_cast<std::size_t>(d) - i] = c_[i];
        return Poly(std::move(c));
    }

    bool is_palindromic(int d) const
    {
        if (is_zero())
            return true;
        if (d < degree())
            return false;
        return reverse(d) == *this;
    }

    BigInt eval(const BigInt& x) const
    {
        BigInt acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    BigInt eval(long long x) const { return eval(BigInt(x)); }

    BigRat eval(const BigRat& x) const
    {
        BigRat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + BigRat(*it);
        return acc;
    }

    // Sign of p(num/den) for den > 0, computed without fractions.
    int sign_at(const BigInt& num, const BigInt& den) const
    {
        if (is_zero())
            return 0;
        BigInt acc = c_.back();
        BigInt dp = 1;
        for (int i = degree() - 1; i >= 0; --i) {
            dp *= den;
            acc = acc * num + c_[static_cast<std::size_t>(i)] * dp;
        }
        return acc.sign();
    }

    Poly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<BigInt> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * static_cast<long long>(i);
        return Poly(std::move(c));
    }

    // p(-x)
    Poly negate_variable() const
    {
        std::vector<BigInt> c = c_;
        for (std::size_t i = 1; i < c.size(); i += 2)
            c[i] = -c[i];
        return Poly(std::move(c));
    }

    // Number of trailing zero coefficients (largest m with x^m | p).
    int low_order() const
    {
        int m = 0;
        while (m < static_cast<int>(c_.size()) && c_[static_cast<std::size_t>(m)] == 0)
            ++m;
        return m;
    }

    Poly drop_low(int m) const
    {
        if (m <= 0)
            return *this;
        if (m >= static_cast<int>(c_.size()))
            return {};
        return Poly(std::vector<BigInt>(c_.begin() + m, c_.end()));
    }

    BigInt content() const
    {
        BigInt g = 0;
        for (const auto& a : c_)
            g = boost::multiprecision::gcd(g, a);
        return g;
    }

    Poly pow(unsigned e) const
    {
        Poly r = constant(1), b = *this;
        while (e) {
            if (e & 1u)
                r = r * b;
            e >>= 1u;
            if (e)
                b = b * b;
        }
        return r;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    friend Poly operator+(Poly a, const Poly& b)
    {
        if (a.c_.size() < b.c_.size())
            a.c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            a.c_[i] += b.c_[i];
        a.trim();
        return a;
    }

    friend Poly operator-(Poly a, const Poly& b)
    {
        if (a.c_.size() < b.c_.size())
            a.c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            a.c_[i] -= b.c_[i];
        a.trim();
        return a;
    }

    friend Poly operator-(Poly a)
    {
        for (auto& v : a.c_)
            v = -v;
        return a;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(c));
    }

    friend Poly operator*(const BigInt& s, Poly a)
    {
        if (s == 0)
            return {};
        for (auto& v : a.c_)
            v *= s;
        return a;
    }

    friend Poly operator*(Poly a, const BigInt& s) { return s * std::move(a); }

    // Exact division; throws if b does not divide a over the integers.
    friend Poly exact_div(const Poly& a, const Poly& b)
    {
        if (b.is_zero())
            throw InvalidArgument("exact_div: division by zero polynomial");
        if (a.is_zero())
            return {};
        if (a.degree() < b.degree())
            throw InternalError("exact_div: not divisible");
        std::vector<BigInt> r = a.c_;
        std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        const BigInt& lb = b.c_.back();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            const BigInt& top = r[static_cast<std::size_t>(i + b.degree())];
            if (top % lb != 0)
                throw InternalError("exact_div: not divisible");
            BigInt t = top / lb;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[static_cast<std::size_t>(i) + j] -= t * b.c_[j];
            q[static_cast<std::size_t>(i)] = t;
        }
        for (const auto& v : r)
            if (v != 0)
                throw InternalError("exact_div: not divisible");
        return Poly(std::move(q));
    }

    std::string to_string() const
    {
        if (is_zero())
            return "0";
        std::string s;
        for (int i = degree(); i >= 0; --i) {
            const BigInt& a = c_[static_cast<std::size_t>(i)];
            if (a == 0)
                continue;
            BigInt m = abs(a);
            if (a < 0)
                s += "-";
            else if (!s.empty())
                s += "+";
            if (m != 1 || i == 0)
                s += m.str();
            if (i >= 1)
                s += "x";
            if (i >= 2)
                s += "^" + std::to_string(i);
        }
        return s;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigInt> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// x^lo + x^(lo+1) + ... + x^hi, zero when hi < lo.
inline Poly geometric(int lo, int hi)
{
    if (hi < lo)
        return {};
    std::vector<BigInt> c(static_cast<std::size_t>(hi) + 1);
    for (int i = std::max(lo, 0); i <= hi; ++i)
        c[static_cast<std::size_t>(i)] = 1;
    return Poly(std::move(c));
}

// 1 + x + ... + x^m
inline Poly one_to(int m) { return geometric(0, m); }

inline Poly linear(long long c0, long long c1) { return Poly{BigInt(c0), BigInt(c1)}; }

/**
 * Polynomial with rational coefficients.  Used for exact division in the
 * squarefree and Sturm machinery.
 */
class RatPoly {
public:
    RatPoly() = default;

    explicit RatPoly(std::vector<BigRat> c) : c_(std::move(c)) { trim(); }

    explicit RatPoly(const Poly& p)
    {
        c_.reserve(p.size());
        for (const auto& a : p.coeffs())
            c_.emplace_back(a);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigRat>& coeffs() const { return c_; }

    BigRat coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size()))
            return 0;
        return c_[static_cast<std::size_t>(i)];
    }

    RatPoly monic() const
    {
        if (is_zero())
            return {};
        RatPoly r = *this;
        BigRat l = c_.back();
        for (auto& v : r.c_)
            v /= l;
        return r;
    }

    RatPoly derivative() const
    {
        if (c_.size() <= 1)
            return {};
        std::vector<BigRat> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            c[i - 1] = c_[i] * static_cast<long long>(i);
        return RatPoly(std::move(c));
    }

    BigRat eval(const BigRat& x) const
    {
        BigRat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    // Scale to a primitive integer polynomial with positive leading coefficient.
    Poly primitive() const
    {
        if (is_zero())
            return {};
        BigInt l = 1;
        for (const auto& v : c_)
            l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(v));
        std::vector<BigInt> c;
        c.reserve(c_.size());
        for (const auto& v : c_)
            c.push_back(boost::multiprecision::numerator(v) * (l / boost::multiprecision::denominator(v)));
        Poly p(std::move(c));
        BigInt g = p.content();
        if (p.leading() < 0)
            g = -g;
        std::vector<BigInt> d = p.coeffs();
        for (auto& v : d)
            v /= g;
        return Poly(std::move(d));
    }

    // Quotient and remainder of a by b.
    friend std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b)
    {
        if (b.is_zero())
            throw InvalidArgument("RatPoly divmod: division by zero");
        if (a.degree() < b.degree())
            return {RatPoly(), a};
        std::vector<BigRat> r = a.c_;
        std::vector<BigRat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
        const BigRat& lb = b.c_.back();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            BigRat t = r[static_cast<std::size_t>(i + b.degree())] / lb;
            if (t != 0)
                for (std::size_t j = 0; j < b.c_.size(); ++j)
                    r[static_cast<std::size_t>(i) + j] -= t * b.c_[j];
            q[static_cast<std::size_t>(i)] = t;
        }
        return {RatPoly(std::move(q)), RatPoly(std::move(r))};
    }

    friend RatPoly gcd(RatPoly a, RatPoly b)
    {
        while (!b.is_zero()) {
            RatPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigRat> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(c));
    }

    friend RatPoly operator-(RatPoly a, const RatPoly& b)
    {
        if (a.c_.size() < b.c_.size())
            a.c_.resize(b.c_.size());
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            a.c_[i] -= b.c_[i];
        a.trim();
        return a;
    }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<BigRat> c_;
};

} // namespace chowkl

#endif
