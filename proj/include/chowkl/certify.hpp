#ifndef CHOWKL_CERTIFY_HPP
#define CHOWKL_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "methods.hpp"
#include "roots.hpp"
#include "shape.hpp"

namespace chowkl {

/**
 * One certification outcome.  `value` is the polynomial under test,
 * `witness` the derived object (gamma vector, series prefix, bound) and
 * `index` the first offending coefficient, or -1.
 */
struct Check {
    std::string name;
    bool pass = true;
    Poly value;
    Poly witness;
    int index = -1;
    std::string detail;
};

struct Certificate {
    std::string subject;
    std::vector<Check> checks;
    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
};

inline Check check_gamma(std::string name, const Poly& p, int d)
{
    Check c{std::move(name), true, p, {}, -1, {}};
    c.witness = gamma_vector(p, d);
    c.index = first_negative(c.witness);
    c.pass = c.index < 0;
    if (!c.pass)
        c.detail = "gamma = " + c.witness.to_string();
    return c;
}

inline Check check_real_rooted(std::string name, const Poly& p)
{
    Check c{std::move(name), true, p, {}, -1, {}};
    c.pass = real_rooted(p);
    if (!c.pass) {
        Poly sf = squarefree_part(p);
        c.detail = std::to_string(count_distinct_real_roots(p)) + " distinct real roots, squarefree degree " + std::to_string(sf.degree());
    }
    return c;
}

inline Check check_unimodal(std::string name, const Poly& p)
{
    Check c{std::move(name), true, p, {}, -1, {}};
    c.pass = is_unimodal(p);
    return c;
}

// q - p is nonnegative; index is the first coefficient where p exceeds q.
inline Check check_dominated(std::string name, const Poly& p, const Poly& q)
{
    Check c{std::move(name), true, p, q, -1, {}};
    c.index = dominance_violation(p, q);
    c.pass = c.index < 0;
    if (!c.pass)
        c.detail = "exceeds bound at x^" + std::to_string(c.index);
    return c;
}

inline Check check_interlace(std::string name, const Poly& p, const Poly& q)
{
    Check c{std::move(name), true, p, q, -1, {}};
    try {
        c.pass = interlaces(p, q);
    } catch (const PreconditionError& e) {
        c.pass = false;
        c.detail = e.what();
    }
    return c;
}

// First N coefficients of 1/p(-x) are nonnegative.
inline Check check_koszul_prefix(std::string name, const Poly& p, int N)
{
    Check c{std::move(name), true, p, {}, -1, {}};
    if (N <= 0)
        return c;
    std::vector<BigInt> raw = series_inverse_prefix(p.negate_variable(), N - 1);
    c.witness = Poly(raw);
    for (int i = 0; i < N; ++i)
        if (raw[static_cast<std::size_t>(i)] < 0) {
            c.index = i;
            c.pass = false;
            c.detail = "coefficient of x^" + std::to_string(i) + " is " + raw[static_cast<std::size_t>(i)].str();
            break;
        }
    return c;
}

inline int chow_center_degree(int rank) { return rank > 0 ? rank - 1 : 0; }

inline Certificate certify_gamma(InvariantEngine& e)
{
    require_loopless(e.matroid(), "certify_gamma");
    const int r = e.matroid().rank();
    Certificate cert;
    cert.checks.push_back(check_gamma("gamma(chow)", e.compute(Kind::uH, Method::char_conv), chow_center_degree(r)));
    cert.checks.push_back(check_gamma("gamma(augchow)", e.compute(Kind::H, Method::contraction_conv), r));
    cert.checks.push_back(check_gamma("gamma(z)", e.compute(Kind::Z, Method::conv_def), r));
    return cert;
}

inline Certificate certify_gamma(const Matroid& m)
{
    InvariantEngine e(m);
    return certify_gamma(e);
}

// The intrinsic engines on an arbitrary bounded graded poset.
inline Certificate certify_gamma_poset(const GradedPoset& p)
{
    const int r = p.height();
    Certificate cert;
    cert.checks.push_back(check_gamma("gamma(chow)", kls_uH_general(p), chow_center_degree(r)));
    cert.checks.push_back(check_gamma("gamma(augchow)", kls_H_general(p), r));
    return cert;
}

inline Certificate certify_dominance(InvariantEngine& e)
{
    require_loopless(e.matroid(), "certify_dominance");
    const int k = e.matroid().rank(), n = e.matroid().size();
    Certificate cert;
    cert.checks.push_back(check_dominated("dominance(chow)", e.compute(Kind::uH, Method::char_conv), chow_uniform(k, n)));
    cert.checks.push_back(check_dominated("dominance(augchow)", e.compute(Kind::H, Method::contraction_conv), aug_chow_uniform(k, n)));
    return cert;
}

inline Certificate certify_dominance(const Matroid& m)
{
    InvariantEngine e(m);
    return certify_dominance(e);
}

struct HrsReport {
    int k = 0, n = 0;
    Poly closed_form; // Brenti-Welker
    Poly chow_side;   // sum_i C(n-i-1, k-i) uH_{U_{i,n}}
    std::optional<Poly> direct; // order complex of L(U_{k,n}), small n only
};

inline constexpr int kHrsDirectMaxN = 7;

// h-polynomial of the Bergman complex of U_{k,n} via Eulerian polynomials.
inline Poly bergman_h_uniform(int k, int n)
{
    check_uniform_args(k, n, "bergman_h_uniform");
    auto a = eulerian_table(k);
    Poly s;
    for (int j = 0; j < k; ++j)
        s = s + binomial(n, j) * (a[static_cast<std::size_t>(j)] * linear(-1, 1).pow(static_cast<unsigned>(k - 1 - j)));
    return s;
}

inline HrsReport hrs_identity(int k, int n)
{
    if (k < 1 || k > n)
        throw InvalidArgument("hrs_identity: need 1 <= k <= n");
    HrsReport r;
    r.k = k;
    r.n = n;
    r.closed_form = bergman_h_uniform(k, n);
    for (int i = 1; i <= k; ++i)
        r.chow_side = r.chow_side + binomial(n - i - 1, k - i) * chow_uniform(i, n);
    if (n <= kHrsDirectMaxN)
        r.direct = bergman_f_h(uniform(k, n)).second;
    if (r.closed_form != r.chow_side || (r.direct && *r.direct != r.closed_form))
        throw InternalError("hrs_identity failed at k=" + std::to_string(k) + " n=" + std::to_string(n));
    return r;
}

} // namespace chowkl

#endif
