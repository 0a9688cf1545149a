#ifndef CHOWKL_IO_HPP
#define CHOWKL_IO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "matroid.hpp"
#include "methods.hpp"
#include "poset.hpp"

namespace chowkl {

using Json = nlohmann::json;

inline Json to_json(const Poly& p)
{
    Json c = Json::array();
    for (int i = 0; i <= p.degree(); ++i)
        c.push_back(p.coeff(i).str());
    return Json{{"coeffs", c}};
}

inline Poly poly_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw InvalidArgument("polynomial JSON needs a \"coeffs\" array");
    std::vector<BigInt> c;
    for (const auto& v : j["coeffs"]) {
        if (v.is_string())
            c.emplace_back(v.get<std::string>());
        else if (v.is_number_integer())
            c.emplace_back(v.get<long long>());
        else
            throw InvalidArgument("polynomial coefficient must be a decimal string");
    }
    return Poly(std::move(c));
}

// Bases as ascending element lists, the list itself sorted lexicographically.
inline Json to_json(const Matroid& m)
{
    std::vector<std::vector<int>> b;
    for (Mask x : m.bases())
        b.push_back(mask_elements(x));
    std::sort(b.begin(), b.end());
    return Json{{"n", m.size()}, {"bases", b}};
}

inline Matroid matroid_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("bases"))
        throw InvalidArgument("matroid JSON needs \"n\" and \"bases\"");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxGround)
        throw InvalidArgument("matroid JSON: n out of range");
    return Matroid::from_basis_lists(n, j["bases"].get<std::vector<std::vector<int>>>());
}

inline GradedPoset poset_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("rank") || !j.contains("covers"))
        throw InvalidArgument("poset JSON needs \"rank\" and \"covers\"");
    std::vector<std::pair<int, int>> cov;
    for (const auto& c : j["covers"]) {
        if (!c.is_array() || c.size() != 2)
            throw InvalidArgument("poset JSON: each cover is [lo,hi]");
        cov.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
    return GradedPoset::from_covers(j["rank"].get<std::vector<int>>(), cov);
}

inline Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidArgument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

/**
 * Result of the matroid grammar
 *   uniform:k,n | uniform+coloop:k,n | boolean:n | braid:n | vamos
 *   | file:<path> | dual(<spec>) | relax(<spec>;<subset>)
 * braid_n is set when the matroid is literally M(K_n).
 */
struct ParsedMatroid {
    Matroid m;
    int braid_n = 0;
};

namespace detail {

inline std::string trim(std::string s)
{
    auto sp = [](unsigned char c) { return std::isspace(c) != 0; };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), sp));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), sp).base(), s.end());
    return s;
}

inline std::vector<int> parse_int_list(const std::string& s, const std::string& what)
{
    std::vector<int> out;
    std::string t = trim(s);
    if (!t.empty() && t.front() == '{' && t.back() == '}')
        t = t.substr(1, t.size() - 2);
    if (trim(t).empty())
        return out;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        std::size_t pos = 0;
        int v = 0;
        try {
            v = std::stoi(item, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (item.empty() || pos != item.size())
            throw InvalidArgument("bad integer '" + item + "' in " + what);
        out.push_back(v);
    }
    return out;
}

inline std::pair<int, int> parse_kn(const std::string& s, const std::string& what)
{
    auto v = parse_int_list(s, what);
    if (v.size() != 2)
        throw InvalidArgument(what + " expects k,n");
    return {v[0], v[1]};
}

// position of the ';' at paren depth 0
inline std::size_t top_level_semicolon(const std::string& s)
{
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(')
            ++depth;
        else if (s[i] == ')')
            --depth;
        else if (s[i] == ';' && depth == 0)
            return i;
    }
    return std::string::npos;
}

} // namespace detail

inline ParsedMatroid parse_matroid_spec(const std::string& spec)
{
    using namespace detail;
    const std::string s = trim(spec);
    auto starts = [&](const char* p) { return s.rfind(p, 0) == 0; };
    auto inner = [&](std::size_t open) {
        if (s.back() != ')')
            throw InvalidArgument("unbalanced parentheses in '" + s + "'");
        return s.substr(open, s.size() - open - 1);
    };
    auto uniform_checked = [](int k, int n) {
        if (n < 0 || n > kMaxGround || k < 0 || k > n)
            throw InvalidArgument("uniform: need 0 <= k <= n <= " + std::to_string(kMaxGround));
        return uniform(k, n);
    };
    if (starts("uniform+coloop:")) {
        auto [k, n] = parse_kn(s.substr(15), "uniform+coloop");
        if (n + 1 > kMaxGround)
            throw InvalidArgument("uniform+coloop: ground set too large");
        return {add_coloop(uniform_checked(k, n))};
    }
    if (starts("uniform:")) {
        auto [k, n] = parse_kn(s.substr(8), "uniform");
        return {uniform_checked(k, n)};
    }
    if (starts("boolean:")) {
        auto v = parse_int_list(s.substr(8), "boolean");
        if (v.size() != 1)
            throw InvalidArgument("boolean expects n");
        return {uniform_checked(v[0], v[0])};
    }
    if (starts("braid:")) {
        auto v = parse_int_list(s.substr(6), "braid");
        if (v.size() != 1 || v[0] < 1 || v[0] * (v[0] - 1) / 2 > kMaxGround)
            throw InvalidArgument("braid expects 1 <= n <= 7");
        return {complete_graph(v[0]), v[0]};
    }
    if (s == "vamos")
        return {vamos()};
    if (starts("file:"))
        return {matroid_from_json(read_json_file(s.substr(5)))};
    if (starts("dual(")) {
        ParsedMatroid p = parse_matroid_spec(inner(5));
        return {dual(p.m)};
    }
    if (starts("relax(")) {
        std::string body = inner(6);
        std::size_t semi = top_level_semicolon(body);
        if (semi == std::string::npos)
            throw InvalidArgument("relax expects relax(<spec>;<subset>)");
        ParsedMatroid p = parse_matroid_spec(body.substr(0, semi));
        auto els = parse_int_list(body.substr(semi + 1), "relax subset");
        for (int e : els)
            if (e < 0 || e >= p.m.size())
                throw InvalidArgument("relax: element " + std::to_string(e) + " outside the ground set");
        return {relax(p.m, mask_of(els))};
    }
    throw InvalidArgument("cannot parse matroid spec '" + s + "'");
}

} // namespace chowkl

#endif
