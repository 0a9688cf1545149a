#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "chowkl/certify.hpp"
#include "chowkl/equivariant.hpp"
#include "chowkl/hz.hpp"
#include "chowkl/io.hpp"
#include "chowkl/sweep.hpp"

using namespace chowkl;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitCertFail = 3;
constexpr int kExitTimeout = 4;

struct Globals {
    bool json = false;
    int jobs = 1;
    double timeout = 0;
};

Globals g;

std::string coeff_list(const Poly& p)
{
    std::string s = "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i)
            s += ",";
        s += p.coeff(i).str();
    }
    return s + "]";
}

Json header(const char* command)
{
    return Json{{"schema", "1"}, {"command", command}};
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

// ---------------------------------------------------------------- invariant

struct InvariantArgs {
    std::string spec, kind, method = "all";
    bool poset = false;
};

Json report_json(const InvariantReport& r)
{
    Json res = Json::array();
    for (const auto& m : r.results)
        res.push_back({{"method", to_string(m.method)}, {"value", to_json(m.value)}, {"seconds", m.seconds}});
    return Json{{"kind", to_string(r.kind)}, {"agree", r.agree()}, {"value", to_json(r.value())}, {"results", res}};
}

void print_report(const InvariantReport& r)
{
    std::cout << to_string(r.kind) << "(" << r.subject << ")\n";
    for (const auto& m : r.results) {
        std::printf("  %-17s %s  %.3fs\n", to_string(m.method), coeff_list(m.value).c_str(), m.seconds);
    }
    std::cout << "value: " << coeff_list(r.value()) << "\n";
    std::cout << "agree: " << (r.agree() ? "yes" : "NO") << "\n";
}

void warn_if_many_flats(InvariantEngine& e, const std::vector<Method>& methods)
{
    if (std::find(methods.begin(), methods.end(), Method::chains) == methods.end())
        return;
    const long long flats = e.lattice().poset().size(), cap = max_flats_threshold();
    if (flats > cap)
        std::cerr << "warning: " << flats << " flats exceeds MATROID_MAX_FLATS=" << cap << "; the chains method may be slow\n";
}

InvariantReport matroid_report(InvariantEngine& e, Kind k, const std::string& method, const std::string& subject)
{
    std::vector<Method> methods;
    if (method == "all")
        methods = e.applicable_methods(k);
    else
        methods.push_back(parse_method(k, method));
    warn_if_many_flats(e, methods);
    return e.report(k, methods, subject);
}

std::string strip_file_prefix(const std::string& s) { return s.rfind("file:", 0) == 0 ? s.substr(5) : s; }

InvariantReport poset_report(const GradedPoset& p, Kind k, const std::string& method, const std::string& subject)
{
    if (method != "all" && method != "intrinsic")
        throw InvalidArgument("only the intrinsic method runs on a general poset");
    auto t0 = std::chrono::steady_clock::now();
    Poly v;
    switch (k) {
    case Kind::uH: v = kls_uH_general(p); break;
    case Kind::H: v = kls_H_general(p); break;
    case Kind::P: v = kls_P_general(p); break;
    case Kind::Z: v = kls_Z_general(p); break;
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    InvariantReport r;
    r.subject = subject;
    r.kind = k;
    r.results.push_back({Method::intrinsic, v, dt});
    return r;
}

int cmd_invariant(const InvariantArgs& a)
{
    Kind k = parse_kind(a.kind);
    InvariantReport r;
    if (a.poset) {
        GradedPoset p = poset_from_json(read_json_file(strip_file_prefix(a.spec)));
        r = poset_report(p, k, a.method, a.spec);
    } else {
        ParsedMatroid pm = parse_matroid_spec(a.spec);
        InvariantEngine e(pm.m, pm.braid_n);
        r = matroid_report(e, k, a.method, a.spec);
    }
    if (g.json) {
        Json j = header("invariant");
        j["subject"] = a.spec;
        j.update(report_json(r));
        emit(j);
    } else {
        print_report(r);
    }
    return r.agree() ? kExitOk : kExitDisagree;
}

// --------------------------------------------------------------- crosscheck

int cmd_crosscheck(const std::string& spec, const std::vector<std::string>& kinds)
{
    ParsedMatroid pm = parse_matroid_spec(spec);
    InvariantEngine e(pm.m, pm.braid_n);
    std::vector<Kind> ks;
    if (kinds.empty())
        ks = {Kind::uH, Kind::H, Kind::P, Kind::Z};
    for (const auto& s : kinds)
        ks.push_back(parse_kind(s));
    bool agree = true;
    Json reports = Json::array();
    for (Kind k : ks) {
        InvariantReport r = matroid_report(e, k, "all", spec);
        agree = agree && r.agree();
        if (g.json)
            reports.push_back(report_json(r));
        else
            print_report(r);
    }
    if (g.json) {
        Json j = header("crosscheck");
        j["subject"] = spec;
        j["agree"] = agree;
        j["reports"] = reports;
        emit(j);
    }
    return agree ? kExitOk : kExitDisagree;
}

// ------------------------------------------------------------------ certify

Json check_json(const Check& c)
{
    return Json{{"name", c.name}, {"pass", c.pass}, {"value", to_json(c.value)}, {"witness", to_json(c.witness)},
                {"index", c.index}, {"detail", c.detail}};
}

void print_check(const Check& c)
{
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "  value=" << coeff_list(c.value);
    if (!c.witness.is_zero())
        std::cout << "  witness=" << coeff_list(c.witness);
    if (!c.pass && !c.detail.empty())
        std::cout << "  " << c.detail;
    std::cout << "\n";
}

int koszul_terms(const std::string& check)
{
    const std::string pre = "koszul-prefix:";
    std::string rest = check.substr(pre.size());
    std::size_t pos = 0;
    int n = -1;
    try {
        n = std::stoi(rest, &pos);
    } catch (const std::exception&) {
        pos = std::string::npos;
    }
    if (pos != rest.size() || n < 0)
        throw InvalidArgument("koszul-prefix expects a nonnegative count, got '" + rest + "'");
    return n;
}

int cmd_certify(const std::string& spec, const std::vector<std::string>& checks, bool poset)
{
    Certificate cert;
    cert.subject = spec;
    std::optional<ParsedMatroid> pm;
    std::optional<InvariantEngine> eng;
    std::optional<GradedPoset> ps;
    Poly uh, h;
    if (poset) {
        ps.emplace(poset_from_json(read_json_file(strip_file_prefix(spec))));
        uh = kls_uH_general(*ps);
        h = kls_H_general(*ps);
    } else {
        pm.emplace(parse_matroid_spec(spec));
        require_loopless(pm->m, "certify");
        eng.emplace(pm->m, pm->braid_n);
        uh = eng->compute(Kind::uH, Method::char_conv);
        h = eng->compute(Kind::H, Method::contraction_conv);
    }
    auto add = [&](Check c) { cert.checks.push_back(std::move(c)); };
    for (const auto& c : checks) {
        if (c == "gamma") {
            Certificate part = poset ? certify_gamma_poset(*ps) : certify_gamma(*eng);
            for (auto& x : part.checks)
                add(std::move(x));
        } else if (c == "real-rooted") {
            add(check_real_rooted("real-rooted(chow)", uh));
            add(check_real_rooted("real-rooted(augchow)", h));
        } else if (c == "unimodal") {
            add(check_unimodal("unimodal(chow)", uh));
            add(check_unimodal("unimodal(augchow)", h));
            if (!poset)
                add(check_unimodal("unimodal(z)", eng->compute(Kind::Z, Method::conv_def)));
        } else if (c == "dominance") {
            if (poset)
                throw InvalidArgument("dominance needs a matroid");
            for (auto& x : certify_dominance(*eng).checks)
                add(std::move(x));
        } else if (c == "interlace") {
            add(check_interlace("interlace(chow,augchow)", uh, h));
        } else if (c.rfind("koszul-prefix:", 0) == 0) {
            int n = koszul_terms(c);
            add(check_koszul_prefix("koszul-prefix(chow)", uh, n));
            add(check_koszul_prefix("koszul-prefix(augchow)", h, n));
        } else {
            throw InvalidArgument("unknown check '" + c + "'");
        }
    }
    if (g.json) {
        Json j = header("certify");
        j["subject"] = spec;
        j["pass"] = cert.pass();
        Json arr = Json::array();
        for (const auto& c : cert.checks)
            arr.push_back(check_json(c));
        j["checks"] = arr;
        emit(j);
    } else {
        for (const auto& c : cert.checks)
            print_check(c);
        std::cout << (cert.pass() ? "PASS" : "FAIL") << " " << spec << "\n";
    }
    return cert.pass() ? kExitOk : kExitCertFail;
}

// ----------------------------------------------------------------------- hz

int cmd_hz(const std::string& s_arg, const std::string& uniform_arg)
{
    if (s_arg.empty() == uniform_arg.empty())
        throw InvalidArgument("hz takes exactly one of --s or --uniform");
    Json j = header("hz");
    int code = kExitOk;
    if (!uniform_arg.empty()) {
        auto [k, n] = detail::parse_kn(uniform_arg, "--uniform");
        Poly e = hz_uniform(k, n), h = aug_chow_uniform(k, n);
        bool rec = k >= 1 ? hz_recursion_check(k, n) : true;
        code = e == h && rec ? kExitOk : kExitDisagree;
        j["k"] = k;
        j["n"] = n;
        j["s"] = hz_uniform_s(k, n);
        j["value"] = to_json(e);
        j["augchow"] = to_json(h);
        j["match"] = e == h;
        j["recursion"] = rec;
        if (!g.json) {
            std::cout << "E_{" << k << "," << n << "} = " << coeff_list(e) << "\n";
            std::cout << "augchow U" << k << "," << n << " = " << coeff_list(h) << "  " << (e == h ? "match" : "MISMATCH") << "\n";
            std::cout << "recursion: " << (rec ? "holds" : "FAILS") << "\n";
        }
    } else {
        auto s = detail::parse_int_list(s_arg, "--s");
        Poly e = hz_poly(s);
        j["s"] = s;
        j["value"] = to_json(e);
        j["real_rooted"] = real_rooted(e);
        if (!g.json)
            std::cout << "E^s = " << coeff_list(e) << "  " << e.to_string() << "\n";
    }
    if (g.json)
        emit(j);
    return code;
}

// -------------------------------------------------------------- equivariant

Json rep_json(const VirtualRep& v)
{
    Json arr = Json::array();
    for (const auto& [p, c] : v.terms())
        arr.push_back({{"partition", p}, {"mult", c.str()}});
    return arr;
}

int cmd_equivariant(const std::string& uniform_arg, const std::string& kind, bool gamma, int restrict)
{
    auto [k, n] = detail::parse_kn(uniform_arg, "--uniform");
    GradedVirtualRep rep;
    if (kind == "kl")
        rep = eq_kl_uniform(k, n);
    else if (kind == "z")
        rep = eq_z_uniform(k, n);
    else
        throw InvalidArgument("--kind must be kl or z");
    if (restrict > 0)
        rep = restrict_to(rep, restrict);
    Json j = header("equivariant");
    j["k"] = k;
    j["n"] = n;
    j["kind"] = kind;
    j["group"] = rep.m;
    Json coeffs = Json::array();
    for (const auto& v : rep.coeffs)
        coeffs.push_back(rep_json(v));
    j["coeffs"] = coeffs;
    j["dims"] = to_json(rep.dims());
    if (!g.json) {
        std::cout << kind << " of U" << k << "," << n << " under S_" << rep.m << "\n";
        for (std::size_t i = 0; i < rep.coeffs.size(); ++i)
            std::cout << "  x^" << i << ": " << rep.coeffs[i].to_string() << "\n";
        std::cout << "dims: " << coeff_list(rep.dims()) << "\n";
    }
    int code = kExitOk;
    if (gamma) {
        if (kind != "z")
            throw InvalidArgument("--gamma needs --kind z");
        GammaDecomposition gd = gamma_decompose_eq(rep, k);
        Json ga = Json::array();
        for (const auto& v : gd.gamma)
            ga.push_back(rep_json(v));
        j["gamma"] = ga;
        j["honest"] = gd.honest();
        if (!g.json) {
            for (std::size_t i = 0; i < gd.gamma.size(); ++i)
                std::cout << "  Gamma_" << i << ": " << gd.gamma[i].to_string() << "\n";
            std::cout << (gd.honest() ? "PASS Gamma-positive" : "FAIL not Gamma-positive") << "\n";
        }
        code = gd.honest() ? kExitOk : kExitCertFail;
    }
    if (g.json)
        emit(j);
    return code;
}

// ---------------------------------------------------------- whitney-inverse

int cmd_whitney_inverse(const std::string& spec, int terms)
{
    ParsedMatroid pm = parse_matroid_spec(spec);
    require_loopless(pm.m, "whitney-inverse");
    Poly w = whitney_numbers(pm.m);
    if (terms < 0)
        terms = 2 * pm.m.rank();
    Check c = check_koszul_prefix("whitney-inverse", w, terms);
    if (g.json) {
        Json j = header("whitney-inverse");
        j["subject"] = spec;
        j["whitney"] = to_json(w);
        j["terms"] = terms;
        j["inverse"] = to_json(c.witness);
        j["nonnegative"] = c.pass;
        j["first_negative"] = c.index;
        emit(j);
    } else {
        std::cout << "whitney numbers: " << coeff_list(w) << "\n";
        std::cout << "1/W(-x) to " << terms << " terms: " << coeff_list(c.witness) << "\n";
        if (c.pass)
            std::cout << "all nonnegative\n";
        else
            std::cout << "first negative coefficient at x^" << c.index << ": " << c.witness.coeff(c.index).str() << "\n";
    }
    return kExitOk;
}

// -------------------------------------------------------------------- sweep

int cmd_sweep(const std::string& family, int n, int k, long long lo, std::optional<long long> hi)
{
    if (family != "sparse-paving")
        throw InvalidArgument("unknown sweep family '" + family + "' (expected sparse-paving)");
    if (n < 2 || k < 1 || k >= n)
        throw InvalidArgument("sweep: need 1 <= k < n");
    long long top = hi ? *hi : sparse_paving_lambda_max(k, n);
    SweepSummary s = sweep_sparse_paving(k, n, lo, top, g.jobs);
    const SweepPoint* bad = s.first_failure();
    if (g.json) {
        Json j = header("sweep");
        j["family"] = family;
        j["n"] = n;
        j["k"] = k;
        j["lambda_min"] = lo;
        j["lambda_max"] = top;
        j["evaluated"] = s.points.size();
        j["failures"] = s.failures();
        Json pts = Json::array();
        for (const auto& p : s.points)
            pts.push_back({{"lambda", p.lambda}, {"pass", p.pass()}, {"chow", to_json(p.uH)}, {"augchow", to_json(p.H)}});
        j["points"] = pts;
        if (bad) {
            for (const auto& c : bad->checks)
                if (!c.pass) {
                    j["first_failure"] = {{"lambda", bad->lambda}, {"check", check_json(c)}};
                    break;
                }
        }
        emit(j);
    } else {
        std::cout << "sweep sparse-paving n=" << n << " k=" << k << " lambda=" << lo << ".." << top << ": " << s.points.size()
                  << " evaluated, " << s.failures() << " failures\n";
        if (bad) {
            for (const auto& c : bad->checks)
                if (!c.pass) {
                    std::cout << "first failure at lambda=" << bad->lambda << ": ";
                    print_check(c);
                    break;
                }
        }
    }
    return s.failures() ? kExitCertFail : kExitOk;
}

// ---------------------------------------------------------------------- hrs

int cmd_hrs(int max_n)
{
    if (max_n < 1)
        throw InvalidArgument("hrs: --max-n must be positive");
    Json rows = Json::array();
    int direct = 0, total = 0;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) {
            HrsReport r = hrs_identity(k, n);
            ++total;
            direct += r.direct.has_value();
            rows.push_back({{"k", k}, {"n", n}, {"h", to_json(r.closed_form)}, {"direct", r.direct.has_value()}});
        }
    if (g.json) {
        Json j = header("hrs");
        j["max_n"] = max_n;
        j["checked"] = total;
        j["direct"] = direct;
        j["rows"] = rows;
        emit(j);
    } else {
        std::cout << "hrs identity holds for all 1 <= k <= n <= " << max_n << " (" << total << " cases, " << direct
                  << " also against the order complex)\n";
    }
    return kExitOk;
}

void start_watchdog(double secs)
{
    if (secs <= 0)
        return;
    std::thread([secs] {
        std::this_thread::sleep_for(std::chrono::duration<double>(secs));
        std::fprintf(stderr, "error: timed out after %g s\n", secs);
        std::fflush(stdout);
        std::_Exit(kExitTimeout);
    }).detach();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chow, augmented Chow, Kazhdan-Lusztig and Z polynomials of matroids"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", g.json, "JSON output");
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--timeout-secs", g.timeout, "abort after this many seconds (exit 4)")->check(CLI::NonNegativeNumber);

    InvariantArgs inv;
    auto* c_inv = app.add_subcommand("invariant", "compute one invariant by one or all methods");
    c_inv->add_option("spec", inv.spec, "matroid spec")->required();
    c_inv->add_option("kind", inv.kind, "chow | augchow | kl | z")->required();
    c_inv->add_option("method", inv.method, "method id or all");
    c_inv->add_flag("--poset", inv.poset, "spec is a poset JSON file");

    std::string cc_spec;
    std::vector<std::string> cc_kinds;
    auto* c_cc = app.add_subcommand("crosscheck", "run every applicable method and compare");
    c_cc->add_option("spec", cc_spec)->required();
    c_cc->add_option("kinds", cc_kinds, "kinds (default all)");

    std::string cert_spec;
    std::vector<std::string> cert_checks;
    bool cert_poset = false;
    auto* c_cert = app.add_subcommand("certify", "gamma, real-rooted, unimodal, dominance, interlace, koszul-prefix:N");
    c_cert->add_option("spec", cert_spec)->required();
    c_cert->add_option("checks", cert_checks)->required();
    c_cert->add_flag("--poset", cert_poset, "spec is a poset JSON file");

    std::string hz_s, hz_uniform_arg;
    auto* c_hz = app.add_subcommand("hz", "generalized binomial Eulerian polynomials");
    c_hz->add_option("--s", hz_s, "comma separated s vector");
    c_hz->add_option("--uniform", hz_uniform_arg, "k,n");

    std::string eq_uniform, eq_kind = "kl";
    bool eq_gamma = false;
    int eq_restrict = 0;
    auto* c_eq = app.add_subcommand("equivariant", "S_n-equivariant KL and Z of uniform matroids");
    c_eq->add_option("--uniform", eq_uniform, "k,n")->required();
    c_eq->add_option("--kind", eq_kind, "kl | z");
    c_eq->add_flag("--gamma", eq_gamma, "Gamma decomposition");
    c_eq->add_option("--restrict", eq_restrict, "restrict to S_m")->check(CLI::PositiveNumber);

    std::string wi_spec;
    int wi_terms = -1;
    auto* c_wi = app.add_subcommand("whitney-inverse", "prefix of 1/W(-x) for the Whitney numbers of the second kind");
    c_wi->add_option("spec", wi_spec)->required();
    c_wi->add_option("--terms", wi_terms, "number of terms (default 2*rank)");

    std::string sw_family;
    int sw_n = 0, sw_k = 0;
    long long sw_lo = 0, sw_hi = -1;
    auto* c_sw = app.add_subcommand("sweep", "certify the paving formula over lambda");
    c_sw->add_option("family", sw_family, "sparse-paving")->required();
    c_sw->add_option("--n", sw_n)->required();
    c_sw->add_option("--k", sw_k)->required();
    c_sw->add_option("--lambda-min", sw_lo);
    auto* sw_hi_opt = c_sw->add_option("--lambda-max", sw_hi);

    int hrs_max = 12;
    auto* c_hrs = app.add_subcommand("hrs", "check the HRS identity on a grid");
    c_hrs->add_option("--max-n", hrs_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    start_watchdog(g.timeout);
    try {
        if (*c_inv)
            return cmd_invariant(inv);
        if (*c_cc)
            return cmd_crosscheck(cc_spec, cc_kinds);
        if (*c_cert)
            return cmd_certify(cert_spec, cert_checks, cert_poset);
        if (*c_hz)
            return cmd_hz(hz_s, hz_uniform_arg);
        if (*c_eq)
            return cmd_equivariant(eq_uniform, eq_kind, eq_gamma, eq_restrict);
        if (*c_wi)
            return cmd_whitney_inverse(wi_spec, wi_terms);
        if (*c_sw)
            return cmd_sweep(sw_family, sw_n, sw_k, sw_lo, *sw_hi_opt ? std::optional<long long>(sw_hi) : std::nullopt);
        if (*c_hrs)
            return cmd_hrs(hrs_max);
    } catch (const InternalError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
