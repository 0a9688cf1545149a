#ifndef CHOWKL_METHODS_HPP
#define CHOWKL_METHODS_HPP

#include <chrono>
#include <cstdlib>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chow.hpp"
#include "kl.hpp"

namespace chowkl {

enum class Kind { uH, H, P, Z };

enum class Method {
    chains,
    char_conv,
    intrinsic,
    incidence_inv,
    semismall,
    uniform_closed,
    paving,
    braid_closed,
    contraction_conv,
    alt_conv,
    mobius_conv,
    coloop_closed,
    epw,
    bv_deletion,
    uniform_fast,
    conv_def,
};

inline const char* to_string(Kind k)
{
    switch (k) {
    case Kind::uH: return "chow";
    case Kind::H: return "augchow";
    case Kind::P: return "kl";
    case Kind::Z: return "z";
    }
    return "?";
}

inline const char* to_string(Method m)
{
    switch (m) {
    case Method::chains: return "chains";
    case Method::char_conv: return "char_conv";
    case Method::intrinsic: return "intrinsic";
    case Method::incidence_inv: return "incidence_inv";
    case Method::semismall: return "semismall";
    case Method::uniform_closed: return "uniform_closed";
    case Method::paving: return "paving";
    case Method::braid_closed: return "braid_closed";
    case Method::contraction_conv: return "contraction_conv";
    case Method::alt_conv: return "alt_conv";
    case Method::mobius_conv: return "mobius_conv";
    case Method::coloop_closed: return "coloop_closed";
    case Method::epw: return "epw";
    case Method::bv_deletion: return "bv_deletion";
    case Method::uniform_fast: return "uniform_fast";
    case Method::conv_def: return "conv_def";
    }
    return "?";
}

inline Kind parse_kind(const std::string& s)
{
    for (Kind k : {Kind::uH, Kind::H, Kind::P, Kind::Z})
        if (s == to_string(k))
            return k;
    throw InvalidArgument("unknown invariant kind '" + s + "' (expected chow, augchow, kl or z)");
}

// Every method defined for a kind, in a fixed order.
inline const std::vector<Method>& methods_for(Kind k)
{
    static const std::vector<Method> uh{Method::chains, Method::char_conv, Method::intrinsic, Method::incidence_inv,
                                        Method::semismall, Method::uniform_closed, Method::paving, Method::braid_closed};
    static const std::vector<Method> h{Method::chains, Method::contraction_conv, Method::alt_conv, Method::mobius_conv,
                                       Method::intrinsic, Method::incidence_inv, Method::semismall, Method::uniform_closed,
                                       Method::paving, Method::coloop_closed};
    static const std::vector<Method> p{Method::epw, Method::intrinsic, Method::bv_deletion, Method::uniform_fast};
    static const std::vector<Method> z{Method::conv_def, Method::bv_deletion};
    switch (k) {
    case Kind::uH: return uh;
    case Kind::H: return h;
    case Kind::P: return p;
    case Kind::Z: return z;
    }
    return uh;
}

inline Method parse_method(Kind k, const std::string& s)
{
    for (Method m : methods_for(k))
        if (s == to_string(m))
            return m;
    throw InvalidArgument(std::string("unknown method '") + s + "' for " + to_string(k));
}

// Deletion-based engines enumerate subsets of every minor.
inline constexpr int kDeletionEngineMaxN = 10;
inline constexpr int kBraidDetectMax = 7;

inline long long max_flats_threshold()
{
    if (const char* e = std::getenv("MATROID_MAX_FLATS")) {
        char* end = nullptr;
        long long v = std::strtoll(e, &end, 10);
        if (end != e && v > 0)
            return v;
    }
    return 2000;
}

struct MethodResult {
    Method method;
    Poly value;
    double seconds = 0;
};

struct InvariantReport {
    std::string subject;
    Kind kind = Kind::uH;
    std::vector<MethodResult> results;
    bool agree() const
    {
        for (const auto& r : results)
            if (r.value != results.front().value)
                return false;
        return true;
    }
    const Poly& value() const { return results.front().value; }
};

/**
 * All invariants of one matroid.  Loops are handled here once: uH and P
 * vanish, H and Z are those of the loop-free deletion.  The lattice of flats
 * is built on first use and shared by the lattice engines.
 */
class InvariantEngine {
public:
    explicit InvariantEngine(Matroid m, int braid_n = 0)
        : m_(std::move(m)), core_(deletion(m_, m_.loops())), has_loops_(m_.loops() != 0), braid_n_(braid_n)
    {
        if (braid_n_ == 0)
            braid_n_ = detect_braid(core_);
    }

    const Matroid& matroid() const { return m_; }
    const Matroid& loop_free() const { return core_; }

    const FlatsLattice& lattice()
    {
        if (!lattice_) {
            lattice_ = std::make_unique<FlatsLattice>(core_);
            lattice_->poset().freeze();
        }
        return *lattice_;
    }

    bool applicable(Kind k, Method m) const
    {
        const int n = core_.size(), r = core_.rank();
        switch (m) {
        case Method::uniform_closed:
        case Method::uniform_fast:
            return is_uniform(core_);
        case Method::paving:
            return r >= 1 && is_paving(core_);
        case Method::braid_closed:
            return k == Kind::uH && braid_n_ > 0;
        case Method::coloop_closed: {
            if (k != Kind::H || popcount(core_.coloops()) != 1)
                return false;
            return is_uniform(deletion(core_, core_.coloops()));
        }
        case Method::semismall:
        case Method::bv_deletion:
            return n <= kDeletionEngineMaxN;
        default:
            return true;
        }
    }

    std::vector<Method> applicable_methods(Kind k) const
    {
        std::vector<Method> out;
        for (Method m : methods_for(k))
            if (applicable(k, m))
                out.push_back(m);
        return out;
    }

    Poly compute(Kind k, Method m)
    {
        bool known = false;
        for (Method x : methods_for(k))
            known = known || x == m;
        if (!known)
            throw InvalidArgument(std::string("method ") + to_string(m) + " is not defined for " + to_string(k));
        if (!applicable(k, m))
            throw PreconditionError(std::string("method ") + to_string(m) + " does not apply to this matroid");
        if (has_loops_ && (k == Kind::uH || k == Kind::P))
            return {};
        switch (k) {
        case Kind::uH: return uH(m);
        case Kind::H: return H(m);
        case Kind::P: return P(m);
        case Kind::Z: return Z(m);
        }
        return {};
    }

    InvariantReport report(Kind k, std::vector<Method> methods = {}, std::string subject = {})
    {
        if (methods.empty())
            methods = applicable_methods(k);
        InvariantReport rep;
        rep.subject = std::move(subject);
        rep.kind = k;
        for (Method m : methods) {
            auto t0 = std::chrono::steady_clock::now();
            Poly v = compute(k, m);
            double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rep.results.push_back({m, std::move(v), dt});
        }
        return rep;
    }

    BigInt tau() { return tau_of(compute(Kind::P, Method::epw), core_.rank()); }

private:
    static int detect_braid(const Matroid& m)
    {
        for (int v = 1; v <= kBraidDetectMax; ++v)
            if (v * (v - 1) / 2 == m.size() && m.rank() == v - 1 && m == complete_graph(v))
                return v;
        return 0;
    }

    Poly uH(Method m)
    {
        switch (m) {
        case Method::chains: return chow_chains(lattice());
        case Method::char_conv: return chow_char_conv(lattice());
        case Method::intrinsic: return chow_intrinsic(lattice());
        case Method::incidence_inv: return chow_incidence_inv(lattice());
        case Method::semismall: return semismall_.uH(core_);
        case Method::uniform_closed: return chow_uniform(core_.rank(), core_.size());
        case Method::paving: return chow_of_paving(core_);
        case Method::braid_closed: return chow_braid(braid_n_);
        default: break;
        }
        throw InternalError("unhandled chow method");
    }

    Poly H(Method m)
    {
        switch (m) {
        case Method::chains: return aug_chow_chains(lattice());
        case Method::contraction_conv: return aug_chow_contraction_conv(lattice());
        case Method::alt_conv: return aug_chow_alt_conv(lattice());
        case Method::mobius_conv: return aug_chow_mobius_conv(lattice());
        case Method::intrinsic: return aug_chow_intrinsic(lattice());
        case Method::incidence_inv: return aug_chow_incidence_inv(lattice());
        case Method::semismall: return semismall_.H(core_);
        case Method::uniform_closed: return aug_chow_uniform(core_.rank(), core_.size());
        case Method::paving: return aug_chow_of_paving(core_);
        case Method::coloop_closed: return aug_chow_uniform_coloop(core_.rank() - 1, core_.size() - 1);
        default: break;
        }
        throw InternalError("unhandled augchow method");
    }

    Poly P(Method m)
    {
        switch (m) {
        case Method::epw: return kl_epw(lattice());
        case Method::intrinsic: return kl_intrinsic(lattice());
        case Method::bv_deletion: return deletion_.P(core_);
        case Method::uniform_fast: return kl_uniform(core_.rank(), core_.size());
        default: break;
        }
        throw InternalError("unhandled kl method");
    }

    Poly Z(Method m)
    {
        switch (m) {
        case Method::conv_def: return z_conv_def(lattice());
        case Method::bv_deletion: return deletion_.Z(core_);
        default: break;
        }
        throw InternalError("unhandled z method");
    }

    Matroid m_, core_;
    bool has_loops_;
    int braid_n_;
    std::unique_ptr<FlatsLattice> lattice_;
    SemismallEngine semismall_;
    DeletionKLEngine deletion_;
};

// Single-call conveniences.
inline Poly chow_poly(const Matroid& m, Method meth = Method::char_conv) { return InvariantEngine(m).compute(Kind::uH, meth); }
inline Poly aug_chow_poly(const Matroid& m, Method meth = Method::contraction_conv) { return InvariantEngine(m).compute(Kind::H, meth); }
inline Poly kl_poly(const Matroid& m, Method meth = Method::epw) { return InvariantEngine(m).compute(Kind::P, meth); }
inline Poly z_poly(const Matroid& m, Method meth = Method::conv_def) { return InvariantEngine(m).compute(Kind::Z, meth); }
inline BigInt tau(const Matroid& m)
{
    if (!is_loopless(m))
        return 0;
    return InvariantEngine(m).tau();
}

} // namespace chowkl

#endif
