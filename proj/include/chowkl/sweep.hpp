#ifndef CHOWKL_SWEEP_HPP
#define CHOWKL_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "certify.hpp"

namespace chowkl {

/**
 * Sparse paving sweep: for each lambda the paving formula with lambda
 * circuit-hyperplanes of size k, certified for real roots and gamma.  No
 * matroid is built, and lambda need not be realizable.
 */
struct SweepPoint {
    long long lambda = 0;
    Poly uH, H;
    std::vector<Check> checks;
    bool pass() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }
};

struct SweepSummary {
    int k = 0, n = 0;
    long long lambda_min = 0, lambda_max = 0;
    std::vector<SweepPoint> points; // ordered by lambda
    long long failures() const
    {
        return std::count_if(points.begin(), points.end(), [](const SweepPoint& p) { return !p.pass(); });
    }
    const SweepPoint* first_failure() const
    {
        for (const auto& p : points)
            if (!p.pass())
                return &p;
        return nullptr;
    }
};

// floor(C(n,k)/(n-k+1)); a permissive cap, not a realizability bound
inline long long sparse_paving_lambda_max(int k, int n)
{
    check_uniform_args(k, n, "sparse_paving_lambda_max");
    return static_cast<long long>(BigInt(binomial(n, k) / (n - k + 1)));
}

inline SweepPoint sweep_point(int k, int n, long long lambda)
{
    SweepPoint p;
    p.lambda = lambda;
    std::map<int, long long> counts;
    if (lambda)
        counts[k] = lambda;
    p.uH = chow_paving(k, n, counts);
    p.H = aug_chow_paving(k, n, counts);
    p.checks.push_back(check_real_rooted("real-rooted(chow)", p.uH));
    p.checks.push_back(check_real_rooted("real-rooted(augchow)", p.H));
    p.checks.push_back(check_gamma("gamma(chow)", p.uH, chow_center_degree(k)));
    p.checks.push_back(check_gamma("gamma(augchow)", p.H, k));
    return p;
}

inline SweepSummary sweep_sparse_paving(int k, int n, long long lo, long long hi, int jobs)
{
    if (k < 1 || k >= n)
        throw InvalidArgument("sweep: need 1 <= k < n");
    if (lo < 0 || hi < lo)
        throw InvalidArgument("sweep: need 0 <= lambda-min <= lambda-max");
    SweepSummary s;
    s.k = k;
    s.n = n;
    s.lambda_min = lo;
    s.lambda_max = hi;
    const std::size_t count = static_cast<std::size_t>(hi - lo + 1);
    s.points.resize(count);
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                s.points[i] = sweep_point(k, n, lo + static_cast<long long>(i));
            } catch (...) {
                std::lock_guard<std::mutex> g(err_mu);
                if (!err)
                    err = std::current_exception();
            }
        }
    };
    const int t = std::max(1, std::min<int>(jobs, static_cast<int>(std::min<std::size_t>(count, 256))));
    std::vector<std::thread> pool;
    for (int i = 1; i < t; ++i)
        pool.emplace_back(work);
    work();
    for (auto& th : pool)
        th.join();
    if (err)
        std::rethrow_exception(err);
    return s;
}

} // namespace chowkl

#endif
