#include "abcroots/scan.hpp"

#include "abcroots/errors.hpp"
#include "abcroots/metrics.hpp"

#include <algorithm>
#include <atomic>
#include <future>

namespace abcroots {

namespace {

std::vector<ScanRecord> scan_one_k(long k, const ScanOptions& options,
                                   const std::set<std::tuple<long, int, int>>& skip) {
    std::vector<ScanRecord> out;
    RootSpec root(k, options.s);
    auto eqs = resulting_equations(root, options.depth, options.expand);
    for (const auto& eq : eqs) {
        if (skip.count({k, int(options.s), eq.n})) continue;
        ScanRecord rec;
        rec.k = k;
        rec.s = int(options.s);
        rec.n = eq.n;
        rec.p = eq.p.get_str();
        rec.q = eq.q.get_str();
        rec.d = eq.d.get_str();
        rec.g = long(eq.g.get_si());
        AbcTriple triple = normalize_to_abc(eq);
        rec.a = triple.a.get_str();
        rec.b = triple.b.get_str();
        rec.c = triple.c.get_str();
        rec.approx_gain = approximation_gain(eq);
        try {
            MetricsRecord metrics = equation_metrics(eq, {}, options.budget);
            rec.rad_abc = metrics.rad_abc.get_str();
            rec.quality = metrics.quality;
            rec.power_gain = metrics.power_gain;
            if (!metrics.rad_certified) rec.flags.push_back("primality-probable");
        } catch (const FactorizationBudgetExceeded&) {
            rec.flags.push_back("factorization-skipped");
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace

std::vector<ScanRecord> run_scan(const ScanOptions& options,
                                 const std::set<std::tuple<long, int, int>>& skip) {
    if (options.k_min < 2 || options.k_max < options.k_min)
        throw std::invalid_argument("scan: need 2 <= k_min <= k_max");
    if (options.depth < 1) throw std::invalid_argument("scan: depth must be >= 1");

    std::vector<long> ks;
    for (long k = options.k_min; k <= options.k_max; ++k)
        if (!is_perfect_power(k, options.s)) ks.push_back(k);

    std::vector<std::vector<ScanRecord>> parts(ks.size());
    int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < ks.size(); ++i) parts[i] = scan_one_k(ks[i], options, skip);
    } else {
        std::atomic<size_t> next{0};
        std::vector<std::future<void>> workers;
        for (int w = 0; w < jobs; ++w)
            workers.push_back(std::async(std::launch::async, [&] {
                for (size_t i = next.fetch_add(1); i < ks.size(); i = next.fetch_add(1))
                    parts[i] = scan_one_k(ks[i], options, skip);
            }));
        for (auto& worker : workers) worker.get();
    }

    std::vector<ScanRecord> out;
    for (auto& part : parts)
        for (auto& rec : part) out.push_back(std::move(rec));
    // parts are already k-ascending and n-ascending within each k
    return out;
}

} // namespace abcroots
