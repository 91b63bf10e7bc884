#include "carp/sweep.hpp"

#include <atomic>
#include <random>
#include <thread>

#include "carp/analysis.hpp"
#include "carp/io.hpp"
#include "carp/preprocess.hpp"

namespace carp {

namespace {

struct TrialOutcome {
    std::vector<std::string> violations;
    int checks = 0;
    int odd = 0;
    int even = 0;
    int degenerate = 0;
};

TrialOutcome run_trial(const SweepOptions& opts, int trial) {
    TrialOutcome out;
    std::mt19937_64 rng(opts.seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(trial));
    const int m_span = opts.max_m - opts.min_m + 1;
    const int k_span = opts.max_k - opts.min_k + 1;
    const int m = opts.min_m + static_cast<int>(rng() % static_cast<std::uint64_t>(m_span));
    const int k = opts.min_k + static_cast<int>(rng() % static_cast<std::uint64_t>(k_span));
    const GenMode mode = trial % 2 == 0 ? GenMode::euclidean : GenMode::random_metric;

    try {
        const RawInstance raw = generate(m, k, mode, rng(), opts.coord_range);
        auto [metric, lift] = normalize(raw);
        const AnalysisReport rep = bound_suite(metric);
        out.checks = static_cast<int>(rep.checks.size());
        out.odd = rep.odd_share_routes;
        out.even = rep.even_share_routes;
        out.degenerate = rep.degenerate_share_routes;
        out.violations = rep.violations;
    } catch (const std::exception& e) {
        out.violations.push_back(std::string("pipeline error: ") + e.what());
    }
    return out;
}

}  // namespace

SweepReport run_verification_sweep(const SweepOptions& opts) {
    if (opts.trials < 0) throw InvalidArgumentError("trial count must be >= 0");
    if (opts.min_m < 0 || opts.max_m < opts.min_m)
        throw InvalidArgumentError("invalid customer-count range");
    if (opts.min_k < 1 || opts.max_k < opts.min_k)
        throw InvalidArgumentError("invalid capacity range");

    SweepReport report;
    report.trials = opts.trials;
    std::vector<TrialOutcome> outcomes(opts.trials);

    int jobs = opts.jobs;
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::clamp(jobs, 1, std::max(1, opts.trials));

    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= opts.trials) return;
            outcomes[t] = run_trial(opts, t);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }

    for (int t = 0; t < opts.trials; ++t) {
        const TrialOutcome& o = outcomes[t];
        report.checks_evaluated += o.checks;
        report.odd_share_routes += o.odd;
        report.even_share_routes += o.even;
        report.degenerate_share_routes += o.degenerate;
        for (const std::string& v : o.violations) report.violations.push_back({t, v});
    }
    return report;
}

}  // namespace carp
