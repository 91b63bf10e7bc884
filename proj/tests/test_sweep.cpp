#include "doctest.h"
#include "carp/io.hpp"
#include "carp/sweep.hpp"

using namespace carp;

TEST_CASE("small verification sweep runs clean") {
    SweepOptions opts;
    opts.seed = 2024;
    opts.trials = 40;
    opts.max_m = 6;
    opts.max_k = 4;
    const SweepReport rep = run_verification_sweep(opts);
    CHECK(rep.trials == 40);
    CHECK(rep.checks_evaluated > 0);
    for (const SweepViolation& v : rep.violations) {
        CAPTURE(v.trial);
        CAPTURE(v.message);
        CHECK(false);
    }
    CHECK(rep.ok());
}

TEST_CASE("degenerate geometry sweeps stay clean") {
    // tiny coordinate ranges force coincident points, zero-cost customers
    // and ties in every construction
    for (const int range : {1, 2, 3}) {
        SweepOptions opts;
        opts.seed = 4000 + range;
        opts.trials = 150;
        opts.max_m = 6;
        opts.max_k = 4;
        opts.coord_range = range;
        const SweepReport rep = run_verification_sweep(opts);
        for (const SweepViolation& v : rep.violations) {
            CAPTURE(range);
            CAPTURE(v.trial);
            CAPTURE(v.message);
            CHECK(false);
        }
        CHECK(rep.ok());
    }
}

TEST_CASE("sweep results do not depend on the worker count") {
    SweepOptions opts;
    opts.seed = 7;
    opts.trials = 12;
    opts.max_m = 5;
    opts.max_k = 3;
    opts.jobs = 1;
    const SweepReport serial = run_verification_sweep(opts);
    opts.jobs = 4;
    const SweepReport parallel = run_verification_sweep(opts);
    CHECK(format_sweep_report(serial) == format_sweep_report(parallel));
}

TEST_CASE("sweep validates its options") {
    SweepOptions opts;
    opts.min_k = 0;
    CHECK_THROWS_AS(run_verification_sweep(opts), InvalidArgumentError);
}
