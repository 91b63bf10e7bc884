#include "carp.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <string>

#include "carp/analysis.hpp"
#include "carp/exact.hpp"
#include "carp/io.hpp"
#include "carp/preprocess.hpp"
#include "carp/solver.hpp"
#include "carp/sweep.hpp"

struct carp_instance {
    carp::RawInstance raw;
    carp::MetricInstance metric;
    carp::LiftMap lift;
    std::string name;
};

struct carp_solution {
    carp::Solution solution;
    carp::LiftedSolution lifted;
    double h1_cost = -1.0;
    double h2_cost = -1.0;
    std::string choice;      // "h1" or "h2"
    std::string partition;   // "candidates", "dp" or "exact"
    std::string mode = "solve";
};

namespace {

thread_local std::string g_last_error;

carp_status to_status(const carp::Error& e) {
    switch (e.code()) {
        case carp::ErrorCode::parse:
            return CARP_ERROR_PARSE;
        case carp::ErrorCode::infeasible:
            return CARP_ERROR_INFEASIBLE;
        case carp::ErrorCode::size_cap:
            return CARP_ERROR_SIZE_CAP;
        case carp::ErrorCode::verification:
            return CARP_ERROR_VERIFICATION;
        case carp::ErrorCode::invalid_argument:
            return CARP_ERROR_INVALID_ARGUMENT;
        default:
            return CARP_ERROR_INTERNAL;
    }
}

template <typename Fn>
carp_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const carp::Error& e) {
        g_last_error = e.what();
        return to_status(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CARP_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CARP_ERROR_INTERNAL;
    }
}

carp_status invalid(const std::string& message) {
    g_last_error = message;
    return CARP_ERROR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

}  // namespace

extern "C" {

const char* carp_status_name(carp_status status) {
    switch (status) {
        case CARP_OK:
            return "ok";
        case CARP_ERROR_INTERNAL:
            return "internal error";
        case CARP_ERROR_PARSE:
            return "parse error";
        case CARP_ERROR_INFEASIBLE:
            return "infeasible instance";
        case CARP_ERROR_SIZE_CAP:
            return "size cap exceeded";
        case CARP_ERROR_VERIFICATION:
            return "verification violation";
        case CARP_ERROR_INVALID_ARGUMENT:
            return "invalid argument";
    }
    return "unknown status";
}

const char* carp_last_error(void) { return g_last_error.c_str(); }

void carp_free(void* ptr) { std::free(ptr); }

carp_status carp_instance_load(const char* path, const char* format, carp_instance** out) {
    if (!path || !out) return invalid("path and out must be non-null");
    const std::string fmt = format ? format : "native";
    if (fmt != "native" && fmt != "classic")
        return invalid("format must be 'native' or 'classic', got '" + fmt + "'");
    return guarded([&]() {
        carp::RawInstance raw =
            fmt == "native" ? carp::parse_instance(path) : carp::parse_classic_format(path);
        auto [metric, lift] = carp::normalize(raw);
        *out = new carp_instance{std::move(raw), std::move(metric), std::move(lift), path};
        return CARP_OK;
    });
}

carp_status carp_instance_generate(int customers, int capacity, const char* mode, uint64_t seed,
                                   int coord_range, carp_instance** out) {
    if (!out) return invalid("out must be non-null");
    const std::string mode_name = mode ? mode : "euclidean";
    carp::GenMode gen_mode;
    if (mode_name == "euclidean") {
        gen_mode = carp::GenMode::euclidean;
    } else if (mode_name == "random-metric") {
        gen_mode = carp::GenMode::random_metric;
    } else {
        return invalid("mode must be 'euclidean' or 'random-metric', got '" + mode_name + "'");
    }
    return guarded([&]() {
        carp::RawInstance raw = carp::generate(customers, capacity, gen_mode, seed, coord_range);
        auto [metric, lift] = carp::normalize(raw);
        *out = new carp_instance{std::move(raw), std::move(metric), std::move(lift),
                                 "generated-" + std::to_string(seed)};
        return CARP_OK;
    });
}

void carp_instance_free(carp_instance* inst) { delete inst; }

int carp_instance_customers(const carp_instance* inst) {
    return inst ? inst->metric.customer_count() : -1;
}

int carp_instance_capacity(const carp_instance* inst) {
    return inst ? inst->metric.capacity() : -1;
}

carp_status carp_instance_set_capacity(carp_instance* inst, int capacity) {
    if (!inst) return invalid("instance must be non-null");
    return guarded([&]() {
        inst->metric.set_capacity(capacity);
        inst->raw.capacity = capacity;
        return CARP_OK;
    });
}

carp_status carp_instance_write_native(const carp_instance* inst, const char* path) {
    if (!inst || !path) return invalid("instance and path must be non-null");
    return guarded([&]() {
        std::ofstream outfile(path, std::ios::binary);
        if (!outfile) throw carp::ParseError(std::string(path) + ": cannot open for writing");
        outfile << carp::write_native(inst->raw);
        return CARP_OK;
    });
}

carp_status carp_solve(const carp_instance* inst, const char* rpp, const char* partition,
                       carp_solution** out) {
    if (!inst || !out) return invalid("instance and out must be non-null");
    const std::string rpp_name = rpp ? rpp : "best";
    const std::string part_name = partition ? partition : "candidates";
    carp::SolveOptions opts;
    if (rpp_name == "best") {
        opts.rpp = carp::RppChoice::best;
    } else if (rpp_name == "h1") {
        opts.rpp = carp::RppChoice::h1;
    } else if (rpp_name == "h2") {
        opts.rpp = carp::RppChoice::h2;
    } else {
        return invalid("rpp must be 'best', 'h1' or 'h2', got '" + rpp_name + "'");
    }
    if (part_name == "candidates") {
        opts.partition = carp::PartitionScheme::candidates;
    } else if (part_name == "dp") {
        opts.partition = carp::PartitionScheme::dp;
    } else {
        return invalid("partition must be 'candidates' or 'dp', got '" + part_name + "'");
    }
    return guarded([&]() {
        const carp::SolveResult result = carp::solve(inst->metric, opts);
        auto* sol = new carp_solution;
        sol->solution = result.solution;
        sol->lifted = carp::lift_solution(result.solution, inst->lift);
        sol->h1_cost = result.h1_cost.value_or(-1.0);
        sol->h2_cost = result.h2_cost.value_or(-1.0);
        sol->choice = result.chosen == carp::RppChoice::h2 ? "h2" : "h1";
        sol->partition = part_name;
        *out = sol;
        return CARP_OK;
    });
}

carp_status carp_solve_exact(const carp_instance* inst, int max_customers, carp_solution** out) {
    if (!inst || !out) return invalid("instance and out must be non-null");
    return guarded([&]() {
        auto* sol = new carp_solution;
        try {
            sol->solution = carp::exact_carp(inst->metric, max_customers);
        } catch (...) {
            delete sol;
            throw;
        }
        sol->lifted = carp::lift_solution(sol->solution, inst->lift);
        sol->partition = "exact";
        sol->mode = "exact";
        *out = sol;
        return CARP_OK;
    });
}

void carp_solution_free(carp_solution* sol) { delete sol; }

double carp_solution_total_cost(const carp_solution* sol) {
    return sol ? sol->solution.total_cost : -1.0;
}

int carp_solution_route_count(const carp_solution* sol) {
    return sol ? static_cast<int>(sol->solution.routes.size()) : -1;
}

double carp_solution_route_cost(const carp_solution* sol, int route) {
    if (!sol || route < 0 || route >= static_cast<int>(sol->solution.routes.size())) return -1.0;
    return sol->solution.routes[route].cost;
}

int carp_solution_route_length(const carp_solution* sol, int route) {
    if (!sol || route < 0 || route >= static_cast<int>(sol->solution.routes.size())) return -1;
    return static_cast<int>(sol->solution.routes[route].served.size());
}

carp_status carp_solution_route_customer(const carp_solution* sol, int route, int position,
                                         int* customer, int* reversed) {
    if (!sol || !customer || !reversed) return invalid("null argument");
    if (route < 0 || route >= static_cast<int>(sol->solution.routes.size()))
        return invalid("route index out of range");
    const carp::Route& r = sol->solution.routes[route];
    if (position < 0 || position >= static_cast<int>(r.served.size()))
        return invalid("position out of range");
    *customer = r.served[position].customer;
    *reversed = r.served[position].dir == carp::Orientation::reversed ? 1 : 0;
    return CARP_OK;
}

double carp_solution_tour_cost_h1(const carp_solution* sol) { return sol ? sol->h1_cost : -1.0; }

double carp_solution_tour_cost_h2(const carp_solution* sol) { return sol ? sol->h2_cost : -1.0; }

const char* carp_solution_tour_choice(const carp_solution* sol) {
    return sol ? sol->choice.c_str() : "";
}

int carp_solution_route_walk_length(const carp_solution* sol, int route) {
    if (!sol || route < 0 || route >= static_cast<int>(sol->lifted.routes.size())) return -1;
    return static_cast<int>(sol->lifted.routes[route].walk.size());
}

carp_status carp_solution_route_walk_vertex(const carp_solution* sol, int route, int position,
                                            int* vertex) {
    if (!sol || !vertex) return invalid("null argument");
    if (route < 0 || route >= static_cast<int>(sol->lifted.routes.size()))
        return invalid("route index out of range");
    const carp::LiftedRoute& r = sol->lifted.routes[route];
    if (position < 0 || position >= static_cast<int>(r.walk.size()))
        return invalid("position out of range");
    *vertex = r.walk[position];
    return CARP_OK;
}

double carp_solution_lifted_cost(const carp_solution* sol) {
    return sol ? sol->lifted.total_cost : -1.0;
}

carp_status carp_solution_check(const carp_solution* sol, const carp_instance* inst,
                                char** report) {
    if (!sol || !inst || !report) return invalid("null argument");
    return guarded([&]() {
        const carp::FeasibilityReport fr = carp::check_solution(sol->solution, inst->metric);
        std::string text;
        for (const std::string& v : fr.violations) {
            text += v;
            text += "\n";
        }
        *report = dup_string(text);
        return fr.feasible() ? CARP_OK : CARP_ERROR_VERIFICATION;
    });
}

carp_status carp_solution_report(const carp_solution* sol, const carp_instance* inst,
                                 char** report) {
    if (!sol || !inst || !report) return invalid("null argument");
    return guarded([&]() {
        carp::SolutionReportMeta meta;
        meta.instance_name = inst->name;
        meta.mode = sol->mode;
        meta.rpp_choice = sol->choice;
        meta.partition_scheme = sol->partition;
        meta.h1_cost = sol->h1_cost;
        meta.h2_cost = sol->h2_cost;
        *report = dup_string(
            carp::format_solution_report(sol->solution, inst->metric, &sol->lifted, meta));
        return CARP_OK;
    });
}

carp_status carp_ratio_closed_form(int capacity, int* l_out, double* ratio_out) {
    if (!ratio_out) return invalid("ratio_out must be non-null");
    return guarded([&]() {
        const carp::RatioPoint p = carp::ratio_closed_form(capacity);
        if (l_out) *l_out = p.l;
        *ratio_out = p.ratio;
        return CARP_OK;
    });
}

carp_status carp_ratio_grid_search(int capacity, int l_max, int alpha_steps, double* ratio_out) {
    if (!ratio_out) return invalid("ratio_out must be non-null");
    return guarded([&]() {
        *ratio_out = carp::ratio_grid_search(capacity, l_max, alpha_steps);
        return CARP_OK;
    });
}

carp_status carp_bounds_report(const carp_instance* inst, char** report, int* violations) {
    if (!inst || !report) return invalid("null argument");
    return guarded([&]() {
        const carp::AnalysisReport rep = carp::bound_suite(inst->metric);
        *report = dup_string(carp::format_bounds_report(rep));
        if (violations) *violations = static_cast<int>(rep.violations.size());
        return rep.ok() ? CARP_OK : CARP_ERROR_VERIFICATION;
    });
}

carp_status carp_verify_sweep(uint64_t seed, int trials, int max_customers, int max_capacity,
                              int jobs, char** report, int* violations) {
    if (!report) return invalid("report must be non-null");
    return guarded([&]() {
        carp::SweepOptions opts;
        opts.seed = seed;
        opts.trials = trials;
        opts.max_m = max_customers;
        opts.max_k = max_capacity;
        opts.jobs = jobs;
        const carp::SweepReport rep = carp::run_verification_sweep(opts);
        *report = dup_string(carp::format_sweep_report(rep));
        if (violations) *violations = static_cast<int>(rep.violations.size());
        return rep.ok() ? CARP_OK : CARP_ERROR_VERIFICATION;
    });
}

}  // extern "C"
