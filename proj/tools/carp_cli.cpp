// Command-line front end; talks to the solver library exclusively through
// the C API in carp.h.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "carp.h"

namespace {

int status_to_exit(carp_status status) {
    switch (status) {
        case CARP_OK:
            return 0;
        case CARP_ERROR_PARSE:
        case CARP_ERROR_INVALID_ARGUMENT:
            return 2;
        case CARP_ERROR_INFEASIBLE:
            return 3;
        case CARP_ERROR_SIZE_CAP:
            return 4;
        case CARP_ERROR_VERIFICATION:
            return 5;
        default:
            return 1;
    }
}

int fail(carp_status status) {
    std::fprintf(stderr, "error: %s: %s\n", carp_status_name(status), carp_last_error());
    return status_to_exit(status);
}

struct InstanceDeleter {
    void operator()(carp_instance* p) const { carp_instance_free(p); }
};
struct SolutionDeleter {
    void operator()(carp_solution* p) const { carp_solution_free(p); }
};
using InstancePtr = std::unique_ptr<carp_instance, InstanceDeleter>;
using SolutionPtr = std::unique_ptr<carp_solution, SolutionDeleter>;

struct LoadFlags {
    std::string input;
    std::string format = "native";
    int capacity = 0;  // 0: keep the instance's capacity
};

void add_load_flags(CLI::App* cmd, LoadFlags& flags) {
    cmd->add_option("--input", flags.input, "instance file")->required();
    cmd->add_option("--format", flags.format, "instance format: native|classic")
        ->check(CLI::IsMember({"native", "classic"}));
    cmd->add_option("--capacity", flags.capacity, "override the instance capacity");
}

carp_status load_instance(const LoadFlags& flags, InstancePtr& out) {
    carp_instance* raw = nullptr;
    carp_status status = carp_instance_load(flags.input.c_str(), flags.format.c_str(), &raw);
    if (status != CARP_OK) return status;
    out.reset(raw);
    if (flags.capacity > 0) status = carp_instance_set_capacity(out.get(), flags.capacity);
    return status;
}

void print_solution_text(const carp_solution* sol) {
    const double h1 = carp_solution_tour_cost_h1(sol);
    const double h2 = carp_solution_tour_cost_h2(sol);
    if (h1 >= 0.0) std::printf("tour h1 cost %.10g\n", h1);
    if (h2 >= 0.0) std::printf("tour h2 cost %.10g\n", h2);
    if (h1 >= 0.0 || h2 >= 0.0)
        std::printf("partitioned tour: %s\n", carp_solution_tour_choice(sol));
    const int routes = carp_solution_route_count(sol);
    std::printf("routes: %d\n", routes);
    for (int r = 0; r < routes; ++r) {
        std::printf("  route %d (cost %.10g):", r, carp_solution_route_cost(sol, r));
        const int len = carp_solution_route_length(sol, r);
        for (int i = 0; i < len; ++i) {
            int customer = 0, reversed = 0;
            carp_solution_route_customer(sol, r, i, &customer, &reversed);
            std::printf(" %d%c", customer, reversed ? '-' : '+');
        }
        std::printf("\n");
        const int walk_len = carp_solution_route_walk_length(sol, r);
        if (walk_len > 0) {
            std::printf("    raw walk:");
            for (int i = 0; i < walk_len; ++i) {
                int v = 0;
                carp_solution_route_walk_vertex(sol, r, i, &v);
                std::printf(" %d", v);
            }
            std::printf("\n");
        }
    }
    std::printf("total cost: %.10g\n", carp_solution_total_cost(sol));
    std::printf("lifted cost: %.10g\n", carp_solution_lifted_cost(sol));
}

int emit_solution(const carp_solution* sol, const carp_instance* inst, const std::string& output) {
    if (output == "report") {
        char* report = nullptr;
        const carp_status status = carp_solution_report(sol, inst, &report);
        if (status != CARP_OK) return fail(status);
        std::fputs(report, stdout);
        carp_free(report);
    } else {
        print_solution_text(sol);
    }
    return 0;
}

bool parse_k_range(const std::string& text, int& lo, int& hi) {
    const size_t sep = text.find("..");
    if (sep == std::string::npos) return false;
    try {
        lo = std::stoi(text.substr(0, sep));
        hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        return false;
    }
    return lo <= hi;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equal-demand capacitated arc routing solver"};
    app.require_subcommand(1);

    LoadFlags solve_flags;
    std::string solve_rpp = "best";
    std::string solve_partition = "candidates";
    std::string solve_output = "text";
    CLI::App* solve_cmd = app.add_subcommand("solve", "approximate solver");
    add_load_flags(solve_cmd, solve_flags);
    solve_cmd->add_option("--rpp", solve_rpp, "tour construction: best|h1|h2")
        ->check(CLI::IsMember({"best", "h1", "h2"}));
    solve_cmd->add_option("--partition", solve_partition, "partition scheme: candidates|dp")
        ->check(CLI::IsMember({"candidates", "dp"}));
    solve_cmd->add_option("--output", solve_output, "output style: text|report")
        ->check(CLI::IsMember({"text", "report"}));

    LoadFlags exact_flags;
    int exact_max_m = 8;
    std::string exact_output = "text";
    CLI::App* exact_cmd = app.add_subcommand("exact", "exact solver for small instances");
    add_load_flags(exact_cmd, exact_flags);
    exact_cmd->add_option("--max-m", exact_max_m, "customer-count cap");
    exact_cmd->add_option("--output", exact_output, "output style: text|report")
        ->check(CLI::IsMember({"text", "report"}));

    LoadFlags bounds_flags;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "lower bounds and inequality checks");
    add_load_flags(bounds_cmd, bounds_flags);

    std::string ratio_range = "3..10";
    CLI::App* ratio_cmd = app.add_subcommand("ratio-table", "closed-form approximation ratios");
    ratio_cmd->add_option("--k-range", ratio_range, "capacity range A..B");

    std::uint64_t verify_seed = 1;
    int verify_trials = 100;
    int verify_max_m = 7;
    int verify_max_k = 5;
    int verify_jobs = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "randomized verification sweep");
    verify_cmd->add_option("--seed", verify_seed, "base seed");
    verify_cmd->add_option("--trials", verify_trials, "number of trials");
    verify_cmd->add_option("--max-m", verify_max_m, "largest customer count");
    verify_cmd->add_option("--max-k", verify_max_k, "largest capacity");
    verify_cmd->add_option("--jobs", verify_jobs, "worker threads (0: auto)");

    int gen_m = 5;
    int gen_capacity = 3;
    std::string gen_mode = "euclidean";
    std::uint64_t gen_seed = 1;
    int gen_range = 100;
    std::string gen_out;
    CLI::App* gen_cmd = app.add_subcommand("generate", "write a random instance file");
    gen_cmd->add_option("--m", gen_m, "customer count");
    gen_cmd->add_option("--capacity", gen_capacity, "vehicle capacity");
    gen_cmd->add_option("--mode", gen_mode, "euclidean|random-metric")
        ->check(CLI::IsMember({"euclidean", "random-metric"}));
    gen_cmd->add_option("--seed", gen_seed, "seed");
    gen_cmd->add_option("--range", gen_range, "coordinate/cost range");
    gen_cmd->add_option("--out", gen_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int cli_exit = app.exit(e);
        return cli_exit == 0 ? 0 : 2;
    }

    if (solve_cmd->parsed()) {
        InstancePtr inst;
        carp_status status = load_instance(solve_flags, inst);
        if (status != CARP_OK) return fail(status);
        carp_solution* raw = nullptr;
        status = carp_solve(inst.get(), solve_rpp.c_str(), solve_partition.c_str(), &raw);
        if (status != CARP_OK) return fail(status);
        SolutionPtr sol(raw);
        return emit_solution(sol.get(), inst.get(), solve_output);
    }

    if (exact_cmd->parsed()) {
        InstancePtr inst;
        carp_status status = load_instance(exact_flags, inst);
        if (status != CARP_OK) return fail(status);
        carp_solution* raw = nullptr;
        status = carp_solve_exact(inst.get(), exact_max_m, &raw);
        if (status != CARP_OK) return fail(status);
        SolutionPtr sol(raw);
        return emit_solution(sol.get(), inst.get(), exact_output);
    }

    if (bounds_cmd->parsed()) {
        InstancePtr inst;
        carp_status status = load_instance(bounds_flags, inst);
        if (status != CARP_OK) return fail(status);
        char* report = nullptr;
        int violations = 0;
        status = carp_bounds_report(inst.get(), &report, &violations);
        if (status != CARP_OK && status != CARP_ERROR_VERIFICATION) return fail(status);
        std::fputs(report, stdout);
        carp_free(report);
        return violations > 0 ? 5 : 0;
    }

    if (ratio_cmd->parsed()) {
        int lo = 0, hi = 0;
        if (!parse_k_range(ratio_range, lo, hi)) {
            std::fprintf(stderr, "error: --k-range must look like A..B with A <= B\n");
            return 2;
        }
        for (int k = lo; k <= hi; ++k) {
            int l = 0;
            double ratio = 0.0;
            const carp_status status = carp_ratio_closed_form(k, &l, &ratio);
            if (status != CARP_OK) return fail(status);
            std::printf("k %d l %d ratio %.6f rounded %.3f\n", k, l, ratio, ratio);
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        char* report = nullptr;
        int violations = 0;
        const carp_status status = carp_verify_sweep(verify_seed, verify_trials, verify_max_m,
                                                     verify_max_k, verify_jobs, &report,
                                                     &violations);
        if (status != CARP_OK && status != CARP_ERROR_VERIFICATION) return fail(status);
        std::fputs(report, stdout);
        carp_free(report);
        return violations > 0 ? 5 : 0;
    }

    if (gen_cmd->parsed()) {
        carp_instance* raw = nullptr;
        carp_status status = carp_instance_generate(gen_m, gen_capacity, gen_mode.c_str(),
                                                    gen_seed, gen_range, &raw);
        if (status != CARP_OK) return fail(status);
        InstancePtr inst(raw);
        status = carp_instance_write_native(inst.get(), gen_out.c_str());
        if (status != CARP_OK) return fail(status);
        std::printf("wrote %s (m=%d, capacity=%d)\n", gen_out.c_str(),
                    carp_instance_customers(inst.get()), carp_instance_capacity(inst.get()));
        return 0;
    }

    return 2;
}
