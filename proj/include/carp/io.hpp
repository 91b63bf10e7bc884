#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "carp/analysis.hpp"
#include "carp/model.hpp"
#include "carp/preprocess.hpp"
#include "carp/sweep.hpp"

namespace carp {

// Native format: header "n_vertices n_edges capacity depot", then one
// "u v cost demand" line per edge; '#' starts a comment. Errors carry
// line/column positions.
RawInstance parse_instance_text(std::string_view text, std::string_view source_name = "<memory>");
RawInstance parse_instance(const std::string& path);

// Classic key-value benchmark layout (VERTICES / CAPACIDAD / DEPOSITO /
// LISTA_ARISTAS_REQ ...). Demands above 1 are rejected: this toolkit covers
// the equal-demand problem only.
RawInstance parse_classic_text(std::string_view text, std::string_view source_name = "<memory>");
RawInstance parse_classic_format(const std::string& path);

std::string write_native(const RawInstance& raw);

enum class GenMode { euclidean, random_metric };

// Deterministic instance generator. Both modes emit integer costs and
// canonicalize every edge cost to the shortest-path distance between its
// endpoints, so customer edges always realize their metric distance.
RawInstance generate(int m, int capacity, GenMode mode, std::uint64_t seed, int coord_range = 100);

struct SolutionReportMeta {
    std::string instance_name;
    std::string mode = "solve";          // solve | exact
    std::string rpp_choice;              // h1 | h2 | best -> resolved tour
    std::string partition_scheme;
    double h1_cost = -1.0;               // < 0: not computed
    double h2_cost = -1.0;
};

// Line-oriented key-value solution report; one route per line.
std::string format_solution_report(const Solution& sol, const MetricInstance& inst,
                                   const LiftedSolution* lifted = nullptr,
                                   const SolutionReportMeta& meta = {});

// Re-parses the `route ...` / `total_cost ...` lines of a solution report.
Solution parse_solution_report(std::string_view report, const MetricInstance& inst);

std::string format_bounds_report(const AnalysisReport& report);
std::string format_sweep_report(const SweepReport& report);

}  // namespace carp
