#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "carp/model.hpp"

namespace carp {

// delta(E') = sum over customer edges (s,t) of
//   (dist(v0,s) + dist(s,t) + dist(v0,t)) / 2.
double delta(std::span<const int> customers, const MetricInstance& inst);
double delta_all(const MetricInstance& inst);

struct LowerBounds {
    double delta_bound = 0.0;               // 2 * delta(E*) / k
    std::optional<double> rpp_bound;        // optimal RPP tour cost, when computable
};

LowerBounds lower_bounds(const MetricInstance& inst, int rpp_cap = 10);

enum class RouteParity { odd, even };

// Per-route decomposition parameters: the route's 2l+1 edges are split into
// connector shares alpha_i and customer shares beta_i, normalized by c(T).
struct RouteShareParams {
    int l = 0;                 // customers on the route
    int t = 0;                 // stored prefix length (shares beyond t are zero)
    RouteParity parity = RouteParity::odd;
    bool degenerate = false;   // c(T) = 0: every claim below is vacuous
    double alpha = 0.0;        // sum of alphas
    std::vector<double> alphas;
    std::vector<double> betas;
};

RouteShareParams route_share_params(const Route& route, const MetricInstance& inst);

struct ShareCheckItem {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct RouteShareCheck {
    bool degenerate = false;
    std::vector<ShareCheckItem> items;  // the four inequalities, in order
    bool all_hold() const;
};

// Verifies, within 1e-9 * c(T):
//   (1) delta(E*_T) <= (k/2 + alpha - sum_i i*alpha_i) * c(T)
//   (2) MST_T <= (1 - max_i alpha_i / 2) * c(T)
//   (3) c(E*_T) = (1 - alpha) * c(T)
//   (4) sum alpha_i = alpha <= 1 and alpha_i in [0, alpha]
RouteShareCheck route_share_check(const RouteShareParams& params, const Route& route,
                                  const MetricInstance& inst);

// Ratio bound functions; require l >= 1, 0 <= alpha <= 1, k >= 3.
double tau(double alpha, int l, int k);
double eta(double alpha, int l, int k);

struct RatioPoint {
    int k = 0;
    int l = 0;        // ceil((sqrt(8k-7) - 1) / 4)
    double ratio = 0.0;
};

// Closed-form approximation ratio 5/2 - (2l^2 + 10l + k - 4) / (2k(4l - 1));
// cross-validated against the equivalent eta-based form. Requires k >= 3.
RatioPoint ratio_closed_form(int k);

// max over l in [1, l_max] and an alpha grid (plus the exact tau/eta crossing
// l/(4l-1) and the endpoints) of min(tau, eta). Oracle for ratio_closed_form.
double ratio_grid_search(int k, int l_max, int alpha_steps);

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    bool equality = false;  // |lhs - rhs| <= tol instead of lhs <= rhs + tol
    bool holds = false;
};

struct AnalysisReport {
    int m = 0;
    int k = 0;
    double delta_total = 0.0;
    double customer_cost = 0.0;  // c(E*)
    double mst = 0.0;            // c(E') + c(E*)
    double h1_cost = 0.0;
    double h2_cost = 0.0;
    double matching_cost = 0.0;   // c(M) from the H2 construction
    double connector_cost = 0.0;  // c(F)
    double alg_candidates = 0.0;
    double alg_dp = 0.0;
    std::optional<double> hstar;  // optimal RPP cost, m <= rpp_cap
    std::optional<double> opt;    // exact optimum, m <= exact_cap
    std::optional<double> ratio;  // closed-form ratio, k >= 3

    std::vector<BoundCheck> checks;
    int odd_share_routes = 0;
    int even_share_routes = 0;
    int degenerate_share_routes = 0;

    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

struct BoundSuiteOptions {
    int exact_cap = 8;
    int rpp_cap = 10;
};

// Evaluates every inequality the instance admits: the partition bound, both
// lower bounds, the tour upper bounds and their ingredients, the per-route
// decomposition, the route share checks, and the end-to-end ratio guarantee.
AnalysisReport bound_suite(const MetricInstance& inst, const BoundSuiteOptions& opts = {});

}  // namespace carp
