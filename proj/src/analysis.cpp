#include "carp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carp/exact.hpp"
#include "carp/graphkit.hpp"
#include "carp/partition.hpp"
#include "carp/rpp.hpp"

namespace carp {

double delta(std::span<const int> customers, const MetricInstance& inst) {
    double total = 0.0;
    for (int c : customers) {
        if (c < 0 || c >= inst.customer_count())
            throw InvalidArgumentError("customer index " + std::to_string(c) + " out of range");
        const auto& [s, t] = inst.customer(c);
        total += (inst.dist(kDepot, s) + inst.dist(s, t) + inst.dist(kDepot, t)) / 2.0;
    }
    return total;
}

double delta_all(const MetricInstance& inst) {
    std::vector<int> all(inst.customer_count());
    std::iota(all.begin(), all.end(), 0);
    return delta(all, inst);
}

LowerBounds lower_bounds(const MetricInstance& inst, int rpp_cap) {
    LowerBounds out;
    out.delta_bound = 2.0 * delta_all(inst) / inst.capacity();
    if (inst.customer_count() <= rpp_cap) out.rpp_bound = exact_rpp(inst, rpp_cap).cost;
    return out;
}

RouteShareParams route_share_params(const Route& route, const MetricInstance& inst) {
    const int l = static_cast<int>(route.served.size());
    if (l == 0) throw InvalidArgumentError("route serves no customer");
    RouteShareParams p;
    p.l = l;
    p.parity = l % 2 == 1 ? RouteParity::odd : RouteParity::even;
    p.t = (l + 2) / 2;  // ceil((l + 1) / 2)
    const double total = route_cost(route, inst);
    if (total <= 0.0) {
        p.degenerate = true;
        return p;
    }

    // Walk vertices v_0 .. v_{2l} with v_0 the depot; v_{2i-1}, v_{2i} are the
    // oriented endpoints of the i-th served customer. Index arithmetic is
    // modulo 2l+1 so that position 2l+1 wraps to the depot.
    std::vector<VertexId> w(2 * l + 1);
    w[0] = kDepot;
    for (int i = 1; i <= l; ++i) {
        w[2 * i - 1] = inst.entry(route.served[i - 1]);
        w[2 * i] = inst.exit(route.served[i - 1]);
    }
    const int period = 2 * l + 1;
    auto d = [&](int a, int b) { return inst.dist(w[a % period], w[b % period]); };

    const int t = p.t;
    p.alphas.assign(t, 0.0);
    p.betas.assign(t, 0.0);
    if (p.parity == RouteParity::odd) {
        for (int i = 1; i <= t; ++i)
            p.alphas[i - 1] = (d(2 * i - 2, 2 * i - 1) + d(2 * l + 2 - 2 * i, 2 * l + 3 - 2 * i)) / total;
        for (int i = 1; i <= t - 1; ++i)
            p.betas[i - 1] = (d(2 * i - 1, 2 * i) + d(2 * l + 1 - 2 * i, 2 * l + 2 - 2 * i)) / total;
        p.betas[t - 1] = d(2 * t - 1, 2 * t) / total;
    } else {
        for (int i = 1; i <= t - 1; ++i)
            p.alphas[i - 1] = (d(2 * i - 2, 2 * i - 1) + d(2 * l + 2 - 2 * i, 2 * l + 3 - 2 * i)) / total;
        p.alphas[t - 1] = d(2 * t - 2, 2 * t - 1) / total;
        for (int i = 1; i <= t - 1; ++i)
            p.betas[i - 1] = (d(2 * i - 1, 2 * i) + d(2 * l + 1 - 2 * i, 2 * l + 2 - 2 * i)) / total;
        p.betas[t - 1] = 0.0;
    }
    p.alpha = std::accumulate(p.alphas.begin(), p.alphas.end(), 0.0);
    return p;
}

bool RouteShareCheck::all_hold() const {
    if (degenerate) return true;
    for (const ShareCheckItem& item : items)
        if (!item.holds) return false;
    return true;
}

RouteShareCheck route_share_check(const RouteShareParams& params, const Route& route,
                                  const MetricInstance& inst) {
    RouteShareCheck out;
    out.degenerate = params.degenerate;
    if (params.degenerate) return out;

    const double total = route_cost(route, inst);
    const double tol = 1e-9 * total + 1e-12;
    const double k = inst.capacity();

    std::vector<int> customers;
    customers.reserve(route.served.size());
    for (const ServedCustomer& sc : route.served) customers.push_back(sc.customer);

    double weighted = 0.0;
    double max_alpha = 0.0;
    for (size_t i = 0; i < params.alphas.size(); ++i) {
        weighted += static_cast<double>(i + 1) * params.alphas[i];
        max_alpha = std::max(max_alpha, params.alphas[i]);
    }

    ShareCheckItem item1;
    item1.name = "route_delta_share";
    item1.lhs = delta(customers, inst);
    item1.rhs = (k / 2.0 + params.alpha - weighted) * total;
    item1.holds = item1.lhs <= item1.rhs + tol;

    std::vector<VertexId> vertices{kDepot};
    std::vector<EdgePair> required;
    for (int c : customers) {
        vertices.push_back(inst.customer(c).first);
        vertices.push_back(inst.customer(c).second);
        required.push_back(ordered_pair(inst.customer(c).first, inst.customer(c).second));
    }
    const DistanceFn dist_fn = [&inst](VertexId a, VertexId b) { return inst.dist(a, b); };
    double tree_cost = 0.0;
    for (const EdgePair& e : constrained_mst(vertices, required, dist_fn))
        tree_cost += inst.dist(e.first, e.second);

    ShareCheckItem item2;
    item2.name = "route_tree_share";
    item2.lhs = tree_cost;
    item2.rhs = (1.0 - max_alpha / 2.0) * total;
    item2.holds = item2.lhs <= item2.rhs + tol;

    ShareCheckItem item3;
    item3.name = "route_customer_share";
    double customer_cost = 0.0;
    for (int c : customers) customer_cost += inst.customer_cost(c);
    item3.lhs = customer_cost;
    item3.rhs = (1.0 - params.alpha) * total;
    item3.holds = std::abs(item3.lhs - item3.rhs) <= tol;

    ShareCheckItem item4;
    item4.name = "route_share_range";
    item4.lhs = params.alpha;
    item4.rhs = 1.0;
    item4.holds = params.alpha <= 1.0 + tol;
    for (double a : params.alphas)
        if (a < -tol || a > params.alpha + tol) item4.holds = false;

    out.items = {item1, item2, item3, item4};
    return out;
}

double tau(double alpha, int l, int k) {
    if (l < 1) throw InvalidArgumentError("tau requires l >= 1");
    if (k < 3) throw InvalidArgumentError("tau requires capacity >= 3");
    if (alpha < 0.0 || alpha > 1.0) throw InvalidArgumentError("tau requires alpha in [0,1]");
    const double kk = k;
    const double ll = l;
    return (5.0 * kk - 3.0) / (2.0 * kk) -
           (2.0 * ll * ll - 2.0 * ll + kk - 1.0) * alpha / (2.0 * kk * ll);
}

double eta(double alpha, int l, int k) {
    if (l < 1) throw InvalidArgumentError("eta requires l >= 1");
    if (k < 3) throw InvalidArgumentError("eta requires capacity >= 3");
    if (alpha < 0.0 || alpha > 1.0) throw InvalidArgumentError("eta requires alpha in [0,1]");
    const double kk = k;
    const double ll = l;
    return (2.0 * kk - 1.0) / kk -
           (ll * ll + ll - 2.0 * kk * ll + kk - 1.0) * alpha / (kk * ll);
}

RatioPoint ratio_closed_form(int k) {
    if (k < 3) throw InvalidArgumentError("closed-form ratio requires capacity >= 3");
    // Smallest integer l >= (sqrt(8k-7) - 1) / 4, via 2l^2 + l + 1 >= k.
    long long l = 1;
    while (2 * l * l + l + 1 < k) ++l;
    const double kk = k;
    const double ll = static_cast<double>(l);
    const double primary =
        2.5 - (2.0 * ll * ll + 10.0 * ll + kk - 4.0) / (2.0 * kk * (4.0 * ll - 1.0));
    const double alternate = (2.0 * kk - 1.0) / kk -
                             (ll * ll + ll - 2.0 * kk * ll + kk - 1.0) / (kk * (4.0 * ll - 1.0));
    if (std::abs(primary - alternate) > 1e-12)
        throw Error(ErrorCode::internal, "ratio closed-form expressions disagree");
    return {k, static_cast<int>(l), primary};
}

double ratio_grid_search(int k, int l_max, int alpha_steps) {
    if (k < 3) throw InvalidArgumentError("grid search requires capacity >= 3");
    if (l_max < static_cast<int>(2.0 * std::sqrt(static_cast<double>(k))))
        throw InvalidArgumentError("grid search requires l_max >= 2*sqrt(k)");
    if (alpha_steps < 10000) throw InvalidArgumentError("grid search requires alpha_steps >= 10^4");
    double best = 0.0;
    for (int l = 1; l <= l_max; ++l) {
        const double crossing = static_cast<double>(l) / (4.0 * l - 1.0);
        auto eval = [&](double alpha) {
            const double value = std::min(tau(alpha, l, k), eta(alpha, l, k));
            best = std::max(best, value);
        };
        for (int j = 0; j <= alpha_steps; ++j) eval(static_cast<double>(j) / alpha_steps);
        eval(crossing);
        eval(0.0);
        eval(1.0);
    }
    return best;
}

namespace {

void add_check(AnalysisReport& rep, std::string name, double lhs, double rhs,
               bool equality = false) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.equality = equality;
    c.holds = equality ? approx_eq(lhs, rhs) : approx_leq(lhs, rhs);
    if (!c.holds)
        rep.violations.push_back("check " + c.name + " failed: lhs=" + std::to_string(lhs) +
                                 " rhs=" + std::to_string(rhs));
    rep.checks.push_back(std::move(c));
}

void check_feasible(AnalysisReport& rep, const Solution& sol, const MetricInstance& inst,
                    const std::string& label) {
    const FeasibilityReport fr = check_solution(sol, inst);
    for (const std::string& v : fr.violations)
        rep.violations.push_back(label + " infeasible: " + v);
}

bool serves_exactly_once(const std::vector<ServedCustomer>& order, int m) {
    std::vector<int> count(m, 0);
    for (const ServedCustomer& sc : order) {
        if (sc.customer < 0 || sc.customer >= m) return false;
        ++count[sc.customer];
    }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

}  // namespace

AnalysisReport bound_suite(const MetricInstance& inst, const BoundSuiteOptions& opts) {
    AnalysisReport rep;
    rep.m = inst.customer_count();
    rep.k = inst.capacity();
    rep.delta_total = delta_all(inst);
    if (rep.m == 0) return rep;

    const DistanceFn dist_fn = [&inst](VertexId a, VertexId b) { return inst.dist(a, b); };
    const double k = inst.capacity();

    for (int c = 0; c < rep.m; ++c) rep.customer_cost += inst.customer_cost(c);

    std::vector<VertexId> all(inst.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    std::vector<EdgePair> required;
    for (int c = 0; c < rep.m; ++c)
        required.push_back(ordered_pair(inst.customer(c).first, inst.customer(c).second));
    for (const EdgePair& e : constrained_mst(all, required, dist_fn))
        rep.mst += inst.dist(e.first, e.second);

    const TourBuild h1 = build_h1(inst);
    const TourBuild h2 = build_h2(inst);
    rep.h1_cost = h1.tour.cost;
    rep.h2_cost = h2.tour.cost;
    rep.matching_cost = h2.matching_cost;
    rep.connector_cost = h2.connector_cost;

    if (!serves_exactly_once(h1.tour.order, rep.m))
        rep.violations.push_back("tree-based tour does not serve every customer exactly once");
    if (!serves_exactly_once(h2.tour.order, rep.m))
        rep.violations.push_back("matching-based tour does not serve every customer exactly once");
    add_check(rep, "h1_shortcut_monotonic", h1.tour.cost, h1.walk_cost);
    add_check(rep, "h2_shortcut_monotonic", h2.tour.cost, h2.walk_cost);
    add_check(rep, "h1_parts", h1.tour.cost, h1.tree_cost + h1.matching_cost);
    add_check(rep, "h2_parts", h2.tour.cost,
              rep.customer_cost + rep.matching_cost + 2.0 * rep.connector_cost);
    add_check(rep, "connector_upper", rep.connector_cost, rep.mst - rep.customer_cost);

    const RppTour& chosen = h1.tour.cost <= h2.tour.cost ? h1.tour : h2.tour;
    const Solution cand = jitp_candidates(chosen, inst);
    const Solution dp = jitp_dp(chosen, inst);
    rep.alg_candidates = cand.total_cost;
    rep.alg_dp = dp.total_cost;
    check_feasible(rep, cand, inst, "offset partition");
    check_feasible(rep, dp, inst, "dp partition");
    add_check(rep, "partition_bound", cand.total_cost,
              (2.0 / k) * rep.delta_total + (k - 1.0) / k * chosen.cost);
    add_check(rep, "partition_dp_no_worse", dp.total_cost, cand.total_cost);
    add_check(rep, "partition_chain", cand.total_cost,
              (2.0 / k) * rep.delta_total +
                  (k - 1.0) / k * std::min(h1.tour.cost, h2.tour.cost));

    if (rep.m <= opts.rpp_cap) {
        const RppTour hstar = exact_rpp(inst, opts.rpp_cap);
        if (!serves_exactly_once(hstar.order, rep.m))
            rep.violations.push_back("optimal tour does not serve every customer exactly once");
        rep.hstar = hstar.cost;
        add_check(rep, "rpp_optimal_vs_h1", hstar.cost, h1.tour.cost);
        add_check(rep, "rpp_optimal_vs_h2", hstar.cost, h2.tour.cost);
        add_check(rep, "tour1_tree_half_rpp", h1.tour.cost, rep.mst + hstar.cost / 2.0);
    }

    if (rep.m <= opts.exact_cap) {
        const Solution opt = exact_carp(inst, opts.exact_cap);
        rep.opt = opt.total_cost;
        check_feasible(rep, opt, inst, "exact optimum");

        add_check(rep, "delta_lower_bound", 2.0 * rep.delta_total / k, opt.total_cost);
        if (rep.hstar) add_check(rep, "rpp_lower_bound", *rep.hstar, opt.total_cost);
        add_check(rep, "tour1_tree_half_opt", h1.tour.cost, rep.mst + opt.total_cost / 2.0);
        add_check(rep, "tour2_even_graph", h2.tour.cost,
                  opt.total_cost + 2.0 * rep.mst - 2.0 * rep.customer_cost);
        add_check(rep, "tour1_even_graph", h1.tour.cost,
                  opt.total_cost + 2.0 * rep.mst - 2.0 * rep.customer_cost);
        add_check(rep, "even_graph_lower", rep.customer_cost + rep.matching_cost, opt.total_cost);
        add_check(rep, "chain_bound", cand.total_cost,
                  (2.0 / k) * rep.delta_total +
                      (k - 1.0) / k *
                          std::min(rep.mst + opt.total_cost / 2.0,
                                   opt.total_cost + 2.0 * rep.mst - 2.0 * rep.customer_cost));

        // Per-route decomposition: delta splits exactly, trees superadd.
        double delta_sum = 0.0;
        double tree_sum = 0.0;
        for (const Route& route : opt.routes) {
            std::vector<int> customers;
            for (const ServedCustomer& sc : route.served) customers.push_back(sc.customer);
            delta_sum += delta(customers, inst);
            std::vector<VertexId> vertices{kDepot};
            std::vector<EdgePair> req;
            for (int c : customers) {
                vertices.push_back(inst.customer(c).first);
                vertices.push_back(inst.customer(c).second);
                req.push_back(ordered_pair(inst.customer(c).first, inst.customer(c).second));
            }
            for (const EdgePair& e : constrained_mst(vertices, req, dist_fn))
                tree_sum += inst.dist(e.first, e.second);
        }
        add_check(rep, "delta_additivity", delta_sum, rep.delta_total, /*equality=*/true);
        add_check(rep, "tree_superadditivity", rep.mst, tree_sum);

        if (rep.k >= 3) {
            rep.ratio = ratio_closed_form(rep.k).ratio;
            add_check(rep, "ratio_guarantee", cand.total_cost, *rep.ratio * opt.total_cost);
            add_check(rep, "ratio_guarantee_dp", dp.total_cost, *rep.ratio * opt.total_cost);
        }

        for (size_t ri = 0; ri < opt.routes.size(); ++ri) {
            const RouteShareParams params = route_share_params(opt.routes[ri], inst);
            if (params.degenerate) {
                ++rep.degenerate_share_routes;
                continue;
            }
            if (params.parity == RouteParity::odd)
                ++rep.odd_share_routes;
            else
                ++rep.even_share_routes;
            const RouteShareCheck check = route_share_check(params, opt.routes[ri], inst);
            for (const ShareCheckItem& item : check.items)
                if (!item.holds)
                    rep.violations.push_back("route " + std::to_string(ri) + " " + item.name +
                                             " failed: lhs=" + std::to_string(item.lhs) +
                                             " rhs=" + std::to_string(item.rhs));
        }
    }

    return rep;
}

}  // namespace carp
