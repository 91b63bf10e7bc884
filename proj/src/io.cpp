#include "carp/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "carp/preprocess.hpp"

namespace carp {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

// Whitespace tokens per line, '#' comments stripped.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, eol - pos);
        ++line_no;
        if (const size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<Token> tokens;
        size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            const size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            if (i > start)
                tokens.push_back({std::string(line.substr(start, i - start)), line_no,
                                  static_cast<int>(start) + 1});
        }
        if (!tokens.empty()) lines.push_back(std::move(tokens));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

[[noreturn]] void fail_at(std::string_view source, const Token& tok, const std::string& message) {
    std::ostringstream os;
    os << source << ":" << tok.line << ":" << tok.column << ": " << message;
    throw ParseError(os.str());
}

long long parse_int(std::string_view source, const Token& tok, const std::string& what) {
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
        fail_at(source, tok, what + " must be an integer, got '" + tok.text + "'");
    return value;
}

double parse_number(std::string_view source, const Token& tok, const std::string& what) {
    try {
        size_t used = 0;
        const double value = std::stod(tok.text, &used);
        if (used != tok.text.size()) throw std::invalid_argument("trailing");
        return value;
    } catch (const std::exception&) {
        fail_at(source, tok, what + " must be a number, got '" + tok.text + "'");
    }
}

std::string fmt_num(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        return std::to_string(static_cast<long long>(v));
    }
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

RawInstance parse_instance_text(std::string_view text, std::string_view source_name) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError(std::string(source_name) + ": empty instance file");

    const auto& header = lines.front();
    if (header.size() != 4)
        fail_at(source_name, header.front(),
                "header must be 'n_vertices n_edges capacity depot', got " +
                    std::to_string(header.size()) + " fields");
    RawInstance raw;
    raw.vertex_count = static_cast<int>(parse_int(source_name, header[0], "vertex count"));
    const long long n_edges = parse_int(source_name, header[1], "edge count");
    raw.capacity = static_cast<int>(parse_int(source_name, header[2], "capacity"));
    raw.depot = static_cast<int>(parse_int(source_name, header[3], "depot"));
    if (raw.vertex_count <= 0) fail_at(source_name, header[0], "vertex count must be positive");
    if (n_edges < 0) fail_at(source_name, header[1], "edge count must be nonnegative");
    if (raw.capacity < 1) fail_at(source_name, header[2], "capacity must be >= 1");
    if (raw.depot < 0 || raw.depot >= raw.vertex_count)
        fail_at(source_name, header[3], "depot id out of range");

    if (static_cast<long long>(lines.size()) - 1 != n_edges)
        fail_at(source_name, header[1],
                "expected " + std::to_string(n_edges) + " edge lines, found " +
                    std::to_string(lines.size() - 1));

    for (size_t li = 1; li < lines.size(); ++li) {
        const auto& toks = lines[li];
        if (toks.size() != 4)
            fail_at(source_name, toks.front(), "edge line must be 'u v cost demand'");
        RawEdge e;
        e.u = static_cast<int>(parse_int(source_name, toks[0], "vertex id"));
        e.v = static_cast<int>(parse_int(source_name, toks[1], "vertex id"));
        e.cost = parse_number(source_name, toks[2], "cost");
        const long long demand = parse_int(source_name, toks[3], "demand");
        if (e.u < 0 || e.u >= raw.vertex_count) fail_at(source_name, toks[0], "vertex id out of range");
        if (e.v < 0 || e.v >= raw.vertex_count) fail_at(source_name, toks[1], "vertex id out of range");
        if (!(e.cost >= 0.0)) fail_at(source_name, toks[2], "cost must be nonnegative");
        if (demand != 0 && demand != 1)
            fail_at(source_name, toks[3], "demand must be 0 or 1 (equal-demand scope)");
        e.demand = static_cast<int>(demand);
        if (e.u == e.v) {
            if (e.demand == 1)
                fail_at(source_name, toks[0], "self-loop cannot carry demand");
            continue;  // demand-0 self-loops are dropped
        }
        raw.edges.push_back(e);
    }
    raw.validate();
    return raw;
}

RawInstance parse_instance(const std::string& path) {
    return parse_instance_text(read_file(path), path);
}

namespace {

std::string upper(std::string s) {
    for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

bool is_known_scalar_key(const std::string& key) {
    static const char* keys[] = {"NOMBRE",     "NAME",       "COMENTARIO", "COMMENT",
                                 "VERTICES",   "ARISTAS_REQ", "ARISTAS_NOREQ", "EDGES_REQ",
                                 "EDGES_NOREQ", "VEHICULOS",  "VEHICLES",   "CAPACIDAD",
                                 "CAPACITY",   "TIPO_COSTES_ARISTAS", "COSTE_TOTAL_ARISTAS",
                                 "DEPOSITO",   "DEPOT"};
    return std::find_if(std::begin(keys), std::end(keys),
                        [&](const char* k) { return key == k; }) != std::end(keys);
}

}  // namespace

RawInstance parse_classic_text(std::string_view text, std::string_view source_name) {
    RawInstance raw;
    raw.depot = 0;  // classic files are 1-based; depot defaults to vertex 1
    int vertices = -1;
    int capacity = -1;
    long long req_declared = -1;
    enum class Section { none, required, non_required } section = Section::none;

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        // Edge-list entries: "( u, v) coste C [demanda D]".
        const bool looks_like_edge = line.find('(') != std::string::npos;
        if (looks_like_edge && section != Section::none) {
            std::string cleaned = line;
            for (char& c : cleaned)
                if (c == '(' || c == ')' || c == ',') c = ' ';
            std::istringstream ls(cleaned);
            std::vector<std::string> toks;
            std::string t;
            while (ls >> t) toks.push_back(t);
            auto bad = [&](const std::string& msg) -> void {
                throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) + ": " +
                                 msg);
            };
            if (toks.size() < 4) bad("malformed edge entry");
            RawEdge e;
            try {
                e.u = std::stoi(toks[0]) - 1;
                e.v = std::stoi(toks[1]) - 1;
            } catch (const std::exception&) {
                bad("malformed vertex ids in edge entry");
            }
            const std::string cost_key = upper(toks[2]);
            if (cost_key != "COSTE" && cost_key != "COST" && cost_key != "COSTO")
                bad("expected cost keyword, got '" + toks[2] + "'");
            try {
                e.cost = std::stod(toks[3]);
            } catch (const std::exception&) {
                bad("malformed cost in edge entry");
            }
            if (section == Section::required) {
                long long demand = 1;
                if (toks.size() >= 6) {
                    const std::string dem_key = upper(toks[4]);
                    if (dem_key != "DEMANDA" && dem_key != "DEMAND")
                        bad("expected demand keyword, got '" + toks[4] + "'");
                    try {
                        demand = std::stoll(toks[5]);
                    } catch (const std::exception&) {
                        bad("malformed demand in edge entry");
                    }
                }
                if (demand > 1)
                    bad("demand " + std::to_string(demand) +
                        " exceeds 1: this solver covers the equal-demand problem only");
                if (demand < 0) bad("negative demand");
                e.demand = static_cast<int>(demand);
            } else {
                e.demand = 0;
            }
            raw.edges.push_back(e);
            continue;
        }

        // Key [: value] lines.
        std::string no_colon = line;
        std::replace(no_colon.begin(), no_colon.end(), ':', ' ');
        std::istringstream ls(no_colon);
        std::string key;
        if (!(ls >> key)) continue;
        const std::string ukey = upper(key);
        if (ukey == "LISTA_ARISTAS_REQ" || ukey == "LIST_REQ_EDGES") {
            section = Section::required;
            continue;
        }
        if (ukey == "LISTA_ARISTAS_NOREQ" || ukey == "LIST_NOREQ_EDGES") {
            section = Section::non_required;
            continue;
        }
        if (!is_known_scalar_key(ukey))
            throw ParseError(std::string(source_name) + ":" + std::to_string(line_no) +
                             ": unknown key '" + key + "'");
        section = Section::none;
        std::string value;
        ls >> value;
        if (ukey == "VERTICES") vertices = std::stoi(value);
        if (ukey == "CAPACIDAD" || ukey == "CAPACITY") capacity = std::stoi(value);
        if (ukey == "ARISTAS_REQ" || ukey == "EDGES_REQ") req_declared = std::stoll(value);
        if (ukey == "DEPOSITO" || ukey == "DEPOT") raw.depot = std::stoi(value) - 1;
    }

    if (vertices <= 0)
        throw ParseError(std::string(source_name) + ": missing or invalid VERTICES");
    if (capacity < 1)
        throw ParseError(std::string(source_name) + ": missing or invalid CAPACIDAD");
    raw.vertex_count = vertices;
    raw.capacity = capacity;
    if (req_declared >= 0) {
        const long long actual = static_cast<long long>(raw.customer_edge_indices().size());
        if (actual != req_declared)
            throw ParseError(std::string(source_name) + ": declared " +
                             std::to_string(req_declared) + " required edges, found " +
                             std::to_string(actual));
    }
    raw.validate();
    return raw;
}

RawInstance parse_classic_format(const std::string& path) {
    return parse_classic_text(read_file(path), path);
}

std::string write_native(const RawInstance& raw) {
    std::ostringstream os;
    os << raw.vertex_count << " " << raw.edges.size() << " " << raw.capacity << " " << raw.depot
       << "\n";
    for (const RawEdge& e : raw.edges)
        os << e.u << " " << e.v << " " << fmt_num(e.cost) << " " << e.demand << "\n";
    return os.str();
}

RawInstance generate(int m, int capacity, GenMode mode, std::uint64_t seed, int coord_range) {
    if (m < 0) throw InvalidArgumentError("customer count must be >= 0");
    if (capacity < 1) throw InvalidArgumentError("capacity must be >= 1");
    if (coord_range < 1) throw InvalidArgumentError("coordinate range must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    RawInstance raw;
    raw.depot = 0;
    raw.capacity = capacity;

    if (mode == GenMode::euclidean) {
        const int n = 2 * m + 1;
        raw.vertex_count = n;
        std::vector<std::pair<int, int>> pts(n);
        for (auto& [x, y] : pts) {
            x = draw(coord_range + 1);
            y = draw(coord_range + 1);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                const double dx = pts[i].first - pts[j].first;
                const double dy = pts[i].second - pts[j].second;
                RawEdge e;
                e.u = i;
                e.v = j;
                e.cost = static_cast<double>(std::llround(std::hypot(dx, dy)));
                // Customer c joins vertices 2c+1 and 2c+2.
                e.demand = (j == i + 1 && i % 2 == 1) ? 1 : 0;
                raw.edges.push_back(e);
            }
    } else {
        const int n = m == 0 ? 1 : 2 + draw(2 * m + 2);
        raw.vertex_count = n;
        if (n > 1) {
            // Random spanning tree keeps the graph connected.
            std::vector<int> perm(n);
            for (int i = 0; i < n; ++i) perm[i] = i;
            for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[draw(i + 1)]);
            for (int i = 1; i < n; ++i) {
                RawEdge e;
                e.u = perm[draw(i)];
                e.v = perm[i];
                e.cost = 1 + draw(coord_range);
                e.demand = 0;
                raw.edges.push_back(e);
            }
            const int extra = draw(n + 1);
            for (int i = 0; i < extra; ++i) {
                const int a = draw(n);
                int b = draw(n);
                if (a == b) b = (b + 1) % n;
                raw.edges.push_back({a, b, static_cast<double>(1 + draw(coord_range)), 0});
            }
            for (int c = 0; c < m; ++c) {
                const int a = draw(n);
                int b = draw(n);
                if (a == b) b = (b + 1) % n;
                raw.edges.push_back({a, b, static_cast<double>(1 + draw(coord_range)), 1});
            }
        }
    }

    // Canonicalize: every edge cost becomes the shortest-path distance between
    // its endpoints, so customer edges always realize their metric distance
    // and lifted solutions reproduce metric costs exactly.
    if (!raw.edges.empty()) {
        const MetricClosure closure = metric_closure(raw);
        for (RawEdge& e : raw.edges) e.cost = closure.dist(e.u, e.v);
    }
    return raw;
}

std::string format_solution_report(const Solution& sol, const MetricInstance& inst,
                                   const LiftedSolution* lifted, const SolutionReportMeta& meta) {
    std::ostringstream os;
    os << "format carp-solution 1\n";
    if (!meta.instance_name.empty()) os << "instance " << meta.instance_name << "\n";
    os << "mode " << meta.mode << "\n";
    os << "m " << inst.customer_count() << "\n";
    os << "capacity " << inst.capacity() << "\n";
    if (!meta.rpp_choice.empty()) os << "rpp " << meta.rpp_choice << "\n";
    if (meta.h1_cost >= 0.0) os << "h1_cost " << fmt_num(meta.h1_cost) << "\n";
    if (meta.h2_cost >= 0.0) os << "h2_cost " << fmt_num(meta.h2_cost) << "\n";
    if (!meta.partition_scheme.empty()) os << "partition " << meta.partition_scheme << "\n";
    os << "routes " << sol.routes.size() << "\n";
    for (size_t i = 0; i < sol.routes.size(); ++i) {
        const Route& r = sol.routes[i];
        os << "route " << i << " cost " << fmt_num(r.cost) << " customers";
        for (const ServedCustomer& sc : r.served)
            os << " " << sc.customer << (sc.dir == Orientation::forward ? "+" : "-");
        os << "\n";
    }
    os << "total_cost " << fmt_num(sol.total_cost) << "\n";
    if (lifted) {
        os << "lifted_total_cost " << fmt_num(lifted->total_cost) << "\n";
        for (size_t i = 0; i < lifted->routes.size(); ++i) {
            os << "lifted_route " << i << " cost " << fmt_num(lifted->routes[i].cost) << " walk";
            for (VertexId v : lifted->routes[i].walk) os << " " << v;
            os << "\n";
        }
    }
    os << "end\n";
    return os.str();
}

Solution parse_solution_report(std::string_view report, const MetricInstance& inst) {
    Solution sol;
    bool have_total = false;
    std::istringstream in{std::string(report)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "route") {
            int index = 0;
            std::string cost_key, customers_key;
            double cost = 0.0;
            if (!(ls >> index >> cost_key >> cost >> customers_key) || cost_key != "cost" ||
                customers_key != "customers")
                throw ParseError("solution report line " + std::to_string(line_no) +
                                 ": malformed route line");
            Route r;
            r.cost = cost;
            std::string tok;
            while (ls >> tok) {
                if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
                    throw ParseError("solution report line " + std::to_string(line_no) +
                                     ": malformed customer token '" + tok + "'");
                ServedCustomer sc;
                sc.customer = std::stoi(tok.substr(0, tok.size() - 1));
                if (sc.customer < 0 || sc.customer >= inst.customer_count())
                    throw ParseError("solution report line " + std::to_string(line_no) +
                                     ": customer index out of range");
                sc.dir = tok.back() == '+' ? Orientation::forward : Orientation::reversed;
                r.served.push_back(sc);
            }
            sol.routes.push_back(std::move(r));
        } else if (key == "total_cost") {
            ls >> sol.total_cost;
            have_total = true;
        }
    }
    if (!have_total) throw ParseError("solution report has no total_cost line");
    return sol;
}

std::string format_bounds_report(const AnalysisReport& rep) {
    std::ostringstream os;
    os << "m " << rep.m << "\n";
    os << "capacity " << rep.k << "\n";
    os << "delta " << fmt_num(rep.delta_total) << "\n";
    os << "delta_lower_bound " << fmt_num(rep.k > 0 ? 2.0 * rep.delta_total / rep.k : 0.0) << "\n";
    os << "customer_cost " << fmt_num(rep.customer_cost) << "\n";
    os << "mst " << fmt_num(rep.mst) << "\n";
    os << "h1_cost " << fmt_num(rep.h1_cost) << "\n";
    os << "h2_cost " << fmt_num(rep.h2_cost) << "\n";
    os << "matching_cost " << fmt_num(rep.matching_cost) << "\n";
    os << "connector_cost " << fmt_num(rep.connector_cost) << "\n";
    os << "alg_candidates " << fmt_num(rep.alg_candidates) << "\n";
    os << "alg_dp " << fmt_num(rep.alg_dp) << "\n";
    if (rep.hstar) os << "rpp_optimal " << fmt_num(*rep.hstar) << "\n";
    if (rep.opt) os << "opt " << fmt_num(*rep.opt) << "\n";
    if (rep.ratio) os << "ratio " << fmt_num(*rep.ratio) << "\n";
    for (const BoundCheck& c : rep.checks)
        os << "check " << c.name << " lhs " << fmt_num(c.lhs) << " rhs " << fmt_num(c.rhs) << " "
           << (c.holds ? "ok" : "VIOLATION") << "\n";
    os << "share_routes odd " << rep.odd_share_routes << " even " << rep.even_share_routes
       << " degenerate " << rep.degenerate_share_routes << "\n";
    for (const std::string& v : rep.violations) os << "violation " << v << "\n";
    os << "violations " << rep.violations.size() << "\n";
    return os.str();
}

std::string format_sweep_report(const SweepReport& rep) {
    std::ostringstream os;
    os << "trials " << rep.trials << "\n";
    os << "checks_evaluated " << rep.checks_evaluated << "\n";
    os << "share_routes odd " << rep.odd_share_routes << " even " << rep.even_share_routes
       << " degenerate " << rep.degenerate_share_routes << "\n";
    for (const SweepViolation& v : rep.violations)
        os << "violation trial " << v.trial << " " << v.message << "\n";
    os << "violations " << rep.violations.size() << "\n";
    return os.str();
}

}  // namespace carp
