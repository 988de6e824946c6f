#include "necgraph/srg.hpp"

#include <stdexcept>
#include <vector>

#include "necgraph/vertex_set.hpp"

namespace necgraph {

namespace {

int common_neighbors(const Graph& g, int x, int y) {
    return g.neighborhood(x).intersection_count(g.neighborhood(y));
}

bool is_connected(const Graph& g) {
    const int v = g.order();
    if (v == 0) return true;
    std::vector<char> seen(static_cast<std::size_t>(v), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        const VertexSet& nb = g.neighborhood(x);
        for (int y = nb.first(); y >= 0; y = nb.next(y)) {
            if (!seen[static_cast<std::size_t>(y)]) {
                seen[static_cast<std::size_t>(y)] = 1;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == v;
}

bool has_triangle(const Graph& g) {
    for (auto [x, y] : g.edges())
        if (common_neighbors(g, x, y) > 0) return true;
    return false;
}

}  // namespace

const char* srg_failure_name(SrgFailure f) {
    switch (f) {
        case SrgFailure::none: return "none";
        case SrgFailure::complete_or_empty: return "complete-or-empty";
        case SrgFailure::not_regular: return "not-regular";
        case SrgFailure::lambda_not_constant: return "lambda-not-constant";
        case SrgFailure::mu_not_constant: return "mu-not-constant";
    }
    return "?";
}

SrgResult srg_params(const Graph& g) {
    const int v = g.order();
    const long long e = g.edge_count();
    if (e == 0 || e == static_cast<long long>(v) * (v - 1) / 2)
        return {std::nullopt, SrgFailure::complete_or_empty};

    const int k = g.degree(0);
    for (int x = 1; x < v; ++x)
        if (g.degree(x) != k) return {std::nullopt, SrgFailure::not_regular};

    int lambda = -1;
    int mu = -1;
    for (int x = 0; x < v; ++x) {
        for (int y = x + 1; y < v; ++y) {
            const int c = common_neighbors(g, x, y);
            int& slot = g.adjacent(x, y) ? lambda : mu;
            if (slot == -1) {
                slot = c;
            } else if (slot != c) {
                return {std::nullopt,
                        g.adjacent(x, y) ? SrgFailure::lambda_not_constant
                                         : SrgFailure::mu_not_constant};
            }
        }
    }
    return {SrgParams{v, k, lambda, mu}, SrgFailure::none};
}

bool check_param_identity(const SrgParams& p) {
    const long long lhs = static_cast<long long>(p.v - p.k - 1) * p.mu;
    const long long rhs = static_cast<long long>(p.k) * (p.k - p.lambda - 1);
    return lhs == rhs;
}

SrgParams complement_params(const SrgParams& p) {
    const SrgParams c{p.v, p.v - p.k - 1, p.v - 2 * p.k + p.mu - 2,
                      p.v - 2 * p.k + p.lambda};
    if (c.k < 0 || c.lambda < 0 || c.mu < 0)
        throw std::domain_error("complement parameters are negative: " + c.to_string());
    return c;
}

std::string TwoEcResult::reason() const {
    if (holds) return "";
    if (!graph_connected) return "graph-disconnected";
    if (!complement_connected) return "complement-disconnected";
    if (!graph_has_triangle) return "graph-triangle-free";
    return "complement-triangle-free";
}

TwoEcResult is_2ec_srg(const Graph& g) {
    const SrgResult sr = srg_params(g);
    if (!sr.params.has_value())
        throw std::invalid_argument(std::string("graph is not strongly regular: ") +
                                    srg_failure_name(sr.failure));
    const Graph co = complement(g);
    TwoEcResult r;
    r.graph_connected = is_connected(g);
    r.graph_has_triangle = has_triangle(g);
    r.complement_connected = is_connected(co);
    r.complement_has_triangle = has_triangle(co);
    r.holds = r.graph_connected && r.graph_has_triangle && r.complement_connected &&
              r.complement_has_triangle;
    return r;
}

SrgParams pg_point_graph_params(const PgParams& pg) {
    if (!pg.nondegenerate())
        throw std::invalid_argument("degenerate geometry parameters: " + pg.to_string());
    if (pg.alpha == pg.s + 1)
        throw std::domain_error("collinearity graph of " + pg.to_string() +
                                " is complete");
    const long long num =
        static_cast<long long>(pg.s + 1) * (static_cast<long long>(pg.s) * pg.t + pg.alpha);
    if (num % pg.alpha != 0)
        throw std::domain_error("vertex count of " + pg.to_string() +
                                " is not integral");
    return SrgParams{static_cast<int>(num / pg.alpha), pg.s * (pg.t + 1),
                     (pg.s - 1) + pg.t * (pg.alpha - 1), (pg.t + 1) * pg.alpha};
}

std::optional<PgParams> pseudo_geometric_inverse(const SrgParams& p) {
    if (p.k <= 0) return std::nullopt;
    for (int d = 2; d <= p.k; ++d) {
        if (p.k % d != 0) continue;
        const int t = d - 1;
        const int s = p.k / d;
        if (s < 2) continue;
        if (p.mu % d != 0) continue;
        const int alpha = p.mu / d;
        const PgParams cand{s, t, alpha};
        if (!cand.nondegenerate() || alpha == s + 1) continue;
        const long long num =
            static_cast<long long>(s + 1) * (static_cast<long long>(s) * t + alpha);
        if (num % alpha != 0) continue;
        if (num / alpha != p.v) continue;
        if ((s - 1) + t * (alpha - 1) != p.lambda) continue;
        return cand;
    }
    return std::nullopt;
}

bool complement_triangle_free_geo(const PgParams& pg) {
    if (!pg.nondegenerate())
        throw std::invalid_argument("degenerate geometry parameters: " + pg.to_string());
    const long long s = pg.s, t = pg.t, a = pg.alpha;
    return (s - a) * (s - a) * t + (t - a) * s + a * (a - 1) == 0;
}

}  // namespace necgraph
