#pragma once

#include <optional>
#include <string>

#include "necgraph/graph.hpp"
#include "necgraph/params.hpp"

namespace necgraph {

enum class SrgFailure {
    none,
    complete_or_empty,
    not_regular,
    lambda_not_constant,
    mu_not_constant,
};

const char* srg_failure_name(SrgFailure f);

struct SrgResult {
    std::optional<SrgParams> params;
    SrgFailure failure = SrgFailure::none;

    // mu == 0 means a disjoint union of cliques; callers that need a
    // connected graph must check this themselves.
    bool mu_zero() const { return params.has_value() && params->mu == 0; }
};

// Tests strong regularity by direct counting: constant degree, constant
// common-neighbour count over edges, constant common-neighbour count over
// non-edges. Complete and empty graphs are rejected (one of the two counts
// has no defining pair).
SrgResult srg_params(const Graph& g);

// (v - k - 1) mu == k (k - lambda - 1), the standard feasibility identity.
bool check_param_identity(const SrgParams& p);

// Parameters of the complement graph. Throws std::domain_error if the
// input parameters cannot come from a graph (a derived count is negative).
SrgParams complement_params(const SrgParams& p);

struct TwoEcResult {
    bool holds = false;
    bool graph_connected = false;
    bool graph_has_triangle = false;
    bool complement_connected = false;
    bool complement_has_triangle = false;

    // Empty when holds; otherwise names the first failing condition.
    std::string reason() const;
};

// For a strongly regular graph, 2-existential closure is equivalent to:
// the graph and its complement are both connected and both contain a
// triangle. Throws std::invalid_argument if g is not strongly regular.
TwoEcResult is_2ec_srg(const Graph& g);

// Strongly regular parameters of the collinearity graph of a pg(s,t,alpha):
//   v = (s+1)(st+alpha)/alpha, k = s(t+1),
//   lambda = (s-1) + t(alpha-1), mu = (t+1)alpha.
// Throws std::domain_error when alpha does not divide (s+1)(st+alpha) or
// when alpha == s+1 (the collinearity graph is complete, not SRG).
SrgParams pg_point_graph_params(const PgParams& pg);

// Searches for pg(s,t,alpha) whose collinearity graph would have exactly
// these parameters. Candidate t+1 runs over the divisors of k in ascending
// order; the first consistent triple wins. Absent means the parameters are
// not pseudo-geometric.
std::optional<PgParams> pseudo_geometric_inverse(const SrgParams& p);

// Whether the complement of the collinearity graph of a pg(s,t,alpha) is
// triangle-free, decided on parameters alone:
//   (s-alpha)^2 t + (t-alpha) s + alpha(alpha-1) == 0.
// Throws std::invalid_argument on degenerate parameters.
bool complement_triangle_free_geo(const PgParams& pg);

}  // namespace necgraph
