#pragma once

#include <optional>
#include <string>
#include <vector>

#include "necgraph/params.hpp"

namespace necgraph {

// One necessary condition for n-existential closure, evaluated on
// parameters. slack is the margin of the defining inequality; negative
// means violated. Inapplicable entries keep satisfied == true.
struct BoundEntry {
    std::string name;
    bool applicable = false;
    bool satisfied = true;
    long long slack = 0;
};

// Ceiling on n from counting alone: a collinearity graph of a pg(s,t,alpha)
// is never n-e.c. for n above min(s-alpha+1, t+1, alpha+1).
int basic_nec_cap(const PgParams& pg);

// For a strongly regular graph, 3-e.c. forces
//   mu (k - lambda - 3) >= v - 2k + mu - 2
// (a vertex pair must find enough common non-neighbors).
BoundEntry srg_3ec_test(const SrgParams& p);

// Geometric sharpening for collinearity graphs, everything scaled by alpha
// to stay in integers. For s >= 2alpha-1:
//   alpha^2 (t^2-1)(s-2alpha+2) >= (s+1)(st+alpha) + alpha(alpha-2s)(t+1) - 2alpha
// and with (s-2alpha+2) weakened to (s-alpha+1) for smaller s. Inapplicable
// when t == 1.
BoundEntry geometric_3ec_test(const PgParams& pg);

// Closed integer interval, empty when lo > hi.
struct SRange {
    int lo = 0;
    int hi = -1;
    bool empty() const { return lo > hi; }
};

// Orders s where a net pg(s,t,t) survives the geometric 3-e.c. condition:
//   s^2 - (t^3+t)s + 2t^4 - 2t^3 - t^2 + 3t - 1 <= 0.
// Requires t >= 2.
SRange net_3ec_polynomial(int t);

// Same for dual designs pg(s,t,t+1):
//   s^2 - (t^3+2t^2+2t)s + 2t^4 + 4t^3 + t^2 - t <= 0.
// Requires t >= 2.
SRange dual_design_3ec_polynomial(int t);

// Triple systems exist exactly for orders 1 or 3 mod 6. Guarded to v >= 7;
// smaller admissible orders give degenerate geometries.
bool sts_admissible(int v);

// Parameter screening verdict: every bound evaluated on pg(s,t,alpha), plus
// the largest n not yet excluded. A violated 3-e.c. bound caps n at 2;
// failing the 2-e.c. conditions caps it at 1.
struct BoundReport {
    PgParams pg;
    std::optional<SrgParams> srg;  // collinearity graph parameters, when integral
    int basic_cap = 0;
    std::vector<BoundEntry> entries;  // 2ec, srg-3ec, geo-3ec, net-poly, dual-poly
    int n_max_possible = 0;

    std::string to_text() const;
    std::string to_kv() const;
};

BoundReport screen(const PgParams& pg);

}  // namespace necgraph
