#pragma once

#include <vector>

#include "necgraph/graph.hpp"

namespace necgraph {

// Exact isomorphism test by backtracking over adjacency-preserving
// bijections with degree pruning. Deliberately guarded at order 12: the
// intended inputs are pattern catalogs and desk-scale certificates, and the
// guard turns an accidental large input into an error instead of a hang.
bool is_isomorphic_small(const Graph& g, const Graph& h);

namespace detail {

// Unguarded colored core shared by is_isomorphic_small and the incidence
// structure reduction. A bijection must preserve colors; null means uniform.
bool isomorphic_core(const Graph& g, const Graph& h, const std::vector<int>* g_colors,
                     const std::vector<int>* h_colors);

}  // namespace detail

}  // namespace necgraph
