#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "necgraph/graph.hpp"

namespace necgraph {

// Number of vertices outside A and B adjacent to every vertex of A and to
// no vertex of B. A and B must be disjoint subsets of the graph's vertices;
// either may be empty.
int gamma(const Graph& g, const VertexSet& a, const VertexSet& b);

// Verdict for the n-e.c. property: every bipartition (A, B) of every
// n-subset admits an outside vertex adjacent to all of A and none of B.
//
// Enumeration order is part of the contract. n-subsets are scanned in
// lexicographic order; for each subset, bipartition masks run 0..2^n-1 with
// mask bit i placing the i-th subset element (ascending) in A. The witness
// is the first failing (subset, mask) in that order, independent of the
// worker count.
struct EcReport {
    int n = 0;
    bool holds = false;
    std::optional<std::pair<VertexSet, VertexSet>> witness;  // (A, B), set iff !holds

    std::string to_text() const;
    std::string to_kv() const;
};

EcReport is_n_ec(const Graph& g, int n, int jobs = 1);

// Reference oracle: same enumeration order, plain adjacency-matrix loops and
// no bitset folding, so the two implementations share no machinery beyond
// the Graph accessors. Agreement including witnesses is asserted in tests.
EcReport naive_is_n_ec(const Graph& g, int n);

// Largest n <= cap for which is_n_ec holds (0 if none). Values n >= order
// cannot hold and are not probed.
int max_ec(const Graph& g, int cap, int jobs = 1);

// All isomorphism classes of graphs on r vertices, 1 <= r <= 5, built by
// enumerating every labeled graph and deduplicating up to isomorphism. Each
// class is represented by its least edge mask; class counts are 1, 2, 4,
// 11, 34.
const std::vector<Graph>& graph_catalog(int r);

// Induced-subgraph embedding tests (exact adjacency match on mapped pairs).
bool embeds_induced(const Graph& host, const Graph& pattern);
bool embeds_induced_anchored(const Graph& host, const Graph& pattern, int anchor);

struct FullnessReport {
    int r = 0;
    bool holds = false;
    std::optional<Graph> missing;  // first catalog class with no induced embedding

    std::string to_text() const;
    std::string to_kv() const;
};

// Does the graph contain every r-vertex graph as an induced subgraph?
FullnessReport is_r_full(const Graph& g, int r);

}  // namespace necgraph
