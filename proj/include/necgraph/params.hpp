#pragma once

#include <string>
#include <string_view>

namespace necgraph {

// Strongly regular parameter tuple (v, k, lambda, mu): v vertices, degree k,
// lambda common neighbors across an edge, mu across a non-edge.
struct SrgParams {
    long long v = 0;
    long long k = 0;
    long long lambda = 0;
    long long mu = 0;

    bool operator==(const SrgParams&) const = default;

    std::string to_string() const;                  // "v,k,lambda,mu"
    static SrgParams parse(std::string_view text);  // throws std::invalid_argument
};

// Partial geometry parameter triple (s, t, alpha): lines carry s+1 points,
// points lie on t+1 lines, and an external point sees a line through exactly
// alpha of its own lines.
struct PgParams {
    long long s = 0;
    long long t = 0;
    long long alpha = 0;

    bool operator==(const PgParams&) const = default;

    // s >= 2, t >= 1, 1 <= alpha <= min(s,t)+1
    bool nondegenerate() const;

    std::string to_string() const;  // "s,t,alpha"
    static PgParams parse(std::string_view text);
};

}  // namespace necgraph
