#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "necgraph/graph.hpp"
#include "necgraph/params.hpp"

namespace necgraph {

// A finite point-line incidence structure. Lines are stored as ascending
// point lists; the order of the lines themselves is preserved from input,
// so dual(dual(s)) reproduces s exactly.
class IncidenceStructure {
  public:
    // Validates: point indices in range, every line has at least two
    // distinct points, no two lines have the same point set. Sorts each
    // line, keeps the line list order. Throws std::invalid_argument.
    static IncidenceStructure make(int points, std::vector<std::vector<int>> lines);

    int points() const { return points_; }
    int line_count() const { return static_cast<int>(lines_.size()); }
    const std::vector<int>& line(int i) const { return lines_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::vector<int>>& lines() const { return lines_; }

    bool operator==(const IncidenceStructure&) const = default;

  private:
    IncidenceStructure(int points, std::vector<std::vector<int>> lines)
        : points_(points), lines_(std::move(lines)) {}

    int points_ = 0;
    std::vector<std::vector<int>> lines_;
};

// Partial geometry axioms, in the order they are checked.
enum class PgAxiom {
    partial_linear,   // two points lie on at most one common line
    line_size,        // every line has s+1 points
    point_degree,     // every point lies on t+1 lines
    alpha_constant,   // every non-incident point sees alpha points per line
    nondegenerate,    // s >= 2, t >= 1, 1 <= alpha <= min(s,t)+1
};

const char* pg_axiom_name(PgAxiom a);

struct PgVerification {
    std::optional<PgParams> params;   // set exactly when every axiom holds
    std::optional<PgAxiom> failed;    // first failing axiom otherwise
    std::string detail;               // human-readable witness of the failure
};

PgVerification verify_partial_geometry(const IncidenceStructure& s);

// Special parameter families. A single geometry can lie in several; `proper`
// is reported exactly when none of the others apply.
enum class PgClass {
    design,                   // alpha == s+1
    dual_design,              // alpha == t+1
    net,                      // alpha == t
    transversal_design,       // alpha == s
    generalized_quadrangle,   // alpha == 1
    proper,
};

const char* pg_class_name(PgClass c);

// All classes the parameters fall in. Throws std::invalid_argument on
// degenerate parameters.
std::set<PgClass> classify(const PgParams& p);

// Collinearity graph: one vertex per point, adjacent iff some line carries
// both. Throws std::invalid_argument if s is not a partial geometry and
// std::domain_error when alpha == s+1 (the graph is complete and carries no
// geometric information).
Graph point_graph(const IncidenceStructure& s);

// Interchanges points and lines: dual point i is line i, dual line p lists
// the lines through point p. Every point must lie on at least two lines.
IncidenceStructure dual(const IncidenceStructure& s);

// Order-n latin square, entries 0..n-1, each value once per row and column.
class LatinSquare {
  public:
    static LatinSquare make(std::vector<std::vector<int>> cells);

    int order() const { return static_cast<int>(cells_.size()); }
    int at(int row, int col) const {
        return cells_.at(static_cast<std::size_t>(row)).at(static_cast<std::size_t>(col));
    }
    const std::vector<std::vector<int>>& cells() const { return cells_; }

  private:
    explicit LatinSquare(std::vector<std::vector<int>> cells) : cells_(std::move(cells)) {}
    std::vector<std::vector<int>> cells_;
};

// Steiner triple system: 3-element blocks covering every point pair exactly
// once. Block order is preserved; points inside a block are sorted.
class SteinerTripleSystem {
  public:
    static SteinerTripleSystem make(int points, std::vector<std::vector<int>> triples);

    int points() const { return points_; }
    const std::vector<std::vector<int>>& triples() const { return triples_; }

  private:
    SteinerTripleSystem(int points, std::vector<std::vector<int>> triples)
        : points_(points), triples_(std::move(triples)) {}

    int points_ = 0;
    std::vector<std::vector<int>> triples_;
};

// The net of an order-n latin square (n >= 3): points are the n^2 cells
// (row*n + col), lines are the n rows, then the n columns, then the n
// symbol classes. Yields a pg(n-1, 2, 2).
IncidenceStructure latin_square_to_net(const LatinSquare& sq);

// Dual of the triple system viewed as a point-block structure: points are
// the blocks, lines are the pencils of blocks through each point. Yields a
// pg((v-3)/2, 2, 3).
IncidenceStructure sts_to_dual_geometry(const SteinerTripleSystem& sts);

// Splits the neighborhood of x into three equal cliques (the
// lexicographically first such partition) and tests whether the cross-clique
// edges close into transversal triangles: every edge between two of the
// cliques must lie in exactly one triangle through the third clique, and
// those triangles must be pairwise vertex-disjoint. Throws
// std::invalid_argument when deg(x) is not divisible by 3 and
// std::domain_error when no partition into three equal cliques exists.
bool triangle_partition_check(const Graph& g, int x);

// Incidence-preserving point/line bijection test, via the colored bipartite
// incidence graphs. Guarded to points + lines <= 60.
bool structures_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b);

// Text formats. Readers throw ParseError on any malformed or invalid input.
//
//   pg <points> <lines>   then one ascending point list per line
//   ls <n>                then n rows of n entries
//   sts <points>          then one ascending triple per line
std::string write_pg(const IncidenceStructure& s);
IncidenceStructure read_pg(std::string_view text);
std::string write_ls(const LatinSquare& sq);
LatinSquare read_ls(std::string_view text);
std::string write_sts(const SteinerTripleSystem& sts);
SteinerTripleSystem read_sts(std::string_view text);

}  // namespace necgraph
