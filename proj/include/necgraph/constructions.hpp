#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "necgraph/geometry.hpp"
#include "necgraph/graph.hpp"

namespace necgraph {

// Symplectic graph over GF(2): vertices are the nonzero vectors of
// GF(2)^{2r} (vertex i is the vector with value i+1), adjacent when the
// symplectic form sum x_{2i} y_{2i+1} + x_{2i+1} y_{2i} is 1. Strongly
// regular with parameters (2^{2r}-1, 2^{2r-1}, 2^{2r-2}, 2^{2r-2}) for
// r >= 2; r = 1 gives K3. Guarded to 1 <= r <= 6.
Graph symplectic_graph(int r);
std::vector<std::string> symplectic_labels(int r);

// Prime power field presentation: GF(p^k) as polynomials modulo a monic
// irreducible of degree k, coefficients little-endian. k is capped at 3 and
// p^k at 65536.
struct FieldSpec {
    int p = 0;
    int k = 0;
    std::vector<int> modulus;

    // Validates primality of p, the coefficient range, monicity, and (for
    // k >= 2) irreducibility by exhaustive root search.
    static FieldSpec make(int p, int k, std::vector<int> modulus);

    int q() const;
};

// Conventional modulus for the order-q field: x for prime q, x^2 - n with n
// the least quadratic non-residue for q = p^2, and the lexicographically
// first root-free monic cubic (by coefficients c2, c1, c0) for q = p^3.
// Requires q = 1 mod 4, the Paley condition.
FieldSpec paley_default(int q);

// Field arithmetic on elements 0..q-1, encoded base p, little-endian digits.
class FiniteField {
  public:
    explicit FiniteField(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    int q() const { return q_; }

    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int mul(int a, int b) const;

    // Whether a is a nonzero square. is_square(0) is false.
    bool is_square(int a) const;

    // Polynomial rendering, e.g. "2x^2+x+1"; plain decimal when k == 1.
    std::string element_name(int a) const;

  private:
    std::vector<int> to_digits(int a) const;
    int from_digits(const std::vector<int>& d) const;

    FieldSpec spec_;
    int q_ = 0;
    std::vector<char> square_;
};

// Paley graph on GF(q), q = 1 mod 4: field elements are vertices, adjacent
// when the difference is a nonzero square.
Graph paley_graph(const FieldSpec& spec);
std::vector<std::string> paley_labels(const FieldSpec& spec);

// Finite group presentation for Cayley tables. Products of cyclic groups,
// plus the two non-abelian groups of order 8. Order is capped at 64.
struct GroupSpec {
    enum class Kind { cyclic_product, dihedral4, quaternion8 };

    Kind kind = Kind::cyclic_product;
    std::vector<int> orders;  // cyclic factor orders, first factor least significant

    static GroupSpec cyclic(int n);
    static GroupSpec product(std::vector<int> orders);
    static GroupSpec dihedral4();
    static GroupSpec quaternion8();

    // Names: "z8", "z2^3", "z4xz2", "d4", "q8". Products use 'x', repeated
    // factors compress to '^'.
    static GroupSpec parse(std::string_view name);
    std::string name() const;

    int order() const;
};

// Multiplication table with the identity at index 0; table[a][b] = a*b.
// Cyclic products use mixed-radix digit addition; d4 and q8 are fixed
// tables. The result is a latin square, so it feeds latin_square_to_net.
std::vector<std::vector<int>> cayley_table(const GroupSpec& g);

// Triple system of order v = 3 mod 6 on points Z_m x {0,1,2}, m = v/3,
// point (i,c) at index i + c*m: the m blocks {(i,0),(i,1),(i,2)} and, for
// i < j and each class c, {(i,c),(j,c),((i+j)/2 mod m, c+1 mod 3)}.
SteinerTripleSystem bose_sts(int v);

// Kneser graph on the ten 2-subsets of {0..4} in lexicographic order,
// adjacent when disjoint.
Graph petersen();

// The pg(3,1,2) on ten points whose five lines pairwise meet in a point.
IncidenceStructure star_structure();

// Vertex label sets matching the constructions above.
std::vector<std::string> net_cell_labels(int n);
std::vector<std::string> sts_block_labels(const SteinerTripleSystem& sts);
std::vector<std::string> petersen_labels();

}  // namespace necgraph
