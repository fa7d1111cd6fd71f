#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "kadj/matrix.hpp"
#include "kadj/poly.hpp"

namespace kadj {

// A linear hyperplane through the origin, stored as a primitive integral
// normal (denominators cleared, gcd 1, first nonzero entry positive).
struct Hyperplane {
    std::vector<Rational> normal;

    bool operator==(const Hyperplane& o) const { return normal == o.normal; }
    bool operator<(const Hyperplane& o) const { return normal < o.normal; }
};

struct Arrangement {
    std::size_t dim = 0;
    std::vector<Hyperplane> hyperplanes;
    bool essential = false;

    // Normalizes and validates; duplicates (after normalization) are
    // rejected. Essentiality is computed; strictness is up to the caller.
    Arrangement(std::size_t n, const std::vector<std::vector<Rational>>& normals);
    Arrangement() = default;

    std::size_t size() const { return hyperplanes.size(); }
    QMatrix normal_matrix() const;
};

// Strict builder: refuses non-essential arrangements unless the caller opts
// in (used for intermediate products and adjoints of reducible factors).
Arrangement build_arrangement(std::size_t dim, const std::vector<std::vector<Rational>>& normals,
                              bool allow_non_essential = false);

// Boolean arrangement {x_i = 0 : i in [n]}.
Arrangement boolean_arrangement(std::size_t n);

// A subspace arising as an intersection of hyperplanes: the canonical RREF
// basis of the subspace plus the closed set of hyperplanes containing it.
struct Flat {
    std::vector<int> contains; // 0-based hyperplane indices, sorted
    QMatrix basis;             // (n - rank) x n canonical RREF
    int rank = 0;              // n - dim(subspace)
};

struct IntersectionLattice {
    Arrangement arrangement;
    std::vector<Flat> flats;               // sorted by rank, then descending basis lex
    std::vector<std::vector<int>> by_rank; // indices into flats, size dim+1
    std::vector<std::pair<int, int>> hasse_edges; // (lower, upper) covering pairs
    std::vector<Integer> mobius;           // mu(bottom, X) per flat
    int top_rank = 0;                      // = dim iff essential

    std::size_t dim() const { return arrangement.dim; }

    // Partial order (reverse inclusion of subspaces): x <= y iff the closed
    // contains-sets are nested.
    bool leq(int x, int y) const;

    // Index of the flat with the given canonical subspace basis.
    int index_of(const QMatrix& canonical_basis) const;

    std::map<std::vector<Rational>, int> index_by_basis;
};

// Breadth-first closure of all intersections, with Hasse edges and Mobius
// values. Accepts any central arrangement (the adjoint of an essential
// arrangement need not be essential).
IntersectionLattice build_lattice(const Arrangement& a);

// All flats of rank exactly k (indices into l.flats).
const std::vector<int>& rank_k_flats(const IntersectionLattice& l, int k);

// The unique flat whose relative interior contains the point: the
// intersection of all hyperplanes through it.
int locate_flat(const IntersectionLattice& l, const std::vector<Rational>& point);

// Restriction A|_U expressed in coordinates of the given basis of U.
struct RestrictionResult {
    Arrangement restricted;
    // Per original hyperplane: 0-based index into restricted.hyperplanes, or
    // -1 when the hyperplane contains U.
    std::vector<int> index_map;
};
RestrictionResult restriction(const Arrangement& a, const QMatrix& u_basis);

// Product arrangement in dimension a.dim + b.dim (normals zero-padded).
Arrangement product(const Arrangement& a, const Arrangement& b);

// A complete flag of subspaces F_0 c F_1 c ... c F_n with dim F_i = i,
// obtained from a maximal chain of the lattice (rank r flat becomes F_{n-r}).
struct Flag {
    std::vector<int> flat_by_dim; // flat index of F_i at position i, size n+1
};

// Depth-first enumeration of all maximal chains, deterministic order.
std::vector<Flag> maximal_chains(const IntersectionLattice& l, std::size_t cap = 10000);

// chi(t) = sum_X mu(bottom, X) t^(n - rank X).
IntPoly characteristic_polynomial(const IntersectionLattice& l);

} // namespace kadj
