#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kadj/arrangement.hpp"

namespace kadj {

// Lexicographically ordered k-subsets of [n], 1-based; these index the
// coordinates of the ambient space of the k-adjoint and of Plucker vectors.
struct KSubsetIndex {
    int n = 0;
    int k = 0;
    std::vector<std::vector<int>> subsets;

    KSubsetIndex() = default;
    KSubsetIndex(int n, int k);

    std::size_t size() const { return subsets.size(); }
    int position(const std::vector<int>& subset) const;

    // 0-based column complement of the 1-based subset, ascending.
    std::vector<std::size_t> complement_cols(const std::vector<int>& subset) const;

private:
    std::map<std::vector<int>, int> pos_;
};

struct AdjointHyperplane {
    std::vector<Rational> raw;        // signed complementary minors of the canonical
                                      // representative; representative-dependent
    std::vector<Rational> normalized; // primitive projective representative
    int source_flat = -1;             // index into the source lattice
};

struct AdjointArrangement {
    int n = 0;
    int k = 0;
    KSubsetIndex index;
    Arrangement base;                 // arrangement in dimension C(n,k)
    std::vector<AdjointHyperplane> hyperplanes; // one per rank-k flat, lattice order
};

// Signed complementary-minor coefficient vector of a rank-k flat: for each
// k-subset I in lex order, (-1)^(k(k+1)/2 + sum I) * (minor of the flat's
// basis on columns [n] \ I). Defined for 0 <= k < n.
std::vector<Rational> adjoint_coefficients(const Flat& x, const KSubsetIndex& idx);

// One hyperplane per rank-k flat; k = n yields the empty arrangement in
// dimension 1 and k = 0 the single hyperplane {x = 0} in dimension 1.
AdjointArrangement k_adjoint(const Arrangement& a, const IntersectionLattice& lat, int k);
AdjointArrangement k_adjoint(const Arrangement& a, int k);

// Tensor product: one hyperplane per pair (H, K) with coefficient a_i * b_j
// on coordinate z_{i,j}, flattened row-major (i * b.dim + j).
Arrangement tensor(const Arrangement& a, const Arrangement& b);

// Right-hand side of the k-adjoint product formula: the product over i of
// tensor(a^(i), b^(k-i)) with blocks ordered by increasing i. A full-rank
// factor (i = dim) enters as the origin hyperplane {x = 0} in dimension 1,
// the value the signed-minor formula assigns to the zero subspace; with the
// bare empty arrangement in its place the formula would drop every block
// containing it and the identity with k_adjoint(product(a,b), k) would fail.
Arrangement product_adjoint_rhs(const Arrangement& a, const Arrangement& b, int k);

// Coordinate bijection C([n+m], k) <-> disjoint union of C([n], i) x C([m], k-i):
// J maps to (J intersect [n], (J \ [n]) - n).
struct ProductIndexBijection {
    int n = 0, m = 0, k = 0;
    KSubsetIndex joint; // C([n+m], k)

    ProductIndexBijection(int n, int m, int k);

    std::pair<std::vector<int>, std::vector<int>> split(const std::vector<int>& j_subset) const;
    std::vector<int> join(const std::vector<int>& i1, const std::vector<int>& i2) const;

    // Position of split(J) in the block coordinate layout of product_adjoint_rhs.
    std::size_t block_position(const std::vector<int>& j_subset) const;

    // Reindex a vector over C([n+m],k) into block coordinates.
    std::vector<Rational> to_block_coordinates(const std::vector<Rational>& v) const;

private:
    std::vector<KSubsetIndex> left_;   // C([n], i) for i = 0..k (empty when i > n)
    std::vector<KSubsetIndex> right_;  // C([m], k-i)
    std::vector<std::size_t> offsets_; // block start positions
    std::size_t total_ = 0;
};

// Pairing sum_I a_I(X) Delta_I(U) over k-subsets, computed with the raw
// coefficients of the flat's stored representative; equals (and is checked
// against) the determinant of the stacked matrix [u_basis; x.basis].
Rational laplace_pairing(const QMatrix& u_basis, const Flat& x);

} // namespace kadj
