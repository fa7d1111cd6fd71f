#pragma once

#include <cstdint>
#include <vector>

#include "kadj/arrangement.hpp"
#include "kadj/grassmann.hpp"
#include "kadj/poly.hpp"

namespace kadj {

// Matroid realized by a rational vector configuration: ground set [m],
// element i represented by column i in F^dim. Rank of a subset is the rank
// of its columns. Ground sets are capped at 62 so subsets fit in a word.
struct VectorMatroid {
    int ground_size = 0;
    int dim = 0;
    std::vector<std::vector<Rational>> columns;
    int rank_full = 0;

    static VectorMatroid from_columns(std::vector<std::vector<Rational>> cols, int dim);

    int rank(std::uint64_t subset_mask) const;
    int rank(const std::vector<int>& subset) const;

    std::vector<int> loops() const;
    std::vector<std::vector<int>> parallel_classes() const;
};

// Columns are u.basis * alpha_i^T: the rank of any column subset equals the
// dimension of the span of the projections of the normals into U, so no
// orthogonal projection is needed. Loops are exactly the hyperplanes
// containing U.
VectorMatroid matroid_of_restriction(const Arrangement& a, const Subspace& u);

// All subsets of full rank and full size, ascending mask order.
std::vector<std::uint64_t> bases(const VectorMatroid& m);

// I_i = number of independent i-subsets, i = 0..rank.
std::vector<long long> independence_numbers(const VectorMatroid& m);

// Minimal dependent sets, enumerated by increasing cardinality; loops appear
// as singletons.
std::vector<std::uint64_t> circuits(const VectorMatroid& m);

// A total order on the ground set: order[p] is the element with priority p
// (the maximum of a set is the element with the largest priority).
std::vector<int> natural_order(int m);

// {C \ max(C) : C circuit}, duplicates removed. A loop contributes the empty
// set, which then annihilates every NBC count.
std::vector<std::uint64_t> broken_circuits(const VectorMatroid& m, const std::vector<int>& order);

// Number of subsets of each size 0..rank containing no broken circuit.
std::vector<long long> nbc_counts(const VectorMatroid& m, const std::vector<int>& order);

// Lattice of closed sets, graded by rank, with Mobius values from the
// closure of the empty set.
struct MatroidLattice {
    std::vector<std::uint64_t> flats; // sorted by rank, then ascending mask
    std::vector<int> rank_of_flat;
    std::vector<Integer> mobius;
    std::vector<std::vector<int>> by_rank;
};
MatroidLattice flats_lattice(const VectorMatroid& m);

// chi(t) = sum over lattice flats of mu * t^(rank - rank(x)). With loops the
// lattice-based polynomial is still nonzero; the NBC-based one vanishes and
// is reported separately in MatroidInvariants.
IntPoly characteristic_polynomial_matroid(const VectorMatroid& m);

// w_i = coefficient of t^(rank-i) of the lattice-based chi.
std::vector<Integer> whitney_numbers(const VectorMatroid& m);

// Equality as matroids: identical ground size and identical basis sets.
bool matroid_equal(const VectorMatroid& a, const VectorMatroid& b);

struct MatroidInvariants {
    int rank = 0;
    std::vector<long long> independence_numbers; // I_0..I_k
    std::vector<Integer> whitney;                // w_0..w_k, lattice-based
    IntPoly char_poly;                           // lattice-based
    IntPoly nbc_poly;                            // sum_i (-1)^i nbc_i t^(k-i)
    std::vector<long long> nbc;                  // natural-order NBC counts
    std::vector<int> loops;
    std::vector<std::vector<int>> parallel_classes;
    long long bases_count = 0;
};
MatroidInvariants compute_invariants(const VectorMatroid& m);

} // namespace kadj
