#pragma once

#include <cstdint>
#include <vector>

#include "kadj/adjoint.hpp"

namespace kadj {

// A k-dimensional subspace of F^n, held by its canonical RREF basis so that
// equality of subspaces is equality of matrices.
struct Subspace {
    int k = 0;
    int n = 0;
    QMatrix basis; // k x n, full row rank, RREF

    static Subspace from_rows(const QMatrix& rows);

    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

// Projectively normalized vector of all maximal minors, indexed by
// lex-ordered k-subsets of [n].
struct PluckerVector {
    KSubsetIndex idx;
    std::vector<Rational> coords;
};

// Raw maximal minors of an arbitrary full-row-rank matrix (no
// canonicalization), lex order.
std::vector<Rational> plucker_minors(const QMatrix& m);

PluckerVector plucker(const Subspace& u);

// The flat of the adjoint lattice whose relative interior contains the
// Plucker vector of u; returns an index into adj_lat.flats.
int locate_stratum(const Subspace& u, const AdjointArrangement& adj,
                   const IntersectionLattice& adj_lat);

// Rank-k flats X with U + X = F^n (direct sum); each membership decision is
// cross-checked against the vanishing of the pairing with the adjoint
// coefficients of X.
std::vector<int> l_lower(const Subspace& u, const IntersectionLattice& lat);

// Complement within the rank-k flats: those meeting U nontrivially.
std::vector<int> l_upper(const Subspace& u, const IntersectionLattice& lat);

// Jump positions {i : dim(U n F_i) > dim(U n F_{i-1})}, always k of them;
// intersection dimensions are computed as dim U + dim F_i - dim(U + F_i).
std::vector<int> schubert_symbol(const Subspace& u, const IntersectionLattice& lat,
                                 const Flag& flag);

// One Schubert symbol per enumerated maximal chain; equality of signatures
// defines the refined Schubert stratum of u.
struct SchubertSignature {
    std::vector<std::vector<int>> per_chain;

    bool operator==(const SchubertSignature& o) const { return per_chain == o.per_chain; }
    bool operator<(const SchubertSignature& o) const { return per_chain < o.per_chain; }
};

SchubertSignature refined_signature(const Subspace& u, const IntersectionLattice& lat,
                                    const std::vector<Flag>& chains);

// Seeded k x n integer matrix with entries in [-bound, bound], resampled
// until it has rank k (at most 1000 attempts).
Subspace random_subspace(int k, int n, long long bound, std::uint64_t seed);

} // namespace kadj
