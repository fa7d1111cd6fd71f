#pragma once

// Shared fixtures and independent oracles for the test suites. Oracles here
// deliberately recompute results through different routes than the library
// (cofactor expansion, subset enumeration, signed rank sums).

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "kadj/decompose.hpp"
#include "kadj/io.hpp"
#include "kadj/rng.hpp"

namespace kadj::testing {

inline Subspace sub(std::initializer_list<std::initializer_list<long long>> rows) {
    return Subspace::from_rows(QMatrix::of_ints(rows));
}

inline Arrangement arr(std::size_t dim,
                       std::initializer_list<std::initializer_list<long long>> normals) {
    std::vector<std::vector<Rational>> v;
    for (const auto& r : normals) {
        std::vector<Rational> row;
        for (long long x : r) row.emplace_back(x);
        v.push_back(std::move(row));
    }
    return build_arrangement(dim, v);
}

// Four hyperplanes in dimension 3, any three normals independent.
inline Arrangement a3() { return arr(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}); }

inline int find_flat(const IntersectionLattice& l, const QMatrix& spanning_rows) {
    return l.index_of(rref_basis(spanning_rows));
}

inline int find_flat(const IntersectionLattice& l,
                     std::initializer_list<std::initializer_list<long long>> rows) {
    return find_flat(l, QMatrix::of_ints(rows));
}

// Recursive cofactor expansion; determinant oracle for small matrices.
inline Rational cofactor_det(const QMatrix& m) {
    if (m.rows != m.cols) throw DimensionError("cofactor oracle needs a square matrix");
    const std::size_t n = m.rows;
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        QMatrix sm(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sm.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rational term = m.at(0, j) * cofactor_det(sm);
        d += (j % 2 == 0) ? term : -term;
    }
    return d;
}

// Flats by exhaustive subset enumeration: intersect every subset of
// hyperplanes and deduplicate by canonical basis. Independent of the
// breadth-first closure used by build_lattice.
inline std::map<int, std::set<std::vector<Rational>>> brute_force_flats(const Arrangement& a) {
    std::map<int, std::set<std::vector<Rational>>> by_rank;
    const int m = static_cast<int>(a.size());
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) rows.push_back(a.hyperplanes[static_cast<std::size_t>(i)].normal);
        QMatrix basis = rows.empty()
                            ? QMatrix::identity(a.dim)
                            : rref_basis(kernel_basis(QMatrix::from_rows(rows, a.dim)));
        by_rank[static_cast<int>(a.dim - basis.rows)].insert(basis.data);
    }
    return by_rank;
}

// Signed rank-sum characteristic polynomial oracle:
// chi(t) = sum over subsets S of hyperplanes of (-1)^|S| t^(n - rank S).
inline IntPoly charpoly_by_subset_ranks(const Arrangement& a) {
    const int m = static_cast<int>(a.size());
    std::vector<Integer> coeffs(a.dim + 1, Integer(0));
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<std::vector<Rational>> rows;
        int sz = 0;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1) {
                rows.push_back(a.hyperplanes[static_cast<std::size_t>(i)].normal);
                ++sz;
            }
        std::size_t r = rows.empty() ? 0 : rank_of(QMatrix::from_rows(rows, a.dim));
        coeffs[a.dim - r] += (sz % 2 == 0) ? 1 : -1;
    }
    return IntPoly(std::move(coeffs));
}

// Seeded arrangement of m distinct hyperplanes in dimension n; optionally
// requires every n of the m normals to be independent.
inline Arrangement seeded_arrangement(int m, int n, long long bound, std::uint64_t seed,
                                      bool uniform = false) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 500; ++attempt) {
        std::vector<std::vector<Rational>> normals;
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            std::vector<Rational> v(static_cast<std::size_t>(n));
            int tries = 0;
            do {
                for (auto& x : v) x = Rational(bounded_int(rng, -bound, bound));
            } while (is_zero_vector(v) && ++tries < 100);
            if (is_zero_vector(v)) ok = false;
            normals.push_back(v);
        }
        if (!ok) continue;
        Arrangement a;
        try {
            a = build_arrangement(static_cast<std::size_t>(n), normals);
        } catch (const Error&) {
            continue; // duplicate or non-essential; draw again
        }
        if (uniform) {
            KSubsetIndex idx(m, n);
            bool all_full = true;
            for (const auto& I : idx.subsets) {
                std::vector<std::vector<Rational>> rows;
                for (int v : I) rows.push_back(a.hyperplanes[static_cast<std::size_t>(v - 1)].normal);
                if (rank_of(QMatrix::from_rows(rows, a.dim)) != static_cast<std::size_t>(n)) {
                    all_full = false;
                    break;
                }
            }
            if (!all_full) continue;
        }
        return a;
    }
    throw Error("seeded_arrangement: no admissible arrangement found");
}

// Random invertible k x k integer matrix (entries in [-3, 3]).
inline QMatrix random_invertible(int k, Rng& rng) {
    while (true) {
        QMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
        for (auto& x : m.data) x = Rational(bounded_int(rng, -3, 3));
        if (det(m) != 0) return m;
    }
}

inline std::vector<Hyperplane> sorted_hyperplanes(const Arrangement& a) {
    std::vector<Hyperplane> hs = a.hyperplanes;
    std::sort(hs.begin(), hs.end());
    return hs;
}

// Multiset equality of two arrangements after reindexing the first through
// the product coordinate bijection.
inline bool adjoint_product_sides_match(const Arrangement& lhs_joint, const Arrangement& rhs_blocks,
                                        const ProductIndexBijection& bij) {
    if (lhs_joint.size() != rhs_blocks.size()) return false;
    std::multiset<std::vector<Rational>> lhs, rhs;
    for (const Hyperplane& h : lhs_joint.hyperplanes)
        lhs.insert(normalize_primitive(bij.to_block_coordinates(h.normal)));
    for (const Hyperplane& h : rhs_blocks.hyperplanes) rhs.insert(h.normal);
    return lhs == rhs;
}

} // namespace kadj::testing
