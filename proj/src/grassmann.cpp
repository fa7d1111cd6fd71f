#include "kadj/grassmann.hpp"

#include <numeric>
#include <string>

#include "kadj/error.hpp"
#include "kadj/rng.hpp"

namespace kadj {

Subspace Subspace::from_rows(const QMatrix& rows) {
    Subspace u;
    u.basis = rref_basis(rows);
    u.k = static_cast<int>(u.basis.rows);
    u.n = static_cast<int>(rows.cols);
    return u;
}

std::vector<Rational> plucker_minors(const QMatrix& m) {
    if (m.rows > m.cols) throw DimensionError("more rows than columns");
    KSubsetIndex idx(static_cast<int>(m.cols), static_cast<int>(m.rows));
    std::vector<std::size_t> all_rows(m.rows);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::vector<Rational> out(idx.size());
    for (std::size_t p = 0; p < idx.size(); ++p) {
        std::vector<std::size_t> cols;
        for (int v : idx.subsets[p]) cols.push_back(static_cast<std::size_t>(v - 1));
        out[p] = minor_det(m, all_rows, cols);
    }
    return out;
}

PluckerVector plucker(const Subspace& u) {
    PluckerVector pv;
    pv.idx = KSubsetIndex(u.n, u.k);
    pv.coords = normalize_primitive(plucker_minors(u.basis));
    return pv;
}

int locate_stratum(const Subspace& u, const AdjointArrangement& adj,
                   const IntersectionLattice& adj_lat) {
    if (u.n != adj.n || u.k != adj.k)
        throw DimensionError("subspace is " + std::to_string(u.k) + "-dimensional in F^" +
                             std::to_string(u.n) + ", adjoint expects k=" + std::to_string(adj.k) +
                             ", n=" + std::to_string(adj.n));
    return locate_flat(adj_lat, plucker(u).coords);
}

std::vector<int> l_lower(const Subspace& u, const IntersectionLattice& lat) {
    const std::size_t n = lat.dim();
    std::vector<int> out;
    for (int fi : rank_k_flats(lat, u.k)) {
        const Flat& x = lat.flats[static_cast<std::size_t>(fi)];
        bool direct_sum = rank_of(stack(u.basis, x.basis)) == n;
        bool pairing_nonzero = laplace_pairing(u.basis, x) != 0;
        if (direct_sum != pairing_nonzero)
            throw Error("complement test disagrees with the pairing criterion");
        if (direct_sum) out.push_back(fi);
    }
    return out;
}

std::vector<int> l_upper(const Subspace& u, const IntersectionLattice& lat) {
    const std::size_t n = lat.dim();
    std::vector<int> out;
    for (int fi : rank_k_flats(lat, u.k)) {
        const Flat& x = lat.flats[static_cast<std::size_t>(fi)];
        if (rank_of(stack(u.basis, x.basis)) < n) out.push_back(fi);
    }
    return out;
}

std::vector<int> schubert_symbol(const Subspace& u, const IntersectionLattice& lat,
                                 const Flag& flag) {
    const int n = static_cast<int>(lat.dim());
    std::vector<int> symbol;
    int prev = 0;
    for (int i = 1; i <= n; ++i) {
        const Flat& f = lat.flats[static_cast<std::size_t>(flag.flat_by_dim[static_cast<std::size_t>(i)])];
        int d = u.k + i - static_cast<int>(rank_of(stack(u.basis, f.basis)));
        if (d > prev) symbol.push_back(i);
        prev = d;
    }
    if (static_cast<int>(symbol.size()) != u.k)
        throw Error("Schubert symbol has " + std::to_string(symbol.size()) +
                    " jumps, expected " + std::to_string(u.k));
    return symbol;
}

SchubertSignature refined_signature(const Subspace& u, const IntersectionLattice& lat,
                                    const std::vector<Flag>& chains) {
    SchubertSignature sig;
    sig.per_chain.reserve(chains.size());
    for (const Flag& f : chains) sig.per_chain.push_back(schubert_symbol(u, lat, f));
    return sig;
}

Subspace random_subspace(int k, int n, long long bound, std::uint64_t seed) {
    if (k < 0 || k > n)
        throw RangeError("subspace dimension " + std::to_string(k) + " out of range 0.." +
                         std::to_string(n));
    if (bound < 1) throw RangeError("sampling bound must be at least 1");
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
        for (auto& x : m.data) x = Rational(bounded_int(rng, -bound, bound));
        if (rank_of(m) == static_cast<std::size_t>(k)) return Subspace::from_rows(m);
    }
    throw Error("failed to sample a rank-" + std::to_string(k) + " subspace in 1000 attempts");
}

} // namespace kadj
