#include "kadj/adjoint.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "kadj/error.hpp"

namespace kadj {

KSubsetIndex::KSubsetIndex(int n_, int k_) : n(n_), k(k_) {
    if (k < 0 || k > n)
        throw RangeError("subset size " + std::to_string(k) + " out of range 0.." +
                         std::to_string(n));
    std::vector<int> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), 1);
    if (k == 0) {
        subsets.push_back({});
    } else {
        while (true) {
            subsets.push_back(cur);
            int i = k - 1;
            while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
            if (i < 0) break;
            ++cur[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    for (std::size_t p = 0; p < subsets.size(); ++p) pos_.emplace(subsets[p], static_cast<int>(p));
}

int KSubsetIndex::position(const std::vector<int>& subset) const {
    auto it = pos_.find(subset);
    if (it == pos_.end()) throw RangeError("not a valid sorted k-subset of [n]");
    return it->second;
}

std::vector<std::size_t> KSubsetIndex::complement_cols(const std::vector<int>& subset) const {
    std::vector<std::size_t> out;
    std::size_t s = 0;
    for (int v = 1; v <= n; ++v) {
        if (s < subset.size() && subset[s] == v) {
            ++s;
            continue;
        }
        out.push_back(static_cast<std::size_t>(v - 1));
    }
    return out;
}

std::vector<Rational> adjoint_coefficients(const Flat& x, const KSubsetIndex& idx) {
    if (idx.k >= idx.n) throw RangeError("adjoint coefficients require k < n");
    if (x.rank != idx.k)
        throw RankError("flat has rank " + std::to_string(x.rank) + ", expected " +
                        std::to_string(idx.k));
    if (x.basis.cols != static_cast<std::size_t>(idx.n))
        throw DimensionError("flat lives in dimension " + std::to_string(x.basis.cols) +
                             ", expected " + std::to_string(idx.n));
    std::vector<std::size_t> all_rows(x.basis.rows);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::vector<Rational> out(idx.size());
    const int base = idx.k * (idx.k + 1) / 2;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        const std::vector<int>& I = idx.subsets[p];
        int s = base;
        for (int v : I) s += v;
        Rational m = minor_det(x.basis, all_rows, idx.complement_cols(I));
        out[p] = (s % 2 == 0) ? m : -m;
    }
    return out;
}

AdjointArrangement k_adjoint(const Arrangement& a, const IntersectionLattice& lat, int k) {
    const int n = static_cast<int>(a.dim);
    if (k < 0 || k > n)
        throw RangeError("adjoint order " + std::to_string(k) + " out of range 0.." +
                         std::to_string(n));
    if (!a.essential) throw InputError("k-adjoint requires an essential arrangement");

    AdjointArrangement adj;
    adj.n = n;
    adj.k = k;
    if (k == n) {
        // By convention the n-adjoint is the empty arrangement in dimension 1.
        adj.index = KSubsetIndex(n, k);
        adj.base = build_arrangement(1, {}, /*allow_non_essential=*/true);
        return adj;
    }
    adj.index = KSubsetIndex(n, k);

    std::vector<std::vector<Rational>> normals;
    std::map<std::vector<Rational>, int> distinct;
    for (int fi : rank_k_flats(lat, k)) {
        const Flat& x = lat.flats[static_cast<std::size_t>(fi)];
        AdjointHyperplane h;
        h.raw = adjoint_coefficients(x, adj.index);
        h.normalized = normalize_primitive(h.raw);
        h.source_flat = fi;
        auto [it, fresh] = distinct.emplace(h.normalized, fi);
        if (!fresh)
            throw Error("two distinct rank-" + std::to_string(k) +
                        " flats produced the same adjoint hyperplane (flats " +
                        std::to_string(it->second) + " and " + std::to_string(fi) +
                        "); Plucker injectivity violated");
        normals.push_back(h.normalized);
        adj.hyperplanes.push_back(std::move(h));
    }
    adj.base = build_arrangement(adj.index.size(), normals, /*allow_non_essential=*/true);
    return adj;
}

AdjointArrangement k_adjoint(const Arrangement& a, int k) {
    return k_adjoint(a, build_lattice(a), k);
}

Arrangement tensor(const Arrangement& a, const Arrangement& b) {
    std::vector<std::vector<Rational>> normals;
    for (const Hyperplane& h : a.hyperplanes)
        for (const Hyperplane& g : b.hyperplanes) {
            std::vector<Rational> z(a.dim * b.dim);
            for (std::size_t i = 0; i < a.dim; ++i) {
                if (h.normal[i] == 0) continue;
                for (std::size_t j = 0; j < b.dim; ++j) z[i * b.dim + j] = h.normal[i] * g.normal[j];
            }
            normals.push_back(std::move(z));
        }
    return build_arrangement(a.dim * b.dim, normals, /*allow_non_essential=*/true);
}

namespace {

// The origin hyperplane {x = 0} in dimension 1: the adjoint the signed-minor
// formula assigns to a full-rank flat (empty minor = 1).
Arrangement origin_line() {
    return build_arrangement(1, {{Rational(1)}}, /*allow_non_essential=*/true);
}

Arrangement adjoint_factor(const Arrangement& a, const IntersectionLattice& lat, int i) {
    return i == static_cast<int>(a.dim) ? origin_line() : k_adjoint(a, lat, i).base;
}

} // namespace

Arrangement product_adjoint_rhs(const Arrangement& a, const Arrangement& b, int k) {
    const int n = static_cast<int>(a.dim);
    const int m = static_cast<int>(b.dim);
    if (k < 0 || k > n + m)
        throw RangeError("adjoint order " + std::to_string(k) + " out of range 0.." +
                         std::to_string(n + m));
    IntersectionLattice la = build_lattice(a);
    IntersectionLattice lb = build_lattice(b);
    Arrangement acc = build_arrangement(0, {}, /*allow_non_essential=*/true);
    for (int i = std::max(0, k - m); i <= std::min(k, n); ++i)
        acc = product(acc, tensor(adjoint_factor(a, la, i), adjoint_factor(b, lb, k - i)));
    return acc;
}

ProductIndexBijection::ProductIndexBijection(int n_, int m_, int k_)
    : n(n_), m(m_), k(k_), joint(n_ + m_, k_) {
    for (int i = 0; i <= k; ++i) {
        left_.push_back(i <= n ? KSubsetIndex(n, i) : KSubsetIndex());
        right_.push_back(k - i <= m ? KSubsetIndex(m, k - i) : KSubsetIndex());
        offsets_.push_back(total_);
        if (i <= n && k - i <= m) total_ += left_.back().size() * right_.back().size();
    }
}

std::pair<std::vector<int>, std::vector<int>> ProductIndexBijection::split(
    const std::vector<int>& j_subset) const {
    std::vector<int> i1, i2;
    for (int v : j_subset) (v <= n ? i1 : i2).push_back(v <= n ? v : v - n);
    return {i1, i2};
}

std::vector<int> ProductIndexBijection::join(const std::vector<int>& i1,
                                             const std::vector<int>& i2) const {
    std::vector<int> j = i1;
    for (int v : i2) j.push_back(v + n);
    return j;
}

std::size_t ProductIndexBijection::block_position(const std::vector<int>& j_subset) const {
    auto [i1, i2] = split(j_subset);
    const std::size_t blk = i1.size();
    return offsets_[blk] +
           static_cast<std::size_t>(left_[blk].position(i1)) * right_[blk].size() +
           static_cast<std::size_t>(right_[blk].position(i2));
}

std::vector<Rational> ProductIndexBijection::to_block_coordinates(
    const std::vector<Rational>& v) const {
    if (v.size() != joint.size())
        throw DimensionError("vector has length " + std::to_string(v.size()) + ", expected " +
                             std::to_string(joint.size()));
    std::vector<Rational> out(total_);
    for (std::size_t p = 0; p < joint.size(); ++p)
        out[block_position(joint.subsets[p])] = v[p];
    return out;
}

Rational laplace_pairing(const QMatrix& u_basis, const Flat& x) {
    const std::size_t n = u_basis.cols;
    if (x.basis.cols != n)
        throw DimensionError("subspace and flat live in different ambient dimensions");
    if (u_basis.rows + x.basis.rows != n)
        throw DimensionError("stacked matrix is " + std::to_string(u_basis.rows + x.basis.rows) +
                             "x" + std::to_string(n) + ", expected square");
    KSubsetIndex idx(static_cast<int>(n), static_cast<int>(u_basis.rows));
    std::vector<Rational> a = adjoint_coefficients(x, idx);
    std::vector<std::size_t> all_rows(u_basis.rows);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    Rational pairing = 0;
    for (std::size_t p = 0; p < idx.size(); ++p) {
        if (a[p] == 0) continue;
        std::vector<std::size_t> cols;
        for (int v : idx.subsets[p]) cols.push_back(static_cast<std::size_t>(v - 1));
        pairing += a[p] * minor_det(u_basis, all_rows, cols);
    }
    Rational d = det(stack(u_basis, x.basis));
    if (pairing != d)
        throw Error("pairing/determinant mismatch: " + to_string(pairing) + " vs " + to_string(d));
    return pairing;
}

} // namespace kadj
