#include "kadj/arrangement.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "kadj/error.hpp"

namespace kadj {

Arrangement::Arrangement(std::size_t n, const std::vector<std::vector<Rational>>& normals)
    : dim(n) {
    std::map<std::vector<Rational>, std::size_t> seen;
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if (normals[i].size() != n)
            throw DimensionError("hyperplane " + std::to_string(i + 1) + ": normal has length " +
                                 std::to_string(normals[i].size()) + ", expected " +
                                 std::to_string(n));
        if (is_zero_vector(normals[i]))
            throw InputError("hyperplane " + std::to_string(i + 1) + ": zero normal vector");
        std::vector<Rational> nrm = normalize_primitive(normals[i]);
        auto [it, fresh] = seen.emplace(nrm, i);
        if (!fresh)
            throw InputError("duplicate hyperplane: " + std::to_string(i + 1) +
                             " equals " + std::to_string(it->second + 1) +
                             " after normalization");
        hyperplanes.push_back(Hyperplane{std::move(nrm)});
    }
    essential = rank_of(normal_matrix()) == n;
}

QMatrix Arrangement::normal_matrix() const {
    QMatrix m(hyperplanes.size(), dim);
    for (std::size_t i = 0; i < hyperplanes.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = hyperplanes[i].normal[j];
    return m;
}

Arrangement build_arrangement(std::size_t dim, const std::vector<std::vector<Rational>>& normals,
                              bool allow_non_essential) {
    Arrangement a(dim, normals);
    if (!a.essential && !allow_non_essential)
        throw InputError("arrangement is not essential: normals span a proper subspace of "
                         "dimension " +
                         std::to_string(rank_of(a.normal_matrix())) + " < " +
                         std::to_string(dim));
    return a;
}

Arrangement boolean_arrangement(std::size_t n) {
    std::vector<std::vector<Rational>> normals;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> e(n);
        e[i] = 1;
        normals.push_back(std::move(e));
    }
    return build_arrangement(n, normals);
}

namespace {

std::vector<int> closed_contains(const Arrangement& a, const QMatrix& basis) {
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        bool inside = true;
        for (std::size_t r = 0; r < basis.rows && inside; ++r) {
            Rational dot = 0;
            for (std::size_t j = 0; j < basis.cols; ++j)
                dot += basis.at(r, j) * a.hyperplanes[i].normal[j];
            inside = dot == 0;
        }
        if (inside) out.push_back(static_cast<int>(i));
    }
    return out;
}

// Intersection of the subspace spanned by `basis` with hyperplane `normal`,
// assuming the subspace is not contained in the hyperplane.
QMatrix cut_with_hyperplane(const QMatrix& basis, const std::vector<Rational>& normal) {
    std::vector<Rational> c = matvec(basis, normal);
    QMatrix crow(1, basis.rows);
    for (std::size_t j = 0; j < basis.rows; ++j) crow.at(0, j) = c[j];
    QMatrix k = kernel_basis(crow); // (rows-1) x rows
    return rref_basis(mul(k, basis));
}

} // namespace

bool IntersectionLattice::leq(int x, int y) const {
    const auto& cx = flats[static_cast<std::size_t>(x)].contains;
    const auto& cy = flats[static_cast<std::size_t>(y)].contains;
    return std::includes(cy.begin(), cy.end(), cx.begin(), cx.end());
}

int IntersectionLattice::index_of(const QMatrix& canonical_basis) const {
    auto it = index_by_basis.find(canonical_basis.data);
    if (it == index_by_basis.end()) throw Error("subspace is not a flat of the lattice");
    return it->second;
}

IntersectionLattice build_lattice(const Arrangement& a) {
    const std::size_t n = a.dim;
    IntersectionLattice l;
    l.arrangement = a;
    l.by_rank.assign(n + 1, {});

    std::map<std::vector<Rational>, int> seen;
    std::vector<Flat> flats;

    Flat top;
    top.basis = QMatrix::identity(n);
    top.contains = closed_contains(a, top.basis);
    top.rank = 0;
    seen.emplace(top.basis.data, 0);
    flats.push_back(std::move(top));

    std::vector<int> frontier = {0};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int fi : frontier) {
            // Copy: flats may reallocate while we append.
            const std::vector<int> contains = flats[static_cast<std::size_t>(fi)].contains;
            const QMatrix basis = flats[static_cast<std::size_t>(fi)].basis;
            std::size_t ci = 0;
            for (std::size_t h = 0; h < a.size(); ++h) {
                while (ci < contains.size() && static_cast<std::size_t>(contains[ci]) < h) ++ci;
                if (ci < contains.size() && static_cast<std::size_t>(contains[ci]) == h) continue;
                QMatrix cut = cut_with_hyperplane(basis, a.hyperplanes[h].normal);
                auto it = seen.find(cut.data);
                if (it != seen.end()) continue;
                Flat f;
                f.rank = static_cast<int>(n - cut.rows);
                f.contains = closed_contains(a, cut);
                f.basis = std::move(cut);
                seen.emplace(f.basis.data, static_cast<int>(flats.size()));
                next.push_back(static_cast<int>(flats.size()));
                flats.push_back(std::move(f));
            }
        }
        frontier = std::move(next);
    }

    // Deterministic, construction-independent order: rank ascending, then
    // descending lexicographic on the flattened canonical basis.
    std::vector<int> order(flats.size());
    for (std::size_t i = 0; i < flats.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const Flat& fx = flats[static_cast<std::size_t>(x)];
        const Flat& fy = flats[static_cast<std::size_t>(y)];
        if (fx.rank != fy.rank) return fx.rank < fy.rank;
        return fy.basis.data < fx.basis.data;
    });
    for (int idx : order) l.flats.push_back(std::move(flats[static_cast<std::size_t>(idx)]));

    l.top_rank = 0;
    for (std::size_t i = 0; i < l.flats.size(); ++i) {
        l.index_by_basis.emplace(l.flats[i].basis.data, static_cast<int>(i));
        l.by_rank[static_cast<std::size_t>(l.flats[i].rank)].push_back(static_cast<int>(i));
        l.top_rank = std::max(l.top_rank, l.flats[i].rank);
    }

    // Mobius recursion over intervals from the bottom, plus covering pairs.
    l.mobius.assign(l.flats.size(), 0);
    l.mobius[0] = 1;
    for (std::size_t x = 1; x < l.flats.size(); ++x) {
        Integer s = 0;
        for (std::size_t y = 0; y < l.flats.size(); ++y) {
            if (y == x) continue;
            if (l.flats[y].rank < l.flats[x].rank && l.leq(static_cast<int>(y), static_cast<int>(x)))
                s += l.mobius[y];
        }
        l.mobius[x] = -s;
    }
    for (std::size_t x = 0; x < l.flats.size(); ++x)
        for (std::size_t y = 0; y < l.flats.size(); ++y)
            if (l.flats[y].rank == l.flats[x].rank + 1 &&
                l.leq(static_cast<int>(x), static_cast<int>(y)))
                l.hasse_edges.emplace_back(static_cast<int>(x), static_cast<int>(y));

    return l;
}

const std::vector<int>& rank_k_flats(const IntersectionLattice& l, int k) {
    if (k < 0 || static_cast<std::size_t>(k) > l.dim())
        throw RangeError("flat rank " + std::to_string(k) + " out of range 0.." +
                         std::to_string(l.dim()));
    return l.by_rank[static_cast<std::size_t>(k)];
}

int locate_flat(const IntersectionLattice& l, const std::vector<Rational>& point) {
    const Arrangement& a = l.arrangement;
    if (point.size() != a.dim)
        throw DimensionError("point has length " + std::to_string(point.size()) + ", expected " +
                             std::to_string(a.dim));
    std::vector<std::vector<Rational>> through;
    for (const Hyperplane& h : a.hyperplanes) {
        Rational dot = 0;
        for (std::size_t j = 0; j < a.dim; ++j) dot += h.normal[j] * point[j];
        if (dot == 0) through.push_back(h.normal);
    }
    QMatrix basis = through.empty()
                        ? QMatrix::identity(a.dim)
                        : rref_basis(kernel_basis(QMatrix::from_rows(through, a.dim)));
    return l.index_of(basis);
}

RestrictionResult restriction(const Arrangement& a, const QMatrix& u_basis) {
    if (u_basis.cols != a.dim)
        throw DimensionError("subspace basis has " + std::to_string(u_basis.cols) +
                             " columns, expected " + std::to_string(a.dim));
    if (rank_of(u_basis) != u_basis.rows)
        throw InputError("invalid subspace: basis rows are linearly dependent");

    RestrictionResult res;
    std::vector<std::vector<Rational>> normals;
    std::map<std::vector<Rational>, int> seen;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::vector<Rational> c = matvec(u_basis, a.hyperplanes[i].normal);
        if (is_zero_vector(c)) {
            res.index_map.push_back(-1); // U lies inside this hyperplane
            continue;
        }
        std::vector<Rational> nrm = normalize_primitive(c);
        auto it = seen.find(nrm);
        if (it == seen.end()) {
            it = seen.emplace(nrm, static_cast<int>(normals.size())).first;
            normals.push_back(std::move(nrm));
        }
        res.index_map.push_back(it->second);
    }
    res.restricted = build_arrangement(u_basis.rows, normals, /*allow_non_essential=*/true);
    return res;
}

Arrangement product(const Arrangement& a, const Arrangement& b) {
    std::vector<std::vector<Rational>> normals;
    for (const Hyperplane& h : a.hyperplanes) {
        std::vector<Rational> v(a.dim + b.dim);
        std::copy(h.normal.begin(), h.normal.end(), v.begin());
        normals.push_back(std::move(v));
    }
    for (const Hyperplane& h : b.hyperplanes) {
        std::vector<Rational> v(a.dim + b.dim);
        std::copy(h.normal.begin(), h.normal.end(), v.begin() + static_cast<long>(a.dim));
        normals.push_back(std::move(v));
    }
    return build_arrangement(a.dim + b.dim, normals, /*allow_non_essential=*/true);
}

std::vector<Flag> maximal_chains(const IntersectionLattice& l, std::size_t cap) {
    const std::size_t n = l.dim();
    if (l.top_rank != static_cast<int>(n))
        throw InputError("maximal chains require an essential arrangement (lattice top rank " +
                         std::to_string(l.top_rank) + " < " + std::to_string(n) + ")");

    std::vector<std::vector<int>> covers(l.flats.size());
    for (const auto& [lo, hi] : l.hasse_edges) covers[static_cast<std::size_t>(lo)].push_back(hi);

    std::vector<Flag> out;
    std::vector<int> chain = {l.by_rank[0][0]}; // ranks 0..n in order
    auto dfs = [&](auto&& self, int x) -> void {
        if (l.flats[static_cast<std::size_t>(x)].rank == static_cast<int>(n)) {
            if (out.size() == cap)
                throw BudgetError("maximal chain enumeration exceeded cap " +
                                  std::to_string(cap) + " (reached " + std::to_string(cap + 1) +
                                  " chains)");
            Flag f;
            f.flat_by_dim.assign(n + 1, 0);
            for (std::size_t r = 0; r <= n; ++r) f.flat_by_dim[n - r] = chain[r];
            out.push_back(std::move(f));
            return;
        }
        for (int y : covers[static_cast<std::size_t>(x)]) {
            chain.push_back(y);
            self(self, y);
            chain.pop_back();
        }
    };
    dfs(dfs, chain[0]);
    return out;
}

IntPoly characteristic_polynomial(const IntersectionLattice& l) {
    std::vector<Integer> c(l.dim() + 1, Integer(0));
    for (std::size_t i = 0; i < l.flats.size(); ++i)
        c[l.dim() - static_cast<std::size_t>(l.flats[i].rank)] += l.mobius[i];
    return IntPoly(std::move(c));
}

} // namespace kadj
