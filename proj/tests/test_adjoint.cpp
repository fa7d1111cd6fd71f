#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace kadj;
using namespace kadj::testing;

TEST_CASE("k-subset index is lex ordered with a position bijection") {
    KSubsetIndex idx(4, 2);
    std::vector<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};
    CHECK(idx.subsets == expect);
    for (std::size_t p = 0; p < idx.size(); ++p)
        CHECK(idx.position(idx.subsets[p]) == static_cast<int>(p));
    CHECK(idx.complement_cols({1, 3}) == std::vector<std::size_t>{1, 3});
    CHECK(KSubsetIndex(5, 0).size() == 1);
    CHECK_THROWS_AS(KSubsetIndex(3, 4), RangeError);
}

namespace {

std::vector<Rational> unit_vector(std::size_t len, std::size_t pos, long long value) {
    std::vector<Rational> v(len);
    v[pos] = value;
    return v;
}

} // namespace

TEST_CASE("signed complementary minors of coordinate planes") {
    IntersectionLattice l = build_lattice(boolean_arrangement(4));
    KSubsetIndex idx(4, 2);

    // span{e1,e3} = {x2 = x4 = 0}: lone coefficient -1 on x_{2,4}.
    const Flat& x2 = l.flats[static_cast<std::size_t>(find_flat(l, {{1, 0, 0, 0}, {0, 0, 1, 0}}))];
    CHECK(adjoint_coefficients(x2, idx) == unit_vector(6, 4, -1));

    // span{e1,e2} = {x3 = x4 = 0}: lone coefficient +1 on x_{3,4}.
    const Flat& x1 = l.flats[static_cast<std::size_t>(find_flat(l, {{1, 0, 0, 0}, {0, 1, 0, 0}}))];
    CHECK(adjoint_coefficients(x1, idx) == unit_vector(6, 5, 1));

    CHECK_THROWS_AS(adjoint_coefficients(x1, KSubsetIndex(4, 3)), RankError);
    CHECK_THROWS_AS(adjoint_coefficients(l.flats[static_cast<std::size_t>(l.by_rank[4][0])],
                                         KSubsetIndex(4, 4)),
                    RangeError);
}

TEST_CASE("order-1 coefficients reproduce the hyperplane normals projectively") {
    for (const Arrangement& a : {boolean_arrangement(4), a3(), seeded_arrangement(5, 3, 4, 99)}) {
        IntersectionLattice l = build_lattice(a);
        KSubsetIndex idx(static_cast<int>(a.dim), 1);
        for (int fi : rank_k_flats(l, 1)) {
            const Flat& f = l.flats[static_cast<std::size_t>(fi)];
            REQUIRE(f.contains.size() >= 1);
            const Hyperplane& h = a.hyperplanes[static_cast<std::size_t>(f.contains[0])];
            CHECK(normalize_primitive(adjoint_coefficients(f, idx)) == h.normal);
        }
    }
}

TEST_CASE("coefficients are independent of the chosen representative") {
    Rng rng(71);
    Arrangement a = seeded_arrangement(5, 4, 4, 17);
    IntersectionLattice l = build_lattice(a);
    KSubsetIndex idx(4, 2);
    for (int fi : rank_k_flats(l, 2)) {
        const Flat& f = l.flats[static_cast<std::size_t>(fi)];
        std::vector<Rational> canonical = normalize_primitive(adjoint_coefficients(f, idx));
        for (int t = 0; t < 3; ++t) {
            Flat rep = f;
            rep.basis = mul(random_invertible(static_cast<int>(f.basis.rows), rng), f.basis);
            CHECK(normalize_primitive(adjoint_coefficients(rep, idx)) == canonical);
        }
    }
}

TEST_CASE("the order-2 adjoint of the rank-4 Boolean arrangement is Boolean") {
    Arrangement b4 = boolean_arrangement(4);
    AdjointArrangement adj = k_adjoint(b4, 2);
    CHECK(adj.base.dim == 6);
    CHECK(adj.base.size() == 6);
    CHECK(sorted_hyperplanes(adj.base) == sorted_hyperplanes(boolean_arrangement(6)));
}

TEST_CASE("order-1 adjoints reproduce the arrangement") {
    for (const Arrangement& a : {boolean_arrangement(4), a3()}) {
        AdjointArrangement adj = k_adjoint(a, 1);
        CHECK(sorted_hyperplanes(adj.base) == sorted_hyperplanes(a));
    }
}

TEST_CASE("order-2 adjoint of four generic hyperplanes in dimension 3") {
    AdjointArrangement adj = k_adjoint(a3(), 2);
    CHECK(adj.base.dim == 3);
    CHECK(adj.base.size() == 6); // one hyperplane per line of the arrangement
    CHECK(adj.base.essential);
}

TEST_CASE("extreme adjoint orders") {
    Arrangement a = a3();
    AdjointArrangement zero = k_adjoint(a, 0);
    CHECK(zero.base.dim == 1);
    CHECK(zero.base.size() == 1);
    CHECK(zero.base.hyperplanes[0].normal == std::vector<Rational>{1});

    AdjointArrangement full = k_adjoint(a, 3);
    CHECK(full.base.dim == 1);
    CHECK(full.base.size() == 0);

    CHECK_THROWS_AS(k_adjoint(a, 4), RangeError);
    CHECK_THROWS_AS(k_adjoint(a, -1), RangeError);
}

TEST_CASE("adjoint hyperplanes of distinct flats stay distinct") {
    for (const Arrangement& a : {boolean_arrangement(4), a3(), seeded_arrangement(5, 4, 4, 17, true)}) {
        IntersectionLattice l = build_lattice(a);
        for (int k = 1; k < static_cast<int>(a.dim); ++k) {
            AdjointArrangement adj = k_adjoint(a, l, k);
            CHECK(adj.base.size() == rank_k_flats(l, k).size());
        }
    }
}

TEST_CASE("tensor products") {
    Arrangement b1 = boolean_arrangement(1);
    CHECK(sorted_hyperplanes(tensor(b1, b1)) == sorted_hyperplanes(b1));

    Arrangement b2 = boolean_arrangement(2);
    CHECK(sorted_hyperplanes(tensor(b2, b2)) == sorted_hyperplanes(boolean_arrangement(4)));

    Arrangement h = build_arrangement(2, {{Rational(1), Rational(1)}}, true);
    Arrangement g = build_arrangement(2, {{Rational(1), Rational(-1)}}, true);
    Arrangement t = tensor(h, g);
    CHECK(t.dim == 4);
    REQUIRE(t.size() == 1);
    CHECK(t.hyperplanes[0].normal == std::vector<Rational>{1, -1, 1, -1});
}

TEST_CASE("product coordinate bijection") {
    ProductIndexBijection bij(2, 2, 2);
    CHECK(bij.split({1, 3}) == std::make_pair(std::vector<int>{1}, std::vector<int>{1}));
    CHECK(bij.split({1, 2}) == std::make_pair(std::vector<int>{1, 2}, std::vector<int>{}));
    CHECK(bij.split({3, 4}) == std::make_pair(std::vector<int>{}, std::vector<int>{1, 2}));
    for (const auto& J : bij.joint.subsets) {
        auto [i1, i2] = bij.split(J);
        CHECK(bij.join(i1, i2) == J);
    }
    // Block positions hit every coordinate exactly once.
    ProductIndexBijection bij2(3, 2, 2);
    std::set<std::size_t> hit;
    for (const auto& J : bij2.joint.subsets) hit.insert(bij2.block_position(J));
    CHECK(hit.size() == bij2.joint.size());
    CHECK(*hit.rbegin() == bij2.joint.size() - 1);
}

TEST_CASE("adjoints of products factor through tensor blocks") {
    Arrangement b1 = boolean_arrangement(1);
    Arrangement b2 = boolean_arrangement(2);

    Arrangement rhs = product_adjoint_rhs(b2, b2, 2);
    CHECK(rhs.dim == 6);
    CHECK(rhs.size() == 6);
    CHECK(sorted_hyperplanes(rhs) == sorted_hyperplanes(boolean_arrangement(6)));

    // k = 1 on B1 x B1: both blocks carry a full-rank factor; the result is
    // the rank-2 Boolean arrangement in block coordinates.
    Arrangement rhs11 = product_adjoint_rhs(b1, b1, 1);
    CHECK(rhs11.dim == 2);
    CHECK(rhs11.size() == 2);
    AdjointArrangement lhs11 = k_adjoint(product(b1, b1), 1);
    CHECK(adjoint_product_sides_match(lhs11.base, rhs11, ProductIndexBijection(1, 1, 1)));

    for (int k : {1, 2}) {
        AdjointArrangement lhs = k_adjoint(product(a3(), b1), k);
        Arrangement r = product_adjoint_rhs(a3(), b1, k);
        CHECK(adjoint_product_sides_match(lhs.base, r, ProductIndexBijection(3, 1, k)));
    }
}

TEST_CASE("pairing examples") {
    IntersectionLattice l = build_lattice(boolean_arrangement(4));
    QMatrix u_coord = QMatrix::of_ints({{1, 0, 0, 0}, {0, 1, 0, 0}});
    const Flat& x6 = l.flats[static_cast<std::size_t>(find_flat(l, {{0, 0, 1, 0}, {0, 0, 0, 1}}))];
    CHECK(laplace_pairing(u_coord, x6) == Rational(1));

    QMatrix u = QMatrix::of_ints({{1, 0, 1, 0}, {0, 1, 0, 1}});
    const Flat& x5 = l.flats[static_cast<std::size_t>(find_flat(l, {{0, 1, 0, 0}, {0, 0, 0, 1}}))];
    CHECK(laplace_pairing(u, x5) == Rational(0));

    const Flat& x1 = l.flats[static_cast<std::size_t>(find_flat(l, {{1, 0, 0, 0}, {0, 1, 0, 0}}))];
    Rational p = laplace_pairing(u, x1);
    CHECK(p != 0);
    CHECK(abs(num(p)) == 1);

    CHECK_THROWS_AS(laplace_pairing(QMatrix::of_ints({{1, 0, 0, 0}}), x1), DimensionError);
}

TEST_CASE("pairing vanishes exactly when the subspaces fail to be complements") {
    Rng rng(13);
    int trial = 0;
    for (const Arrangement& a : {boolean_arrangement(4), a3()}) {
        IntersectionLattice l = build_lattice(a);
        const int n = static_cast<int>(a.dim);
        for (int k = 1; k < n; ++k) {
            const auto& flats = rank_k_flats(l, k);
            for (int t = 0; t < 60; ++t) {
                Subspace u = random_subspace(k, n, 3, mix_seed(2024, ++trial));
                const Flat& x = l.flats[static_cast<std::size_t>(
                    flats[static_cast<std::size_t>(bounded_int(rng, 0, static_cast<long long>(flats.size()) - 1))])];
                Rational p = laplace_pairing(u.basis, x);
                CHECK((p != 0) == (rank_of(stack(u.basis, x.basis)) == a.dim));
            }
        }
    }
}
