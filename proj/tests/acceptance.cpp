// Acceptance suite: end-to-end checks of the library's headline guarantees,
// one printed line per criterion, exact arithmetic throughout. Returns
// nonzero if any criterion fails its check or its time budget.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "support.hpp"

using namespace kadj;
using namespace kadj::testing;
namespace fs = std::filesystem;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<void()> run;
};

struct Failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure(what);
}

// Shared state across criteria: the sampled censuses feed the
// anti-monotonicity and NBC checks.
struct SampledRun {
    std::string name;
    Arrangement a;
    ClassifyContext ctx;
    CensusReport report;
};
std::vector<SampledRun> g_runs;

void criterion_b4_golden() {
    Arrangement b4 = boolean_arrangement(4);
    IntersectionLattice lat = build_lattice(b4);
    AdjointArrangement adj = k_adjoint(b4, lat, 2);
    require(adj.base.size() == 6, "expected six adjoint hyperplanes");

    struct Expected {
        QMatrix span;
        std::size_t coord; // lex position of the lone nonzero coefficient
        long long value;
    };
    // Signed coefficients of the six coordinate planes, in the classical
    // order: +x34, -x24, +x23, +x14, -x13, +x12.
    std::vector<Expected> table = {
        {QMatrix::of_ints({{1, 0, 0, 0}, {0, 1, 0, 0}}), 5, 1},
        {QMatrix::of_ints({{1, 0, 0, 0}, {0, 0, 1, 0}}), 4, -1},
        {QMatrix::of_ints({{1, 0, 0, 0}, {0, 0, 0, 1}}), 3, 1},
        {QMatrix::of_ints({{0, 1, 0, 0}, {0, 0, 1, 0}}), 2, 1},
        {QMatrix::of_ints({{0, 1, 0, 0}, {0, 0, 0, 1}}), 1, -1},
        {QMatrix::of_ints({{0, 0, 1, 0}, {0, 0, 0, 1}}), 0, 1},
    };
    for (const Expected& e : table) {
        int fi = find_flat(lat, e.span);
        bool found = false;
        for (const AdjointHyperplane& h : adj.hyperplanes) {
            if (h.source_flat != fi) continue;
            found = true;
            for (std::size_t p = 0; p < h.raw.size(); ++p)
                require(h.raw[p] == (p == e.coord ? Rational(e.value) : Rational(0)),
                        "raw coefficient mismatch");
        }
        require(found, "missing adjoint hyperplane for a coordinate plane");
    }
    require(sorted_hyperplanes(adj.base) == sorted_hyperplanes(boolean_arrangement(6)),
            "normalized adjoint is not the rank-6 Boolean arrangement");
}

void criterion_boolean_family() {
    for (int n = 2; n <= 5; ++n) {
        Arrangement bn = boolean_arrangement(static_cast<std::size_t>(n));
        IntersectionLattice l = build_lattice(bn);
        for (int k = 1; k < n; ++k) {
            AdjointArrangement adj = k_adjoint(bn, l, k);
            Arrangement expect = boolean_arrangement(
                binom(static_cast<unsigned>(n), static_cast<unsigned>(k)));
            require(sorted_hyperplanes(adj.base) == sorted_hyperplanes(expect),
                    "adjoint of the rank-" + std::to_string(n) + " Boolean arrangement, order " +
                        std::to_string(k) + ", is not Boolean");
        }
    }
}

void criterion_order_one_identity() {
    std::vector<Arrangement> cases = {boolean_arrangement(4), a3(),
                                      seeded_arrangement(5, 3, 5, 2027)};
    for (const Arrangement& a : cases)
        require(sorted_hyperplanes(k_adjoint(a, 1).base) == sorted_hyperplanes(a),
                "order-1 adjoint differs from the arrangement");
}

void criterion_pairing_suite() {
    int pairs = 0;
    std::uint64_t seed = 0;
    for (const Arrangement& a : {boolean_arrangement(4), a3()}) {
        IntersectionLattice l = build_lattice(a);
        const int n = static_cast<int>(a.dim);
        for (int k = 1; k < n && pairs < 500; ++k) {
            const auto& flats = rank_k_flats(l, k);
            for (std::size_t t = 0; pairs < 500 && t < 130; ++t) {
                Subspace u = random_subspace(k, n, 5, mix_seed(4242, ++seed));
                const Flat& x = l.flats[static_cast<std::size_t>(flats[t % flats.size()])];
                Rational p = laplace_pairing(u.basis, x); // asserts the expansion internally
                require(p == det(stack(u.basis, x.basis)), "pairing differs from determinant");
                require((p != 0) == (rank_of(stack(u.basis, x.basis)) == a.dim),
                        "pairing zero-pattern differs from the complement test");
                ++pairs;
            }
        }
    }
    require(pairs == 500, "expected 500 sampled pairs, got " + std::to_string(pairs));
}

void criterion_product_formula() {
    struct Case {
        Arrangement a, b;
    };
    std::vector<Case> cases = {{a3(), boolean_arrangement(1)},
                               {boolean_arrangement(2), boolean_arrangement(2)}};
    for (const Case& c : cases)
        for (int k : {1, 2}) {
            AdjointArrangement lhs = k_adjoint(product(c.a, c.b), k);
            Arrangement rhs = product_adjoint_rhs(c.a, c.b, k);
            ProductIndexBijection bij(static_cast<int>(c.a.dim), static_cast<int>(c.b.dim), k);
            require(adjoint_product_sides_match(lhs.base, rhs, bij),
                    "adjoint of the product differs from the tensor-block construction at k=" +
                        std::to_string(k));
        }
}

void criterion_three_way_equivalence() {
    struct Setup {
        std::string name;
        Arrangement a;
        std::uint64_t seed;
    };
    std::vector<Setup> setups = {{"boolean4", boolean_arrangement(4), 1},
                                 {"a3", a3(), 2},
                                 {"generic5", seeded_arrangement(5, 4, 5, 2028, true), 3}};
    for (Setup& s : setups) {
        SampledRun run{s.name, s.a, make_context(s.a, 2), {}};
        std::vector<Subspace> samples;
        for (int j = 0; j < 200; ++j)
            samples.push_back(random_subspace(2, static_cast<int>(s.a.dim), 5,
                                              mix_seed(s.seed, static_cast<std::uint64_t>(j))));
        run.report = classify_subspaces(run.ctx, samples, s.name);
        require(run.report.signature_available, s.name + ": chain enumeration was cut short");
        require(run.report.violations.empty(),
                s.name + ": " + (run.report.violations.empty() ? "" : run.report.violations[0]));
        g_runs.push_back(std::move(run));
    }
}

void criterion_antimonotonicity() {
    require(!g_runs.empty(), "three-way classification must run first");
    for (SampledRun& run : g_runs) {
        comparable_pairs(run.report, run.ctx.adj_lat);
        require(!run.report.comparable_pairs.empty(), run.name + ": no comparable pairs realized");
        auto v1 = verify_antimonotonicity(run.report);
        auto v2 = verify_lower_set_inclusion(run.report);
        require(v1.empty(), run.name + ": " + (v1.empty() ? "" : v1[0]));
        require(v2.empty(), run.name + ": " + (v2.empty() ? "" : v2[0]));
    }
}

void criterion_nbc() {
    require(!g_runs.empty(), "three-way classification must run first");
    Rng rng(606);
    int checked = 0;
    for (const SampledRun& run : g_runs)
        for (const StratumRecord& s : run.report.strata) {
            VectorMatroid m = matroid_of_restriction(run.a, s.representatives.front());
            if (!m.loops().empty()) continue;
            std::vector<Integer> w = whitney_numbers(m);
            for (int trial = 0; trial < 4; ++trial) {
                std::vector<int> order = trial == 0 ? natural_order(m.ground_size)
                                                    : random_permutation(m.ground_size, rng);
                std::vector<long long> nbc = nbc_counts(m, order);
                require(nbc.size() == w.size(), "NBC count vector has the wrong length");
                for (std::size_t i = 0; i < w.size(); ++i)
                    require(abs(w[i]) == Integer(nbc[i]),
                            run.name + ": |w_" + std::to_string(i) +
                                "| differs from the NBC count (order trial " +
                                std::to_string(trial) + ")");
            }
            ++checked;
        }
    require(checked > 0, "no loop-free matroids realized");
}

void criterion_rank_formula() {
    int triples = 0;
    std::uint64_t seed = 0;
    while (triples < 50) {
        ++seed;
        int n = 3 + static_cast<int>(seed % 2);
        int m = 4 + static_cast<int>(seed % 3);
        Arrangement a = seeded_arrangement(m, n, 4, mix_seed(31337, seed));
        int k = 1 + static_cast<int>(seed % static_cast<std::uint64_t>(n - 1));
        Subspace u = random_subspace(k, n, 4, mix_seed(777, seed));
        VectorMatroid mat = matroid_of_restriction(a, u);
        Rng rng(mix_seed(55, seed));
        std::uint64_t subset =
            static_cast<std::uint64_t>(bounded_int(rng, 0, (1LL << m) - 1));
        // Kernel route, independent of column ranks.
        std::vector<std::vector<Rational>> rows;
        for (int i = 0; i < m; ++i)
            if (subset >> i & 1) rows.push_back(a.hyperplanes[static_cast<std::size_t>(i)].normal);
        QMatrix w = rows.empty()
                        ? QMatrix::identity(static_cast<std::size_t>(n))
                        : rref_basis(kernel_basis(QMatrix::from_rows(rows, static_cast<std::size_t>(n))));
        std::size_t dim_meet = u.basis.rows + w.rows - rank_of(stack(u.basis, w));
        require(mat.rank(subset) == u.k - static_cast<int>(dim_meet),
                "column rank differs from the kernel-intersection computation");
        ++triples;
    }
}

void criterion_plucker_welldefined() {
    Rng rng(909);
    for (int t = 0; t < 100; ++t) {
        int n = 2 + static_cast<int>(bounded_int(rng, 0, 3));
        int k = 1 + static_cast<int>(bounded_int(rng, 0, n - 1));
        Subspace u = random_subspace(k, n, 5, mix_seed(11011, static_cast<std::uint64_t>(t)));
        std::vector<Rational> canonical = plucker(u).coords;
        for (int j = 0; j < 3; ++j) {
            QMatrix rep = mul(random_invertible(k, rng), u.basis);
            require(normalize_primitive(plucker_minors(rep)) == canonical,
                    "plucker vector depends on the representative");
        }
    }
}

void criterion_determinism() {
    fs::path dir = fs::temp_directory_path() / "kadjoint_acceptance";
    fs::create_directories(dir);
    fs::path input = dir / "b4.json";
    {
        std::ofstream out(input);
        out << arrangement_to_json(boolean_arrangement(4)).dump();
    }
    auto run = [&](const std::string& cmd, const fs::path& out) {
        std::string full = std::string(KADJOINT_CLI_PATH) + " " + cmd + " > " + out.string() +
                           " 2> /dev/null";
        int status = std::system(full.c_str());
        require(status == 0, "sampling command failed: " + cmd);
        std::ifstream in(out);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    for (std::string cmd :
         {std::string("verify-equivalence --input ") + input.string() +
              " --k 2 --samples 30 --seed 5",
          std::string("verify-monotonicity --input ") + input.string() +
              " --k 2 --samples 30 --seed 5"}) {
        std::string a = run(cmd, dir / "a.json");
        std::string b = run(cmd, dir / "b.json");
        require(!a.empty() && a == b, "sampling command output is not byte-identical");
    }
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"rank-4 Boolean order-2 adjoint golden equations", 1.0, criterion_b4_golden},
        {"Boolean family adjoints up to rank 5", 5.0, criterion_boolean_family},
        {"order-1 adjoint identity", 1.0, criterion_order_one_identity},
        {"pairing equals stacked determinant on 500 seeded pairs", 10.0, criterion_pairing_suite},
        {"product adjoints factor through tensor blocks", 10.0, criterion_product_formula},
        {"three-way classification agrees on 3x200 samples", 60.0, criterion_three_way_equivalence},
        {"invariants anti-monotone across comparable strata", 30.0, criterion_antimonotonicity},
        {"whitney magnitudes equal NBC counts under 4 orders", 30.0, criterion_nbc},
        {"column-rank and kernel routes agree on 50 triples", 10.0, criterion_rank_formula},
        {"plucker vectors independent of representative (100x3)", 10.0, criterion_plucker_welldefined},
        {"seeded sampling commands reproduce byte-identical reports", 30.0, criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = true;
        try {
            c.run();
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.budget_seconds) {
            ok = false;
            note = "exceeded time budget";
        }
        std::printf("criterion %2zu [%s] %7.3fs (budget %4.0fs)  %s%s%s\n", i + 1,
                    ok ? "PASS" : "FAIL", secs, c.budget_seconds, c.name.c_str(),
                    note.empty() ? "" : " -- ", note.c_str());
        if (!ok) ++failures;
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
