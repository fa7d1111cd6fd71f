#include "kadj/decompose.hpp"

#include <algorithm>
#include <map>

#include "kadj/error.hpp"
#include "kadj/rng.hpp"

namespace kadj {

ClassifyContext make_context(const Arrangement& a, int k, std::size_t chain_cap) {
    if (!a.essential) throw InputError("classification requires an essential arrangement");
    if (k <= 0 || static_cast<std::size_t>(k) >= a.dim)
        throw RangeError("classification needs 0 < k < n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(a.dim));
    ClassifyContext ctx;
    ctx.a = a;
    ctx.k = k;
    ctx.lat = build_lattice(a);
    ctx.adj = k_adjoint(a, ctx.lat, k);
    ctx.adj_lat = build_lattice(ctx.adj.base);
    try {
        ctx.chains = maximal_chains(ctx.lat, chain_cap);
    } catch (const BudgetError& e) {
        ctx.chains_available = false;
        ctx.chain_warning = std::string(e.what()) +
                            "; degrading to two-way comparison without Schubert signatures";
    }
    return ctx;
}

namespace {

// Canonical form of a partition of 0..N-1: blocks sorted by their minimum.
std::vector<std::vector<int>> canonical_partition(const std::vector<int>& label_of_sample,
                                                  int distinct_labels) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(distinct_labels));
    for (std::size_t i = 0; i < label_of_sample.size(); ++i)
        blocks[static_cast<std::size_t>(label_of_sample[i])].push_back(static_cast<int>(i));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return blocks;
}

void compare_partitions(const std::vector<std::vector<int>>& p, const std::vector<std::vector<int>>& q,
                        const std::string& pname, const std::string& qname,
                        std::vector<std::string>& violations) {
    if (p == q) return;
    violations.push_back("partition by " + pname + " differs from partition by " + qname);
}

} // namespace

CensusReport classify_subspaces(const ClassifyContext& ctx, const std::vector<Subspace>& samples,
                                const std::string& id) {
    CensusReport rep;
    rep.arrangement_id = id;
    rep.k = ctx.k;
    rep.sample_count = static_cast<int>(samples.size());
    rep.chain_count = ctx.chains.size();
    rep.signature_available = ctx.chains_available;
    rep.total_adjoint_flats = ctx.adj_lat.flats.size();
    if (!ctx.chains_available) rep.warnings.push_back(ctx.chain_warning);

    struct Labels {
        int stratum;
        std::vector<std::uint64_t> fp;
        SchubertSignature sig;
    };
    std::vector<Labels> labels;
    std::map<int, int> stratum_to_record;

    for (std::size_t j = 0; j < samples.size(); ++j) {
        const Subspace& u = samples[j];
        if (u.k != ctx.k || static_cast<std::size_t>(u.n) != ctx.a.dim)
            throw DimensionError("sample " + std::to_string(j) + " is not a " +
                                 std::to_string(ctx.k) + "-subspace of F^" +
                                 std::to_string(ctx.a.dim));
        Labels lb;
        lb.stratum = locate_stratum(u, ctx.adj, ctx.adj_lat);
        VectorMatroid mat = matroid_of_restriction(ctx.a, u);
        lb.fp = bases(mat);
        if (ctx.chains_available) lb.sig = refined_signature(u, ctx.lat, ctx.chains);

        auto it = stratum_to_record.find(lb.stratum);
        if (it == stratum_to_record.end()) {
            StratumRecord rec;
            rec.stratum_flat = lb.stratum;
            rec.stratum_rank = ctx.adj_lat.flats[static_cast<std::size_t>(lb.stratum)].rank;
            rec.stratum_contains = ctx.adj_lat.flats[static_cast<std::size_t>(lb.stratum)].contains;
            rec.bases_fp = lb.fp;
            rec.signature = lb.sig;
            rec.representatives.push_back(u);
            rec.sample_indices.push_back(static_cast<int>(j));
            rec.invariants = compute_invariants(mat);
            rec.l_lower_flats = l_lower(u, ctx.lat);
            stratum_to_record.emplace(lb.stratum, static_cast<int>(rep.strata.size()));
            rep.strata.push_back(std::move(rec));
        } else {
            StratumRecord& rec = rep.strata[static_cast<std::size_t>(it->second)];
            if (rec.bases_fp != lb.fp)
                rep.violations.push_back("samples " + std::to_string(rec.sample_indices.front()) +
                                         " and " + std::to_string(j) +
                                         " share a stratum but realize different matroids");
            if (ctx.chains_available && !(rec.signature == lb.sig))
                rep.violations.push_back("samples " + std::to_string(rec.sample_indices.front()) +
                                         " and " + std::to_string(j) +
                                         " share a stratum but have different Schubert signatures");
            rec.representatives.push_back(u);
            rec.sample_indices.push_back(static_cast<int>(j));
        }
        labels.push_back(std::move(lb));
    }

    // The three labelings must induce the same partition of the sample set.
    std::map<int, int> sid;
    std::map<std::vector<std::uint64_t>, int> fid;
    std::map<SchubertSignature, int> gid;
    std::vector<int> by_stratum, by_matroid, by_signature;
    for (const Labels& lb : labels) {
        by_stratum.push_back(sid.emplace(lb.stratum, static_cast<int>(sid.size())).first->second);
        by_matroid.push_back(fid.emplace(lb.fp, static_cast<int>(fid.size())).first->second);
        if (ctx.chains_available)
            by_signature.push_back(gid.emplace(lb.sig, static_cast<int>(gid.size())).first->second);
    }
    auto ps = canonical_partition(by_stratum, static_cast<int>(sid.size()));
    auto pm = canonical_partition(by_matroid, static_cast<int>(fid.size()));
    compare_partitions(ps, pm, "adjoint stratum", "matroid", rep.violations);
    if (ctx.chains_available) {
        auto pg = canonical_partition(by_signature, static_cast<int>(gid.size()));
        compare_partitions(ps, pg, "adjoint stratum", "Schubert signature", rep.violations);
        compare_partitions(pm, pg, "matroid", "Schubert signature", rep.violations);
    }

    // Deterministic stratum order: by flat index in the adjoint lattice.
    std::sort(rep.strata.begin(), rep.strata.end(),
              [](const StratumRecord& a, const StratumRecord& b) {
                  return a.stratum_flat < b.stratum_flat;
              });
    return rep;
}

CensusReport classify_samples(const Arrangement& a, int k, int count, std::uint64_t seed,
                              long long bound, std::size_t chain_cap, const std::string& id) {
    ClassifyContext ctx = make_context(a, k, chain_cap);
    std::vector<Subspace> samples;
    samples.reserve(static_cast<std::size_t>(count));
    for (int j = 0; j < count; ++j)
        samples.push_back(random_subspace(k, static_cast<int>(a.dim), bound,
                                          mix_seed(seed, static_cast<std::uint64_t>(j))));
    CensusReport rep = classify_subspaces(ctx, samples, id);
    rep.seed = seed;
    rep.bound = bound;
    comparable_pairs(rep, ctx.adj_lat);
    return rep;
}

std::vector<std::pair<int, int>> comparable_pairs(CensusReport& report,
                                                  const IntersectionLattice& adj_lat) {
    report.comparable_pairs.clear();
    for (std::size_t i = 0; i < report.strata.size(); ++i)
        for (std::size_t j = 0; j < report.strata.size(); ++j)
            if (adj_lat.leq(report.strata[i].stratum_flat, report.strata[j].stratum_flat))
                report.comparable_pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return report.comparable_pairs;
}

std::vector<std::string> verify_antimonotonicity(CensusReport& report) {
    std::vector<std::string> out;
    for (const auto& [i, j] : report.comparable_pairs) {
        const MatroidInvariants& lo = report.strata[static_cast<std::size_t>(i)].invariants;
        const MatroidInvariants& hi = report.strata[static_cast<std::size_t>(j)].invariants;
        for (std::size_t t = 0; t < lo.independence_numbers.size(); ++t) {
            long long a = lo.independence_numbers[t];
            long long b = t < hi.independence_numbers.size() ? hi.independence_numbers[t] : 0;
            if (a < b)
                out.push_back("independence number I_" + std::to_string(t) +
                              " increases from stratum " + std::to_string(i) + " to " +
                              std::to_string(j));
        }
        for (std::size_t t = 0; t < lo.whitney.size(); ++t) {
            Integer a = abs(lo.whitney[t]);
            Integer b = t < hi.whitney.size() ? abs(hi.whitney[t]) : Integer(0);
            if (a < b)
                out.push_back("|w_" + std::to_string(t) + "| increases from stratum " +
                              std::to_string(i) + " to " + std::to_string(j));
        }
    }
    report.violations.insert(report.violations.end(), out.begin(), out.end());
    return out;
}

std::vector<std::string> verify_lower_set_inclusion(CensusReport& report) {
    std::vector<std::string> out;
    for (const auto& [i, j] : report.comparable_pairs) {
        const auto& lo = report.strata[static_cast<std::size_t>(i)].l_lower_flats;
        const auto& hi = report.strata[static_cast<std::size_t>(j)].l_lower_flats;
        if (!std::includes(lo.begin(), lo.end(), hi.begin(), hi.end()))
            out.push_back("complement set of stratum " + std::to_string(j) +
                          " is not contained in that of stratum " + std::to_string(i));
    }
    report.violations.insert(report.violations.end(), out.begin(), out.end());
    return out;
}

} // namespace kadj
