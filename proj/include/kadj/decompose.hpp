#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kadj/grassmann.hpp"
#include "kadj/matroid.hpp"

namespace kadj {

// Everything needed to classify subspaces against one arrangement: its
// lattice, the k-adjoint with its lattice, and the enumerated chains.
struct ClassifyContext {
    Arrangement a;
    int k = 0;
    IntersectionLattice lat;
    AdjointArrangement adj;
    IntersectionLattice adj_lat;
    std::vector<Flag> chains;
    bool chains_available = true;
    std::string chain_warning;
};

ClassifyContext make_context(const Arrangement& a, int k, std::size_t chain_cap = 10000);

// One realized stratum: every representative must agree on all three labels
// (that agreement is asserted at insertion and reported as a violation
// otherwise).
struct StratumRecord {
    int stratum_flat = -1;                    // index into adj_lat.flats
    int stratum_rank = 0;
    std::vector<int> stratum_contains;        // adjoint hyperplanes through the stratum
    std::vector<std::uint64_t> bases_fp;      // sorted basis list of the matroid
    SchubertSignature signature;
    std::vector<Subspace> representatives;
    std::vector<int> sample_indices;
    MatroidInvariants invariants;
    std::vector<int> l_lower_flats;           // rank-k flats complementing the stratum
};

struct CensusReport {
    std::string arrangement_id;
    int k = 0;
    int sample_count = 0;
    std::uint64_t seed = 0;
    long long bound = 0;
    std::size_t chain_count = 0;
    bool signature_available = true;
    std::vector<std::string> warnings;
    std::vector<StratumRecord> strata;                // ordered by stratum flat index
    std::vector<std::pair<int, int>> comparable_pairs; // (i, j) strata with P_i <= P_j
    std::vector<std::string> violations;
    std::size_t total_adjoint_flats = 0;
};

// Classifies explicit subspaces (used by tests with hand-picked inputs).
CensusReport classify_subspaces(const ClassifyContext& ctx, const std::vector<Subspace>& samples,
                                const std::string& id);

// Draws `count` seeded subspaces and classifies them; the three partitions
// (adjoint stratum / matroid / refined Schubert signature) are compared as
// set partitions of the sample indices and any disagreement is recorded.
CensusReport classify_samples(const Arrangement& a, int k, int count, std::uint64_t seed,
                              long long bound, std::size_t chain_cap = 10000,
                              const std::string& id = "arrangement");

// All ordered pairs of realized strata comparable in the adjoint lattice
// (reverse inclusion), equal pairs included; stored into the report.
std::vector<std::pair<int, int>> comparable_pairs(CensusReport& report,
                                                  const IntersectionLattice& adj_lat);

// Componentwise anti-monotonicity of I_i and |w_i| (ground-set semantics)
// along every comparable pair; returns violations and appends them.
std::vector<std::string> verify_antimonotonicity(CensusReport& report);

// Inclusion of complement sets along every comparable pair: the flats
// complementing a representative of the larger stratum must complement the
// smaller stratum's representative too.
std::vector<std::string> verify_lower_set_inclusion(CensusReport& report);

} // namespace kadj
