#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kadj/decompose.hpp"

namespace kadj {

// Insertion-ordered JSON so reports serialize byte-identically for identical
// inputs; every rational crosses the wire as "p" or "p/q".
using Json = nlohmann::ordered_json;

Json rational_vector_to_json(const std::vector<Rational>& v);
Json matrix_to_json(const QMatrix& m);

Arrangement arrangement_from_json(const Json& j, bool allow_non_essential = false);
Json arrangement_to_json(const Arrangement& a);

Subspace subspace_from_json(const Json& j);
Json subspace_to_json(const Subspace& u);

Json lattice_to_json(const IntersectionLattice& l);
Json adjoint_to_json(const AdjointArrangement& adj, const IntersectionLattice& lat);
Json restriction_to_json(const RestrictionResult& r);
Json charpoly_to_json(const IntersectionLattice& l);

Json stratum_report_json(const Subspace& u, const ClassifyContext& ctx);
Json matroid_report_json(const Arrangement& a, const Subspace& u,
                         const std::vector<int>& nbc_order);
Json census_to_json(const CensusReport& rep);

// Plain-text renderings for --format text.
std::string render_text(const std::string& kind, const Json& j);

// File or "-" for stdin.
Json load_json(const std::string& path);

} // namespace kadj
