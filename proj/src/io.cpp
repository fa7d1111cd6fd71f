#include "kadj/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "kadj/error.hpp"

namespace kadj {

namespace {

Json integer_to_json(const Integer& z) {
    static const Integer lo = std::numeric_limits<long long>::min();
    static const Integer hi = std::numeric_limits<long long>::max();
    if (z >= lo && z <= hi) return static_cast<long long>(z);
    return z.str();
}

Json int_set_1based(const std::vector<int>& s) {
    Json a = Json::array();
    for (int v : s) a.push_back(v + 1);
    return a;
}

Json poly_to_json(const IntPoly& p, int degree) {
    Json a = Json::array();
    for (const Integer& c : p.coeffs_high_to_low(degree)) a.push_back(integer_to_json(c));
    return a;
}

std::string subset_key(const std::vector<int>& subset) {
    std::string s = "{";
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(subset[i]);
    }
    return s + "}";
}

const Json& require_field(const Json& j, const std::string& name) {
    if (!j.is_object() || !j.contains(name))
        throw InputError("missing required field '" + name + "'");
    return j.at(name);
}

std::size_t require_count(const Json& j, const std::string& name) {
    const Json& f = require_field(j, name);
    if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
        throw InputError(name + ": expected a non-negative integer");
    return f.get<std::size_t>();
}

std::vector<Rational> rational_row(const Json& row, const std::string& field) {
    if (!row.is_array()) throw InputError(field + ": expected an array of rational strings");
    std::vector<Rational> out;
    for (std::size_t i = 0; i < row.size(); ++i) {
        const Json& cell = row[i];
        std::string loc = field + "[" + std::to_string(i) + "]";
        if (cell.is_string()) {
            out.push_back(parse_rational(cell.get<std::string>(), loc));
        } else if (cell.is_number_integer()) {
            out.push_back(Rational(cell.get<long long>()));
        } else {
            throw InputError(loc + ": expected a rational string");
        }
    }
    return out;
}

} // namespace

Json rational_vector_to_json(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const Rational& q : v) a.push_back(to_string(q));
    return a;
}

Json matrix_to_json(const QMatrix& m) {
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows; ++i) a.push_back(rational_vector_to_json(m.row(i)));
    return a;
}

Arrangement arrangement_from_json(const Json& j, bool allow_non_essential) {
    std::size_t dim = require_count(j, "dim");
    const Json& hs = require_field(j, "hyperplanes");
    if (!hs.is_array()) throw InputError("hyperplanes: expected an array");
    std::vector<std::vector<Rational>> normals;
    for (std::size_t i = 0; i < hs.size(); ++i)
        normals.push_back(rational_row(hs[i], "hyperplanes[" + std::to_string(i) + "]"));
    return build_arrangement(dim, normals, allow_non_essential);
}

Json arrangement_to_json(const Arrangement& a) {
    Json j;
    j["dim"] = a.dim;
    Json hs = Json::array();
    for (const Hyperplane& h : a.hyperplanes) hs.push_back(rational_vector_to_json(h.normal));
    j["hyperplanes"] = hs;
    return j;
}

Subspace subspace_from_json(const Json& j) {
    std::size_t k = require_count(j, "k");
    std::size_t n = require_count(j, "n");
    const Json& rows = require_field(j, "basis");
    if (!rows.is_array() || rows.size() != k)
        throw InputError("basis: expected " + std::to_string(k) + " rows");
    std::vector<std::vector<Rational>> v;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        v.push_back(rational_row(rows[i], "basis[" + std::to_string(i) + "]"));
        if (v.back().size() != n)
            throw InputError("basis[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                             " entries");
    }
    QMatrix m = k == 0 ? QMatrix(0, n) : QMatrix::from_rows(v, n);
    if (rank_of(m) != k) throw InputError("basis: rows are linearly dependent");
    return Subspace::from_rows(m);
}

Json subspace_to_json(const Subspace& u) {
    Json j;
    j["k"] = u.k;
    j["n"] = u.n;
    j["basis"] = matrix_to_json(u.basis);
    return j;
}

Json lattice_to_json(const IntersectionLattice& l) {
    Json j;
    j["dim"] = l.dim();
    j["essential"] = l.arrangement.essential;
    Json flats = Json::array();
    for (std::size_t i = 0; i < l.flats.size(); ++i) {
        Json f;
        f["rank"] = l.flats[i].rank;
        f["contains"] = int_set_1based(l.flats[i].contains);
        f["basis"] = matrix_to_json(l.flats[i].basis);
        f["mobius"] = integer_to_json(l.mobius[i]);
        flats.push_back(std::move(f));
    }
    j["flats"] = flats;
    Json hasse = Json::array();
    for (const auto& [lo, hi] : l.hasse_edges) hasse.push_back(Json::array({lo, hi}));
    j["hasse"] = hasse;
    return j;
}

Json adjoint_to_json(const AdjointArrangement& adj, const IntersectionLattice& lat) {
    Json out = Json::array();
    for (const AdjointHyperplane& h : adj.hyperplanes) {
        Json e;
        e["flat"] = int_set_1based(lat.flats[static_cast<std::size_t>(h.source_flat)].contains);
        Json coeffs = Json::object();
        for (std::size_t p = 0; p < adj.index.size(); ++p)
            if (h.normalized[p] != 0)
                coeffs[subset_key(adj.index.subsets[p])] = to_string(h.normalized[p]);
        e["coeffs"] = coeffs;
        out.push_back(std::move(e));
    }
    return out;
}

Json restriction_to_json(const RestrictionResult& r) {
    Json j = arrangement_to_json(r.restricted);
    Json map = Json::array();
    for (int v : r.index_map) {
        if (v < 0)
            map.push_back(nullptr); // hyperplane contains U
        else
            map.push_back(v + 1);
    }
    j["index_map"] = map;
    return j;
}

Json charpoly_to_json(const IntersectionLattice& l) {
    Json j;
    j["dim"] = l.dim();
    j["char_poly"] = poly_to_json(characteristic_polynomial(l), static_cast<int>(l.dim()));
    return j;
}

Json stratum_report_json(const Subspace& u, const ClassifyContext& ctx) {
    PluckerVector pv = plucker(u);
    int p = locate_stratum(u, ctx.adj, ctx.adj_lat);
    const Flat& flat = ctx.adj_lat.flats[static_cast<std::size_t>(p)];
    Json j;
    j["plucker"] = rational_vector_to_json(pv.coords);
    j["stratum_rank"] = flat.rank;
    j["stratum_contains"] = int_set_1based(flat.contains);
    SchubertSignature sig = refined_signature(u, ctx.lat, ctx.chains);
    Json sch = Json::object();
    for (std::size_t c = 0; c < sig.per_chain.size(); ++c) {
        Json sym = Json::array();
        for (int v : sig.per_chain[c]) sym.push_back(v);
        sch[std::to_string(c)] = sym;
    }
    j["schubert"] = sch;
    return j;
}

Json matroid_report_json(const Arrangement& a, const Subspace& u,
                         const std::vector<int>& nbc_order) {
    VectorMatroid m = matroid_of_restriction(a, u);
    MatroidInvariants inv = compute_invariants(m);
    std::vector<long long> nbc = nbc_counts(m, nbc_order);

    // Invariants of the deduplicated restriction live on a smaller ground
    // set; its independence numbers differ from the ground-set-[m] ones.
    RestrictionResult res = restriction(a, u.basis);
    std::vector<std::vector<Rational>> cols;
    for (const Hyperplane& h : res.restricted.hyperplanes) cols.push_back(h.normal);
    VectorMatroid restricted = VectorMatroid::from_columns(cols, u.k);

    Json j;
    j["rank"] = inv.rank;
    j["loops"] = int_set_1based(inv.loops);
    Json pcs = Json::array();
    for (const auto& pc : inv.parallel_classes) pcs.push_back(int_set_1based(pc));
    j["parallel_classes"] = pcs;
    j["bases_count"] = inv.bases_count;
    Json I = Json::array();
    for (long long v : inv.independence_numbers) I.push_back(v);
    j["I"] = I;
    Json Ir = Json::array();
    for (long long v : independence_numbers(restricted)) Ir.push_back(v);
    j["I_restricted"] = Ir;
    Json w = Json::array();
    for (const Integer& v : inv.whitney) w.push_back(integer_to_json(v));
    j["w"] = w;
    j["char_poly"] = poly_to_json(inv.char_poly, inv.rank);
    Json nb = Json::array();
    for (long long v : nbc) nb.push_back(v);
    j["nbc"] = nb;
    j["nbc_char_poly"] = poly_to_json(inv.nbc_poly, inv.rank);
    return j;
}

Json census_to_json(const CensusReport& rep) {
    Json j;
    j["arrangement"] = rep.arrangement_id;
    j["k"] = rep.k;
    j["samples"] = rep.sample_count;
    j["seed"] = rep.seed;
    j["bound"] = rep.bound;
    j["chain_count"] = rep.chain_count;
    j["signature_available"] = rep.signature_available;
    Json warn = Json::array();
    for (const std::string& w : rep.warnings) warn.push_back(w);
    j["warnings"] = warn;
    j["coverage"] = Json{{"realized_strata", rep.strata.size()},
                         {"adjoint_flats", rep.total_adjoint_flats}};
    Json strata = Json::array();
    for (const StratumRecord& s : rep.strata) {
        Json e;
        e["stratum_flat"] = s.stratum_flat;
        e["stratum_rank"] = s.stratum_rank;
        e["stratum_contains"] = int_set_1based(s.stratum_contains);
        Json samples = Json::array();
        for (int v : s.sample_indices) samples.push_back(v);
        e["samples"] = samples;
        e["representative_basis"] = matrix_to_json(s.representatives.front().basis);
        e["bases_count"] = s.invariants.bases_count;
        Json I = Json::array();
        for (long long v : s.invariants.independence_numbers) I.push_back(v);
        e["I"] = I;
        Json w = Json::array();
        for (const Integer& v : s.invariants.whitney) w.push_back(integer_to_json(v));
        e["w"] = w;
        e["char_poly"] = poly_to_json(s.invariants.char_poly, s.invariants.rank);
        Json nb = Json::array();
        for (long long v : s.invariants.nbc) nb.push_back(v);
        e["nbc"] = nb;
        e["loops"] = int_set_1based(s.invariants.loops);
        e["l_lower"] = int_set_1based(s.l_lower_flats);
        strata.push_back(std::move(e));
    }
    j["strata"] = strata;
    Json pairs = Json::array();
    for (const auto& [a, b] : rep.comparable_pairs) pairs.push_back(Json::array({a, b}));
    j["comparable_pairs"] = pairs;
    Json viol = Json::array();
    for (const std::string& v : rep.violations) viol.push_back(v);
    j["violations"] = viol;
    return j;
}

Json load_json(const std::string& path) {
    try {
        if (path == "-") return Json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open input file '" + path + "'");
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

namespace {

std::string join_csv(const Json& arr) {
    std::string s;
    for (const auto& v : arr) {
        if (!s.empty()) s += ", ";
        s += v.is_string() ? v.get<std::string>() : v.dump();
    }
    return s;
}

} // namespace

std::string render_text(const std::string& kind, const Json& j) {
    std::ostringstream os;
    if (kind == "arrangement") {
        os << "arrangement in dimension " << j["dim"] << " with "
           << j["hyperplanes"].size() << " hyperplanes\n";
        int i = 1;
        for (const auto& h : j["hyperplanes"]) os << "  H" << i++ << ": (" << join_csv(h) << ")\n";
        if (j.contains("index_map")) os << "index map: " << j["index_map"].dump() << "\n";
    } else if (kind == "lattice") {
        os << "intersection lattice, dimension " << j["dim"] << ", " << j["flats"].size()
           << " flats\n";
        int i = 0;
        for (const auto& f : j["flats"]) {
            os << "  [" << i++ << "] rank " << f["rank"] << "  mobius " << f["mobius"]
               << "  contains {" << join_csv(f["contains"]) << "}\n";
        }
    } else if (kind == "adjoint") {
        os << "adjoint arrangement with " << j.size() << " hyperplanes\n";
        int i = 1;
        for (const auto& h : j) {
            os << "  H" << i++ << " (flat {" << join_csv(h["flat"]) << "}):";
            for (auto it = h["coeffs"].begin(); it != h["coeffs"].end(); ++it)
                os << " " << it.value().get<std::string>() << "*x" << it.key();
            os << " = 0\n";
        }
    } else if (kind == "stratum") {
        os << "plucker: (" << join_csv(j["plucker"]) << ")\n"
           << "stratum rank: " << j["stratum_rank"] << "\n"
           << "stratum contains adjoint hyperplanes {" << join_csv(j["stratum_contains"]) << "}\n"
           << "schubert symbols per chain:\n";
        for (auto it = j["schubert"].begin(); it != j["schubert"].end(); ++it)
            os << "  chain " << it.key() << ": {" << join_csv(it.value()) << "}\n";
    } else if (kind == "matroid") {
        os << "rank: " << j["rank"] << "\n"
           << "loops: {" << join_csv(j["loops"]) << "}\n";
        os << "parallel classes:";
        for (const auto& pc : j["parallel_classes"]) os << " {" << join_csv(pc) << "}";
        os << "\nbases: " << j["bases_count"] << "\n"
           << "I (ground set): [" << join_csv(j["I"]) << "]\n"
           << "I (restricted): [" << join_csv(j["I_restricted"]) << "]\n"
           << "w: [" << join_csv(j["w"]) << "]\n"
           << "char poly coeffs (high to low): [" << join_csv(j["char_poly"]) << "]\n"
           << "nbc: [" << join_csv(j["nbc"]) << "]\n";
    } else if (kind == "charpoly") {
        os << "char poly coeffs (high to low): [" << join_csv(j["char_poly"]) << "]\n";
    } else if (kind == "census") {
        os << "arrangement: " << j["arrangement"].get<std::string>() << "  k=" << j["k"]
           << "  samples=" << j["samples"] << "\n"
           << "realized strata: " << j["coverage"]["realized_strata"] << " of "
           << j["coverage"]["adjoint_flats"] << " adjoint flats\n";
        for (const auto& s : j["strata"])
            os << "  flat " << s["stratum_flat"] << ": " << s["samples"].size()
               << " samples, I=[" << join_csv(s["I"]) << "], w=[" << join_csv(s["w"]) << "]\n";
        os << "comparable pairs: " << j["comparable_pairs"].size() << "\n";
        os << "violations: " << j["violations"].size() << "\n";
        for (const auto& v : j["violations"]) os << "  " << v.get<std::string>() << "\n";
    } else if (kind == "boolean") {
        os << "n=" << j["n"] << " k=" << j["k"] << " adjoint hyperplanes: "
           << j["adjoint_hyperplanes"] << " expected: " << j["expected_hyperplanes"]
           << " match: " << (j["match"].get<bool>() ? "yes" : "no") << "\n";
    } else {
        os << j.dump(2) << "\n";
    }
    return os.str();
}

} // namespace kadj
