#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kadj/io.hpp"

using namespace kadj;

namespace {

struct Common {
    std::string format = "json";
};

void emit(const Common& c, const std::string& kind, const Json& j) {
    if (c.format == "text")
        std::cout << render_text(kind, j);
    else
        std::cout << j.dump(2) << "\n";
}

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

std::vector<int> parse_nbc_order(const std::string& s, int m) {
    std::vector<int> order;
    std::string cur;
    for (char ch : s + ",") {
        if (ch == ',') {
            if (cur.empty()) throw InputError("--nbc-order: empty entry");
            try {
                order.push_back(std::stoi(cur) - 1);
            } catch (...) {
                throw InputError("--nbc-order: cannot parse '" + cur + "'");
            }
            cur.clear();
        } else {
            cur += ch;
        }
    }
    std::vector<bool> on(static_cast<std::size_t>(m), false);
    if (static_cast<int>(order.size()) != m)
        throw InputError("--nbc-order: expected a permutation of 1.." + std::to_string(m));
    for (int e : order) {
        if (e < 0 || e >= m || on[static_cast<std::size_t>(e)])
            throw InputError("--nbc-order: expected a permutation of 1.." + std::to_string(m));
        on[static_cast<std::size_t>(e)] = true;
    }
    return order;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact k-adjoint arrangements, Grassmannian strata and matroid invariants"};
    app.require_subcommand(1);

    std::string input, subspace_path, input_b;
    int k = 0, n = 0, samples = 0;
    std::uint64_t seed = 0;
    long long bound = 5;
    std::size_t chain_cap = 10000;
    std::string nbc_order_str;

    Common c_lattice, c_adjoint, c_restrict, c_stratum, c_matroid, c_charpoly, c_product,
        c_tensor, c_veq, c_vmono, c_boolean;

    auto* cmd_lattice = app.add_subcommand("lattice", "Intersection lattice of an arrangement");
    cmd_lattice->add_option("--input", input, "Arrangement JSON file (- for stdin)")->required();
    add_format(cmd_lattice, c_lattice);

    auto* cmd_adjoint = app.add_subcommand("adjoint", "k-adjoint of an arrangement");
    cmd_adjoint->add_option("--input", input)->required();
    cmd_adjoint->add_option("--k", k, "Adjoint order")->required();
    add_format(cmd_adjoint, c_adjoint);

    auto* cmd_restrict = app.add_subcommand("restrict", "Restriction of an arrangement to a subspace");
    cmd_restrict->add_option("--input", input)->required();
    cmd_restrict->add_option("--subspace", subspace_path, "Subspace JSON file")->required();
    add_format(cmd_restrict, c_restrict);

    auto* cmd_stratum = app.add_subcommand("stratum", "Adjoint stratum and Schubert symbols of a subspace");
    cmd_stratum->add_option("--input", input)->required();
    cmd_stratum->add_option("--subspace", subspace_path)->required();
    cmd_stratum->add_option("--chain-cap", chain_cap, "Maximal chain budget")->capture_default_str();
    add_format(cmd_stratum, c_stratum);

    auto* cmd_matroid = app.add_subcommand("matroid", "Matroid of a restriction and its invariants");
    cmd_matroid->add_option("--input", input)->required();
    cmd_matroid->add_option("--subspace", subspace_path)->required();
    cmd_matroid->add_option("--nbc-order", nbc_order_str,
                            "Total order for broken circuits, e.g. 2,1,3,4");
    add_format(cmd_matroid, c_matroid);

    auto* cmd_charpoly = app.add_subcommand("charpoly", "Characteristic polynomial of an arrangement");
    cmd_charpoly->add_option("--input", input)->required();
    add_format(cmd_charpoly, c_charpoly);

    auto* cmd_product = app.add_subcommand("product", "Product of two arrangements");
    cmd_product->add_option("--a", input, "First arrangement JSON")->required();
    cmd_product->add_option("--b", input_b, "Second arrangement JSON")->required();
    add_format(cmd_product, c_product);

    auto* cmd_tensor = app.add_subcommand("tensor", "Tensor product of two arrangements");
    cmd_tensor->add_option("--a", input)->required();
    cmd_tensor->add_option("--b", input_b)->required();
    add_format(cmd_tensor, c_tensor);

    auto* cmd_veq = app.add_subcommand(
        "verify-equivalence", "Sample subspaces and check the three classifications agree");
    cmd_veq->add_option("--input", input)->required();
    cmd_veq->add_option("--k", k)->required();
    cmd_veq->add_option("--samples", samples)->required();
    cmd_veq->add_option("--seed", seed, "Sampling seed (mandatory, no wall-clock default)")->required();
    cmd_veq->add_option("--bound", bound)->capture_default_str();
    cmd_veq->add_option("--chain-cap", chain_cap)->capture_default_str();
    add_format(cmd_veq, c_veq);

    auto* cmd_vmono = app.add_subcommand(
        "verify-monotonicity", "Check anti-monotonicity of invariants across comparable strata");
    cmd_vmono->add_option("--input", input)->required();
    cmd_vmono->add_option("--k", k)->required();
    cmd_vmono->add_option("--samples", samples)->required();
    cmd_vmono->add_option("--seed", seed)->required();
    cmd_vmono->add_option("--bound", bound)->capture_default_str();
    cmd_vmono->add_option("--chain-cap", chain_cap)->capture_default_str();
    add_format(cmd_vmono, c_vmono);

    auto* cmd_boolean = app.add_subcommand(
        "boolean", "Self-check: the k-adjoint of the Boolean arrangement is Boolean");
    cmd_boolean->add_option("--n", n)->required();
    cmd_boolean->add_option("--k", k)->required();
    add_format(cmd_boolean, c_boolean);

    try {
        app.parse(argc, argv);

        if (cmd_lattice->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            emit(c_lattice, "lattice", lattice_to_json(build_lattice(a)));
        } else if (cmd_adjoint->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            IntersectionLattice lat = build_lattice(a);
            AdjointArrangement adj = k_adjoint(a, lat, k);
            emit(c_adjoint, "adjoint", adjoint_to_json(adj, lat));
        } else if (cmd_restrict->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            Subspace u = subspace_from_json(load_json(subspace_path));
            emit(c_restrict, "arrangement", restriction_to_json(restriction(a, u.basis)));
        } else if (cmd_stratum->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            Subspace u = subspace_from_json(load_json(subspace_path));
            ClassifyContext ctx = make_context(a, u.k, chain_cap);
            if (!ctx.chains_available) throw BudgetError(ctx.chain_warning);
            emit(c_stratum, "stratum", stratum_report_json(u, ctx));
        } else if (cmd_matroid->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            Subspace u = subspace_from_json(load_json(subspace_path));
            std::vector<int> order = nbc_order_str.empty()
                                         ? natural_order(static_cast<int>(a.size()))
                                         : parse_nbc_order(nbc_order_str, static_cast<int>(a.size()));
            emit(c_matroid, "matroid", matroid_report_json(a, u, order));
        } else if (cmd_charpoly->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            emit(c_charpoly, "charpoly", charpoly_to_json(build_lattice(a)));
        } else if (cmd_product->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input), true);
            Arrangement b = arrangement_from_json(load_json(input_b), true);
            emit(c_product, "arrangement", arrangement_to_json(product(a, b)));
        } else if (cmd_tensor->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input), true);
            Arrangement b = arrangement_from_json(load_json(input_b), true);
            emit(c_tensor, "arrangement", arrangement_to_json(tensor(a, b)));
        } else if (cmd_veq->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            CensusReport rep = classify_samples(a, k, samples, seed, bound, chain_cap, input);
            emit(c_veq, "census", census_to_json(rep));
            return rep.violations.empty() ? 0 : 1;
        } else if (cmd_vmono->parsed()) {
            Arrangement a = arrangement_from_json(load_json(input));
            CensusReport rep = classify_samples(a, k, samples, seed, bound, chain_cap, input);
            verify_antimonotonicity(rep);
            verify_lower_set_inclusion(rep);
            emit(c_vmono, "census", census_to_json(rep));
            return rep.violations.empty() ? 0 : 1;
        } else if (cmd_boolean->parsed()) {
            Arrangement bn = boolean_arrangement(static_cast<std::size_t>(n));
            AdjointArrangement adj = k_adjoint(bn, k);
            Arrangement expected =
                boolean_arrangement(static_cast<std::size_t>(binom(static_cast<unsigned>(n),
                                                                   static_cast<unsigned>(k))));
            std::vector<Hyperplane> got = adj.base.hyperplanes, want = expected.hyperplanes;
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            bool match = got == want;
            Json j;
            j["n"] = n;
            j["k"] = k;
            j["adjoint_hyperplanes"] = adj.base.size();
            j["expected_hyperplanes"] = expected.size();
            j["match"] = match;
            emit(c_boolean, "boolean", j);
            return match ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
