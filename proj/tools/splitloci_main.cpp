// Command-line front end: single-type queries (classify, group, weights),
// strata posets as DOT, and batch cross-validation of the two
// classification routes.
//
// Exit codes: 0 success/agreement, 1 usage error, 2 cross-check disagreement.

#include <CLI11.hpp>

#include <splitloci/json_io.hpp>
#include <splitloci/splitloci.hpp>

#include <iostream>
#include <string>

namespace {

using namespace splitloci;

struct RunConfig {
    std::string type_spec;
    long long rank_max = 3;
    long long spread_max = 6;
    long long max_codim = 1;
    long long slack = 0;
    std::string format;
    bool no_normalize = false;
};

SplittingType parse_or_exit(const std::string& spec) {
    try {
        return parse_splitting_type(spec);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        std::exit(1);
    }
}

int cmd_classify(const RunConfig& cfg) {
    const SplittingType e = parse_or_exit(cfg.type_spec);
    const CrosscheckReport report = crosscheck(e);
    if (cfg.format == "json") {
        json j = to_json(report);
        j["type"] = to_string(e);
        std::cout << j.dump() << "\n";
    } else {
        if (report.agree)
            std::cout << to_string(report.criterion) << " (agree)\n";
        else
            std::cout << to_string(report.criterion)
                      << " (DISAGREE: class group says " << to_string(report.class_group)
                      << ")\n";
    }
    return report.agree ? 0 : 2;
}

int cmd_group(const RunConfig& cfg) {
    const SplittingType e = parse_or_exit(cfg.type_spec);
    const AbelianGroup group = quotient_group(e);
    const DivisorClass omega = canonical_class(e);
    const std::optional<Int> order = element_order(e, omega);
    std::optional<AffineModel> model;
    if (e.rank() >= 2) model = choose_affine_model(e, cfg.slack);

    if (cfg.format == "json") {
        json j{{"type", to_string(e)},
               {"group", to_json(group)},
               {"canonical_class", to_json(omega)},
               {"omega_order", order ? to_json(*order) : json(nullptr)}};
        if (model) j["affine_model"] = to_json(*model);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "type " << to_string(e) << "  blocks " << block_form(e) << "\n";
        std::cout << "canonical class " << to_string(omega) << "\n";
        if (model)
            std::cout << "affine model M=" << model->m_twist << " D=" << model->d_twist
                      << " ambient=" << model->ambient_dim << " codim=" << model->codim
                      << " locus_dim=" << model->locus_dim << "\n";
        const std::string g = group.trivial() ? "trivial group" : to_string(group);
        std::cout << g << "; ω order " << to_string(order) << "\n";
    }
    return 0;
}

int cmd_poset(const RunConfig& cfg) {
    const SplittingType e = parse_or_exit(cfg.type_spec);
    std::cout << poset_dot(e, cfg.max_codim);
    return 0;
}

int cmd_weights(const RunConfig& cfg) {
    const SplittingType e = parse_or_exit(cfg.type_spec);
    const std::vector<WeightBlock> weights = torus_weights(e);
    if (cfg.format == "json") {
        std::cout << json{{"type", to_string(e)}, {"weights", to_json(weights)}}.dump() << "\n";
    } else if (cfg.format == "tsv") {
        std::cout << weights_tsv(weights, /*header=*/false);
    } else {
        std::cout << "# weights of " << to_string(e) << ", total dim " << u_invariant(e) << "\n";
        std::cout << weights_tsv(weights, /*header=*/true);
    }
    return 0;
}

int cmd_crosscheck(const RunConfig& cfg) {
    if (cfg.rank_max < 1 || cfg.spread_max < 0) {
        std::cerr << "error: bounds must be positive\n";
        return 1;
    }
    const std::vector<SplittingType> types =
        cfg.no_normalize ? enumerate_window_types(cfg.rank_max, cfg.spread_max)
                         : enumerate_normalized_types(cfg.rank_max, cfg.spread_max);
    std::vector<json> rows;
    long long disagreements = 0;
    for (const SplittingType& e : types) {
        const CrosscheckReport r = crosscheck(e);
        if (!r.agree) ++disagreements;
        if (cfg.format == "json" || !r.agree) {
            json j = to_json(r);
            j["type"] = to_string(e);
            rows.push_back(std::move(j));
        }
    }
    if (cfg.format == "json") {
        std::cout << json(rows).dump() << "\n";
    } else {
        std::cout << types.size() << (types.size() == 1 ? " type checked, " : " types checked, ")
                  << disagreements << (disagreements == 1 ? " disagreement" : " disagreements")
                  << "\n";
        for (const json& j : rows) std::cout << j.dump() << "\n";
    }
    return disagreements == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gorenstein classification of splitting loci of vector bundles on P^1"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_type_opt = [&cfg](CLI::App* sub) {
        sub->add_option("-e,--type", cfg.type_spec,
                        "splitting type as comma-separated integers, any order")
            ->required();
    };
    auto add_format_opt = [&cfg](CLI::App* sub, const std::string& def,
                                 const std::vector<std::string>& allowed) {
        cfg.format = def;
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember(allowed))
            ->default_val(def);
    };

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a splitting type by both routes");
    add_type_opt(classify_cmd);
    add_format_opt(classify_cmd, "text", {"text", "json"});

    CLI::App* group_cmd =
        app.add_subcommand("group", "class group, canonical class and its order");
    add_type_opt(group_cmd);
    add_format_opt(group_cmd, "text", {"text", "json"});
    group_cmd->add_option("--slack", cfg.slack, "extra twist added to the minimal affine model");

    CLI::App* poset_cmd = app.add_subcommand("poset", "strata poset as a DOT digraph");
    add_type_opt(poset_cmd);
    poset_cmd->add_option("-c,--max-codim", cfg.max_codim, "codimension budget")
        ->check(CLI::NonNegativeNumber);
    add_format_opt(poset_cmd, "dot", {"dot"});

    CLI::App* weights_cmd = app.add_subcommand("weights", "torus weight table of H^1 End");
    add_type_opt(weights_cmd);
    add_format_opt(weights_cmd, "text", {"text", "tsv", "json"});

    CLI::App* crosscheck_cmd =
        app.add_subcommand("crosscheck", "cross-validate both routes over an enumeration");
    crosscheck_cmd->add_option("-r,--rank-max", cfg.rank_max, "maximum rank")
        ->check(CLI::PositiveNumber);
    crosscheck_cmd->add_option("-s,--spread-max", cfg.spread_max, "maximum value spread")
        ->check(CLI::NonNegativeNumber);
    crosscheck_cmd->add_flag("--no-normalize", cfg.no_normalize,
                             "enumerate all types with values in [0, spread] instead of "
                             "anchoring the smallest value at 0");
    add_format_opt(crosscheck_cmd, "text", {"text", "json"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(cfg);
        if (group_cmd->parsed()) return cmd_group(cfg);
        if (poset_cmd->parsed()) return cmd_poset(cfg);
        if (weights_cmd->parsed()) return cmd_weights(cfg);
        if (crosscheck_cmd->parsed()) return cmd_crosscheck(cfg);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 1;
}
