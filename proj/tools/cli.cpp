#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "diffcolor/diffcolor.hpp"

namespace diffcolor::cli {
namespace {

struct Input {
    Graph graph;
    std::optional<CaterpillarShape> caterpillar;
    std::optional<SpiderShape> spider;
};

const std::vector<std::string> families = {"regular-cat", "caterpillar", "spider", "star",
                                           "sec53",       "path",        "random-cat"};

int need(const std::optional<int>& v, const char* flag, const std::string& family) {
    if (!v) throw ValidationError("family '" + family + "' needs " + flag);
    return *v;
}

Input generate(const RunConfig& cfg) {
    const auto& f = cfg.family;
    Input in;
    auto take_cat = [&](GeneratedCaterpillar g) {
        in.graph = std::move(g.graph);
        in.caterpillar = std::move(g.shape);
    };
    auto take_spider = [&](GeneratedSpider g) {
        in.graph = std::move(g.graph);
        in.spider = std::move(g.shape);
    };
    if (f == "regular-cat") {
        take_cat(gen_regular_caterpillar(need(cfg.spine, "--spine", f), need(cfg.legs, "--legs", f)));
    } else if (f == "caterpillar") {
        if (cfg.leg_list.empty()) throw ValidationError("family 'caterpillar' needs --leg-list");
        take_cat(gen_caterpillar(cfg.leg_list));
    } else if (f == "spider") {
        if (cfg.paths.empty()) throw ValidationError("family 'spider' needs --paths");
        take_spider(gen_spider(cfg.paths));
    } else if (f == "star") {
        if (cfg.paths.size() != 1) throw ValidationError("family 'star' needs --paths <count>");
        take_spider(gen_radius_star(need(cfg.k, "--k", f), cfg.paths.front()));
    } else if (f == "sec53") {
        take_cat(gen_alternating_caterpillar(need(cfg.k, "--k", f), need(cfg.delta, "--delta", f)));
    } else if (f == "path") {
        in.graph = gen_path(need(cfg.k, "--k", f));
    } else if (f == "random-cat") {
        if (!cfg.seed) throw ValidationError("family 'random-cat' needs --seed");
        std::mt19937_64 rng(*cfg.seed);
        take_cat(gen_random_caterpillar(rng, cfg.spine.value_or(30), cfg.legs.value_or(8)));
    } else {
        throw ValidationError("unknown family '" + f + "'");
    }
    if (in.graph.is_tree()) {
        if (!in.caterpillar) in.caterpillar = recognize_caterpillar(in.graph);
        if (!in.spider) in.spider = recognize_spider(in.graph);
    }
    return in;
}

Input load(const RunConfig& cfg) {
    if (cfg.in_path.has_value() == !cfg.family.empty())
        throw ValidationError("give exactly one input source: --in FILE or --family NAME");
    if (!cfg.family.empty()) return generate(cfg);

    std::ifstream file(*cfg.in_path);
    if (!file) throw ValidationError("cannot open " + *cfg.in_path);
    Input in;
    in.graph = parse_graph(file);
    if (in.graph.is_tree()) {
        in.caterpillar = recognize_caterpillar(in.graph);
        in.spider = recognize_spider(in.graph);
    }
    return in;
}

Labeling load_labeling(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open " + path);
    return parse_labeling(file);
}

const CaterpillarShape& need_caterpillar(const Input& in) {
    if (!in.caterpillar) throw ValidationError("input is not a caterpillar");
    return *in.caterpillar;
}

const SpiderShape& need_spider(const Input& in) {
    if (!in.spider) throw ValidationError("input is not a spider");
    return *in.spider;
}

SchemeResult run_scheme(const Input& in, const std::string& scheme) {
    if (scheme == "regular-cat") return label_regular_caterpillar(need_caterpillar(in));
    if (scheme == "spider-even") return label_spider_all_even(need_spider(in));
    if (scheme == "spider-odd") return label_spider_all_odd(need_spider(in));
    if (scheme == "general-cat") return label_general_caterpillar(need_caterpillar(in));
    if (scheme != "auto") throw ValidationError("unknown scheme '" + scheme + "'");

    if (in.caterpillar && in.caterpillar->is_regular() && in.caterpillar->max_legs() >= 1)
        return label_regular_caterpillar(*in.caterpillar);
    if (in.spider && in.spider->all_even()) return label_spider_all_even(*in.spider);
    if (in.spider && in.spider->all_odd()) return label_spider_all_odd(*in.spider);
    if (in.caterpillar && in.graph.order() >= 2) return label_general_caterpillar(*in.caterpillar);
    throw ValidationError("no labeling scheme applies: input is neither a caterpillar nor a "
                          "parity-uniform spider");
}

OracleOptions oracle_options(const RunConfig& cfg) {
    OracleOptions opt;
    opt.max_order = cfg.limit_n;
    opt.threads = cfg.threads;
    opt.timeout = std::chrono::milliseconds(cfg.timeout_ms);
    return opt;
}

void emit_labeling(std::ostream& out, const RunConfig& cfg, const Graph& g, const Labeling& c,
                   const json& as_json) {
    if (cfg.format == "plain")
        write_plain_labeling(out, c);
    else if (cfg.format == "dot")
        write_dot(out, g, &c);
    else
        out << as_json.dump() << '\n';
}

void execute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.command == "gen") {
        Input in = load(cfg);
        if (cfg.format == "dot")
            write_dot(out, in.graph);
        else
            write_graph(out, in.graph);
        return;
    }

    Input in = load(cfg);
    const Graph& g = in.graph;

    if (cfg.command == "label") {
        auto result = run_scheme(in, cfg.scheme);
        emit_labeling(out, cfg, g, result.labeling.labeling, scheme_json(result));
    } else if (cfg.command == "eval") {
        if (!cfg.labels_path) throw ValidationError("eval needs --labels FILE");
        auto evaluated = evaluate(g, load_labeling(*cfg.labels_path));
        if (cfg.format == "plain")
            out << evaluated.value << '\n';
        else
            out << labeling_json(evaluated).dump() << '\n';
    } else if (cfg.command == "bound") {
        auto report = upper_bound_report(g);
        if (cfg.format == "plain") {
            for (const auto& [name, value] : report.entries()) out << name << ' ' << value << '\n';
            out << "best " << report.best << '\n';
        } else {
            out << bounds_json(report).dump() << '\n';
        }
    } else if (cfg.command == "exact") {
        auto result = exact_dc(g, oracle_options(cfg));
        emit_labeling(out, cfg, g, result.witness, exact_json(result));
    } else if (cfg.command == "compare-mp") {
        const auto& shape = need_caterpillar(in);
        auto scheme = label_general_caterpillar(shape);
        json j{{"n", g.order()},
               {"delta", shape.max_legs()},
               {"mp", mp_value(g)},
               {"scheme_value", scheme.value()},
               {"guarantee", scheme.guarantee},
               {"upper_bound", upper_bound_report(g).best}};
        out << j.dump() << '\n';
    } else if (cfg.command == "export") {
        Labeling c = cfg.labels_path ? load_labeling(*cfg.labels_path)
                                     : run_scheme(in, cfg.scheme).labeling.labeling;
        if (auto check = is_valid_labeling(g, c); !check) throw ValidationError(check.violation);
        write_dot(out, g, &c);
    } else {
        throw ValidationError("unknown command '" + cfg.command + "'");
    }
}

void add_common(CLI::App& sub, RunConfig& cfg) {
    sub.add_option("--in", cfg.in_path, "Graph file (DIMACS-style)");
    sub.add_option("--out", cfg.out_path, "Write output here instead of stdout");
    sub.add_option("--family", cfg.family, "Inline generator")
        ->check(CLI::IsMember(families));
    sub.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "dot", "plain"}));
    sub.add_option("--seed", cfg.seed, "Seed for random generators");
    sub.add_option("--spine", cfg.spine, "Spine length (max spine for random-cat)");
    sub.add_option("--legs", cfg.legs, "Legs per spine vertex (max for random-cat)");
    sub.add_option("--leg-list", cfg.leg_list, "Leg counts, e.g. 1,3,1")->delimiter(',');
    sub.add_option("--paths", cfg.paths, "Spider path lengths, or path count for star")
        ->delimiter(',');
    sub.add_option("--k", cfg.k, "Family parameter k");
    sub.add_option("--delta", cfg.delta, "Family parameter delta");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Maximum differential coloring (antibandwidth) of caterpillars and spiders",
                 "diffcolor"};
    app.require_subcommand(1, 1);

    std::vector<CLI::App*> subs;
    auto* gen = app.add_subcommand("gen", "Emit a generated graph file");
    gen->add_option("family_name", cfg.family, "Generator family")->check(CLI::IsMember(families));
    subs.push_back(gen);
    auto* label = app.add_subcommand("label", "Run a labeling scheme");
    label->add_option("--scheme", cfg.scheme, "Scheme")
        ->check(CLI::IsMember({"auto", "regular-cat", "spider-even", "spider-odd", "general-cat"}));
    subs.push_back(label);
    auto* eval = app.add_subcommand("eval", "Evaluate a labeling");
    eval->add_option("--labels", cfg.labels_path, "Labeling file (JSON or plain)");
    subs.push_back(eval);
    subs.push_back(app.add_subcommand("bound", "Upper bounds"));
    auto* exact = app.add_subcommand("exact", "Exact value by exhaustive search");
    exact->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    exact->add_option("--limit-n", cfg.limit_n, "Refuse larger graphs")->check(CLI::PositiveNumber);
    exact->add_option("--timeout-ms", cfg.timeout_ms, "Give up after this long (0 = never)")
        ->check(CLI::NonNegativeNumber);
    subs.push_back(exact);
    subs.push_back(app.add_subcommand("compare-mp", "Bipartition value vs the caterpillar scheme"));
    auto* exp = app.add_subcommand("export", "DOT with labels");
    exp->add_option("--labels", cfg.labels_path, "Labeling file (JSON or plain)");
    exp->add_option("--scheme", cfg.scheme, "Scheme used when no --labels is given")
        ->check(CLI::IsMember({"auto", "regular-cat", "spider-even", "spider-odd", "general-cat"}));
    subs.push_back(exp);
    for (auto* sub : subs) add_common(*sub, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return exit_validation;
    }
    for (auto* sub : subs)
        if (sub->parsed()) cfg.command = sub->get_name();

    try {
        if (cfg.out_path) {
            std::ostringstream buffer;
            execute(cfg, buffer);
            std::ofstream file(*cfg.out_path);
            if (!file) throw ValidationError("cannot write " + *cfg.out_path);
            file << buffer.str();
        } else {
            execute(cfg, out);
        }
    } catch (const OracleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return exit_oracle_limit;
    } catch (const OracleTimeout& e) {
        err << "error: " << e.what() << '\n';
        return exit_oracle_limit;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return exit_validation;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_ok;
}

}  // namespace diffcolor::cli
