#include "listpack/cli.hpp"

#include "record.hpp"

#include "listpack/constructive.hpp"
#include "listpack/exact.hpp"
#include "listpack/generators.hpp"
#include "listpack/io.hpp"
#include "listpack/matrix.hpp"
#include "listpack/probabilistic.hpp"
#include "listpack/version.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace listpack::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t default_budget() {
    if (const char* env = std::getenv("LISTPACK_BUDGET")) {
        try {
            std::size_t used = 0;
            auto value = std::stoull(env, &used);
            if (used == std::string(env).size() && value > 0)
                return value;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("LISTPACK_BUDGET must be a positive integer, got '") + env + "'");
    }
    return exact::default_node_budget;
}

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }
    return io::read_source(path);
}

void write_output(const std::string& path, const std::string& line, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << line << '\n';
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw io::ParseError("cannot write " + path);
    file << line << '\n';
}

const char* status_name(exact::SearchStatus s) {
    switch (s) {
    case exact::SearchStatus::found:
        return "found";
    case exact::SearchStatus::none:
        return "none";
    default:
        return "budget";
    }
}

int status_exit(exact::SearchStatus s) {
    return s == exact::SearchStatus::found ? exit_ok : s == exact::SearchStatus::none ? exit_negative : exit_budget;
}

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

int cmd_solve(Context& ctx, const std::string& path, std::optional<std::uint64_t> budget) {
    auto instance = io::parse_instance(read_input(path, ctx.in));
    exact::SearchBudget b{budget.value_or(default_budget())};
    auto rec = record("listpack.solve");
    exact::SearchOutcome<Packing> outcome;
    if (auto* list = std::get_if<ListInstance>(&instance)) {
        auto cover = list_to_cover(list->graph, list->lists);
        outcome = exact::find_packing(cover, b);
        if (outcome.value)
            outcome.value = slots_to_colours(list->lists, *outcome.value);
    } else {
        outcome = exact::find_packing(std::get<CorrespondenceCover>(instance), b);
    }
    rec["result"] = status_name(outcome.status);
    rec["nodes"] = outcome.nodes;
    rec["budget"] = b.max_nodes;
    if (outcome.value)
        rec["packing"] = embed(io::to_json(*outcome.value));
    ctx.out << rec.dump() << '\n';
    return status_exit(outcome.status);
}

struct PackOptions {
    std::string path;
    std::string method;
    int chi_c_bound = -1;
    std::optional<std::uint64_t> seed;
    std::string fc_path;
    std::uint64_t max_rounds = 0;
    std::string output;
};

probabilistic::FractionalColoring default_fractional(const Graph& g) {
    if (bipartition(g))
        return probabilistic::bipartite_fractional(g);
    // greedy proper colouring along the degeneracy order
    auto order = degeneracy_order(g).order;
    std::vector<int> colour(static_cast<std::size_t>(g.vertex_count()), -1);
    int used = 1;
    for (Vertex v : order) {
        std::vector<bool> taken(static_cast<std::size_t>(g.vertex_count()) + 1, false);
        for (auto [w, e] : g.incident(v))
            if (colour[static_cast<std::size_t>(w)] >= 0)
                taken[static_cast<std::size_t>(colour[static_cast<std::size_t>(w)])] = true;
        int c = 0;
        while (taken[static_cast<std::size_t>(c)])
            ++c;
        colour[static_cast<std::size_t>(v)] = c;
        used = std::max(used, c + 1);
    }
    return probabilistic::from_proper_colouring(g, colour, used);
}

int cmd_pack(Context& ctx, const PackOptions& o) {
    const bool randomized = o.method == "fractional" || o.method == "bip-lll";
    if (randomized && !o.seed)
        throw UsageError("--method " + o.method + " requires --seed");
    auto instance = io::parse_instance(read_input(o.path, ctx.in));
    auto* list = std::get_if<ListInstance>(&instance);
    auto cover_of = [&] {
        return list ? list_to_cover(list->graph, list->lists) : std::get<CorrespondenceCover>(instance);
    };
    auto need_list = [&] {
        if (!list)
            throw constructive::PreconditionError("--method " + o.method + " needs a list instance");
        return *list;
    };
    auto to_colours = [&](Packing p) { return list ? slots_to_colours(list->lists, p) : p; };

    auto rec = record("listpack.pack");
    rec["method"] = o.method;
    std::optional<Packing> packing;
    if (o.method == "degenerate") {
        packing = to_colours(constructive::pack_degenerate(cover_of()));
    } else if (o.method == "complete") {
        packing = constructive::pack_complete(need_list());
    } else if (o.method == "bip-ordered") {
        packing = constructive::pack_bipartite_ordered(need_list());
    } else if (o.method == "augment") {
        constructive::AugmentTrace trace;
        packing = to_colours(constructive::pack_augment(cover_of(), o.chi_c_bound, &trace));
        rec["rounds"] = trace.coloured_cells.size() - 1;
    } else if (o.method == "fractional") {
        auto inst = need_list();
        auto fc = o.fc_path.empty() ? default_fractional(inst.graph) : io::parse_fractional(read_input(o.fc_path, ctx.in));
        auto r = probabilistic::pack_fractional(inst, fc, o.max_rounds, *o.seed);
        packing = r.packing;
        rec["seed"] = *o.seed;
        rec["rounds"] = r.steps;
        rec["budget"] = r.budget;
        rec["a"] = fc.a;
        rec["b"] = fc.b;
    } else if (o.method == "bip-lll") {
        auto r = probabilistic::pack_bipartite_lll(cover_of(), o.max_rounds, *o.seed);
        packing = r.packing ? std::optional(to_colours(*r.packing)) : std::nullopt;
        rec["seed"] = *o.seed;
        rec["resamples"] = r.steps;
        rec["budget"] = r.budget;
    } else {
        throw UsageError("unknown method " + o.method);
    }

    rec["result"] = packing ? "found" : "none";
    if (packing) {
        // every packer's output is re-checked before it leaves the tool
        std::optional<Violation> bad = list ? validate_packing(*list, *packing) : validate_packing(cover_of(), *packing);
        if (bad)
            throw constructive::InternalError("packer produced an invalid packing: " + bad->message);
        if (!o.output.empty() && o.output != "-")
            write_output(o.output, io::to_json(*packing), ctx.out);
        else
            rec["packing"] = embed(io::to_json(*packing));
    }
    ctx.out << rec.dump() << '\n';
    return packing ? exit_ok : exit_negative;
}

int cmd_chi_star(Context& ctx, const std::string& mode, const std::string& path, int k, std::optional<std::uint64_t> budget) {
    auto g = io::parse_graph(read_input(path, ctx.in));
    exact::SearchBudget b{budget.value_or(default_budget())};
    auto rec = record("listpack.chi-star");
    rec["mode"] = mode;
    rec["k"] = k;
    exact::ChiStarVerdict verdict;
    if (mode == "list") {
        auto r = exact::decide_chi_star_list(g, k, b);
        verdict = r.verdict;
        rec["assignments_checked"] = r.assignments_checked;
        rec["nodes"] = r.nodes;
        if (r.witness)
            rec["witness"] = embed(io::to_json(ListInstance{g, *r.witness}));
    } else {
        auto r = exact::decide_chi_star_corr(g, k, b);
        verdict = r.verdict;
        rec["covers_checked"] = r.covers_checked;
        rec["nodes"] = r.nodes;
        if (r.witness)
            rec["witness"] = embed(io::to_json(*r.witness));
    }
    rec["budget"] = b.max_nodes;
    rec["result"] = verdict == exact::ChiStarVerdict::all_pack  ? "all-pack"
                    : verdict == exact::ChiStarVerdict::witness ? "witness"
                                                                : "budget";
    ctx.out << rec.dump() << '\n';
    return verdict == exact::ChiStarVerdict::all_pack ? exit_ok
           : verdict == exact::ChiStarVerdict::witness ? exit_negative
                                                        : exit_budget;
}

int cmd_gen(Context& ctx, const std::string& family, int d, int b, const std::string& output) {
    std::string text;
    if (family == "c4")
        text = io::to_json(generators::gen_c4());
    else if (family == "kab-cover")
        text = io::to_json(generators::gen_kab_cover(d));
    else if (family == "shift")
        text = io::to_json(generators::gen_shift_construction(d));
    else
        text = io::to_json(generators::gen_kbb_lists(b));
    write_output(output, text, ctx.out);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Context ctx{in, out, err};
    CLI::App app{"listpack: list and correspondence packing toolkit", "listpack"};
    app.set_version_flag("--version", std::string(listpack::version));
    app.require_subcommand(1);

    std::optional<std::uint64_t> budget;
    std::string path;
    std::optional<std::uint64_t> seed;
    int threads = 1;

    auto* solve = app.add_subcommand("solve", "exact search for a packing of a list instance or cover");
    solve->add_option("instance", path, "instance file, - for stdin")->required();
    solve->add_option("--budget", budget, "search node limit");

    PackOptions pack_opts;
    auto* pack = app.add_subcommand("pack", "run a constructive or randomized packer");
    pack->add_option("instance", pack_opts.path, "instance file, - for stdin")->required();
    pack->add_option("--method", pack_opts.method, "packer")
        ->required()
        ->check(CLI::IsMember({"degenerate", "complete", "bip-ordered", "augment", "fractional", "bip-lll"}));
    pack->add_option("--chi-c-bound", pack_opts.chi_c_bound, "certified upper bound on the correspondence chromatic number");
    pack->add_option("--seed", pack_opts.seed, "random seed (randomized methods)");
    pack->add_option("--fc", pack_opts.fc_path, "(a,b)-colouring file for --method fractional");
    pack->add_option("--max-rounds", pack_opts.max_rounds, "round or resample budget, 0 for the default");
    pack->add_option("-o,--output", pack_opts.output, "write the packing file here");

    std::string chi_mode;
    int chi_k = 0;
    auto* chi = app.add_subcommand("chi-star", "decide whether every k-assignment (or k-fold cover) of a graph packs");
    chi->add_option("mode", chi_mode, "list or corr")->required()->check(CLI::IsMember({"list", "corr"}));
    chi->add_option("graph", path, "graph file, - for stdin")->required();
    chi->add_option("--k", chi_k, "list size / fold")->required()->check(CLI::PositiveNumber);
    chi->add_option("--budget", budget, "search node limit summed over all assignments");

    std::string family;
    int gen_d = 2;
    int gen_b = 2;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "write one of the extremal instances");
    gen->add_option("family", family, "c4, kab-cover, shift or kbb")
        ->required()
        ->check(CLI::IsMember({"c4", "kab-cover", "shift", "kbb"}));
    gen->add_option("--d", gen_d, "degeneracy parameter for kab-cover and shift");
    gen->add_option("--b", gen_b, "list size for kbb");
    gen->add_option("-o,--output", gen_out, "output file, default stdout");

    auto* matrix_cmd = app.add_subcommand("matrix", "permanent and transversal experiments");
    matrix_cmd->require_subcommand(1);
    int mk = 0;
    int mn = 0;
    std::string mp;
    std::uint64_t trials = 0;
    bool exact_flag = false;
    auto* perm_zero = matrix_cmd->add_subcommand("perm-zero", "Pr[Per(A) = 0] for entries zero with probability p");
    perm_zero->add_option("--k", mk)->required()->check(CLI::PositiveNumber);
    perm_zero->add_option("--p", mp, "probability as decimal or a/b")->required();
    perm_zero->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    perm_zero->add_option("--seed", seed);
    perm_zero->add_option("--threads", threads)->check(CLI::PositiveNumber);
    perm_zero->add_flag("--exact", exact_flag, "also compute the exact value (k <= 4)");
    auto* zero_tr = matrix_cmd->add_subcommand("zero-transversal", "Pr[no 0-transversal] in a sum of n random permutation matrices");
    zero_tr->add_option("--n", mn)->required()->check(CLI::PositiveNumber);
    zero_tr->add_option("--k", mk)->required()->check(CLI::PositiveNumber);
    zero_tr->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    zero_tr->add_option("--seed", seed);
    zero_tr->add_option("--threads", threads)->check(CLI::PositiveNumber);

    std::string report_path;
    auto* experiment = app.add_subcommand("experiment", "run an experiment config and write a JSON-lines report");
    experiment->add_option("config", path, "config file, - for stdin")->required();
    experiment->add_option("-o,--output", report_path, "report file, default stdout");
    experiment->add_option("--threads", threads)->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve)
            return cmd_solve(ctx, path, budget);
        if (*pack)
            return cmd_pack(ctx, pack_opts);
        if (*chi)
            return cmd_chi_star(ctx, chi_mode, path, chi_k, budget);
        if (*gen)
            return cmd_gen(ctx, family, gen_d, gen_b, gen_out);
        if (*perm_zero || *zero_tr) {
            if (!seed)
                throw UsageError("matrix experiments require --seed");
            auto rec = *perm_zero ? perm_zero_record(mk, matrix::parse_rational(mp), trials, *seed, threads, exact_flag)
                                  : zero_transversal_record(mn, mk, trials, *seed, threads);
            out << rec.dump() << '\n';
            return exit_ok;
        }
        if (*experiment) {
            auto config = read_input(path, in);
            if (report_path.empty() || report_path == "-") {
                run_experiments(config, out, threads);
            } else {
                std::ostringstream report;
                run_experiments(config, report, threads);
                std::ofstream file(report_path);
                if (!file)
                    throw io::ParseError("cannot write " + report_path);
                file << report.str();
            }
            return exit_ok;
        }
    } catch (const UsageError& e) {
        err << "listpack: " << e.what() << '\n';
        return exit_usage;
    } catch (const io::ParseError& e) {
        err << "listpack: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const constructive::InternalError& e) {
        err << "listpack: internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const std::invalid_argument& e) {
        // precondition failures and out-of-range parameters
        err << "listpack: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const std::exception& e) {
        err << "listpack: internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

}  // namespace listpack::cli
