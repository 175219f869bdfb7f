#include "blockselect/cli.hpp"

#include "blockselect/dcsbm_icl.hpp"
#include "blockselect/errors.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/map_search.hpp"
#include "blockselect/mdl_codec.hpp"
#include "blockselect/report_json.hpp"
#include "blockselect/selection.hpp"
#include "blockselect/synth.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace blockselect::cli {

namespace {

struct GraphArgs {
    std::string path;
    bool one_indexed = false;
    bool drop_duplicates = false;
    bool largest_component = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--graph", path, "edge list file")->required();
        cmd->add_flag("--one-indexed", one_indexed, "vertex ids in the file start at 1");
        cmd->add_flag("--drop-duplicates", drop_duplicates, "skip repeated edges instead of failing");
        cmd->add_flag("--largest-component", largest_component, "restrict to the largest connected component");
    }

    Graph load() const {
        Graph g = load_edge_list_file(path, {one_indexed, drop_duplicates});
        return largest_component ? blockselect::largest_component(g) : g;
    }
};

struct ChainArgs {
    std::string priors = "uniform";
    std::uint64_t seed = 0;
    int sweeps = ChainConfig{}.sweeps;
    int restarts = ChainConfig{}.restarts;
    double beta_start = Schedule{}.beta_start;
    double beta_end = Schedule{}.beta_end;
    std::string schedule = "geometric";
    bool no_greedy = false;

    void attach(CLI::App *cmd) {
        cmd->add_option("--priors", priors, "preset name (uniform, jeffreys) or JSON file");
        cmd->add_option("--seed", seed, "random seed");
        cmd->add_option("--sweeps", sweeps, "sweeps per chain");
        cmd->add_option("--restarts", restarts, "independent chains");
        cmd->add_option("--beta-start", beta_start, "initial inverse temperature");
        cmd->add_option("--beta-end", beta_end, "final inverse temperature");
        cmd->add_option("--schedule", schedule, "linear or geometric")
            ->check(CLI::IsMember({"linear", "geometric"}));
        cmd->add_flag("--no-greedy", no_greedy, "skip the greedy polish after annealing");
    }

    ChainConfig config() const {
        ChainConfig c;
        c.seed = seed;
        c.sweeps = sweeps;
        c.restarts = restarts;
        c.schedule.beta_start = beta_start;
        c.schedule.beta_end = beta_end;
        c.schedule.shape = schedule == "linear" ? Schedule::Shape::linear : Schedule::Shape::geometric;
        c.greedy_finish = !no_greedy;
        return c;
    }
};

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

PriorConfig load_priors(const std::string &arg) {
    if (arg == "uniform" || arg == "jeffreys")
        return PriorConfig::preset(arg);
    return priors_from_json(read_json_file(arg));
}

std::vector<Block> load_labels(const std::string &path, const Graph &g) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
        try {
            return labels_from_json(json::parse(text));
        } catch (const json::exception &e) {
            throw InputError("malformed JSON in " + path + ": " + e.what());
        }
    }
    std::istringstream lines(text);
    return load_vertex_labels(lines, g);
}

int default_jobs() {
    if (const char *env = std::getenv("BLOCKSELECT_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception &) {
            throw InputError("BLOCKSELECT_JOBS must be an integer");
        }
    }
    return 1;
}

void check_score(const Graph &g, const BlockState &state, Family family, const PriorConfig &priors,
                 double reported) {
    state.check_consistent(g);
    const double fresh = score_state(g, state, family, priors).total;
    if (!(std::abs(fresh - reported) <= 1e-9 * std::max(1.0, std::abs(fresh))))
        throw InvariantError("reported score does not match a fresh rescore");
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Bayesian order and model selection for stochastic block models", "blockselect"};
    app.require_subcommand(1);

    // generate
    auto *gen = app.add_subcommand("generate", "sample a synthetic graph from a JSON spec");
    std::string spec_path, gen_out, gen_sidecar;
    gen->add_option("--spec", spec_path, "generator spec (JSON)")->required();
    gen->add_option("--out", gen_out, "edge list to write")->required();
    gen->add_option("--labels-out", gen_sidecar, "sidecar JSON (default: <out>.json)");

    // fit
    auto *fit = app.add_subcommand("fit", "find the MAP block assignment for one family and k");
    GraphArgs fit_graph;
    ChainArgs fit_chain;
    std::string fit_family = "sbm", fit_trace;
    Block fit_k = 1;
    int fit_jobs = 0;
    fit_graph.attach(fit);
    fit_chain.attach(fit);
    fit->add_option("--family", fit_family, "sbm or dcsbm")->check(CLI::IsMember({"sbm", "dcsbm"}));
    fit->add_option("--k", fit_k, "number of blocks")->required()->check(CLI::PositiveNumber);
    fit->add_option("--trace", fit_trace, "write the per-sweep trace CSV here");
    fit->add_option("--jobs", fit_jobs, "threads for restart chains");

    // select
    auto *sel = app.add_subcommand("select", "sweep (family, k) and rank the candidates");
    GraphArgs sel_graph;
    ChainArgs sel_chain;
    Block kmin = 1, kmax = 1;
    std::string families = "sbm,dcsbm", regime = "auto", csv_path;
    std::optional<Block> k_ref;
    int sel_jobs = 0;
    sel_graph.attach(sel);
    sel_chain.attach(sel);
    sel->add_option("--kmin", kmin, "smallest k")->required()->check(CLI::PositiveNumber);
    sel->add_option("--kmax", kmax, "largest k")->required()->check(CLI::PositiveNumber);
    sel->add_option("--families", families, "comma-separated subset of sbm,dcsbm");
    sel->add_option("--k-ref", k_ref, "reference k for the cross-family shift");
    sel->add_option("--regime", regime, "auto, dense or sparse")->check(CLI::IsMember({"auto", "dense", "sparse"}));
    sel->add_option("--csv", csv_path, "write curves as CSV");
    sel->add_option("--jobs", sel_jobs, "concurrent grid cells (default: $BLOCKSELECT_JOBS or 1)");

    // encode
    auto *enc = app.add_subcommand("encode", "code lengths of a graph under a given block assignment");
    GraphArgs enc_graph;
    std::string enc_labels;
    Block enc_k = 1;
    enc_graph.attach(enc);
    enc->add_option("--labels", enc_labels, "labels as a JSON array or 'vertex label' lines")->required();
    enc->add_option("--k", enc_k, "number of blocks")->required()->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "blockselect: " << e.what() << '\n';
        return kInputError;
    }

    try {
        if (gen->parsed()) {
            const auto spec = generator_spec_from_json(read_json_file(spec_path));
            const auto sample = std::holds_alternative<SbmSpec>(spec) ? sample_sbm(std::get<SbmSpec>(spec))
                                                                      : sample_dc_sbm(std::get<DcSpec>(spec));
            std::ofstream edges(gen_out);
            if (!edges)
                throw InputError("cannot write " + gen_out);
            write_edge_list(edges, sample.graph);
            json sidecar;
            sidecar["labels"] = sample.labels;
            sidecar["spec"] = to_json(spec);
            sidecar["n"] = sample.graph.num_vertices();
            sidecar["m"] = sample.graph.num_edges();
            sidecar["collapse_rate"] = sample.collapse_rate;
            sidecar["warnings"] = sample.warnings;
            const std::string sidecar_path = gen_sidecar.empty() ? gen_out + ".json" : gen_sidecar;
            std::ofstream side(sidecar_path);
            if (!side)
                throw InputError("cannot write " + sidecar_path);
            side << dump_canonical(sidecar) << '\n';
            out << dump_canonical({{"edges", gen_out},
                                   {"labels", sidecar_path},
                                   {"n", sample.graph.num_vertices()},
                                   {"m", sample.graph.num_edges()}})
                << '\n';
            return kOk;
        }

        if (fit->parsed()) {
            const Graph g = fit_graph.load();
            const auto priors = load_priors(fit_chain.priors);
            ChainConfig cfg = fit_chain.config();
            cfg.family = family_from_string(fit_family);
            cfg.k = fit_k;
            cfg.jobs = fit_jobs > 0 ? fit_jobs : default_jobs();
            const auto result = find_map(g, cfg, priors);
            check_score(g, result.state, cfg.family, priors, result.score.total);
            json doc = to_json(result, cfg);
            doc["trace_path"] = fit_trace.empty() ? json(nullptr) : json(fit_trace);
            if (!fit_trace.empty()) {
                std::ofstream trace(fit_trace);
                if (!trace)
                    throw InputError("cannot write " + fit_trace);
                write_trace_csv(trace, result);
            }
            out << dump_canonical(doc) << '\n';
            return kOk;
        }

        if (sel->parsed()) {
            if (kmin > kmax)
                throw InputError("--kmin must not exceed --kmax");
            const Graph g = sel_graph.load();
            const auto priors = load_priors(sel_chain.priors);
            SweepOptions opts;
            for (Block k = kmin; k <= kmax; ++k)
                opts.k_values.push_back(k);
            std::stringstream fams(families);
            for (std::string name; std::getline(fams, name, ',');)
                if (!name.empty())
                    opts.families.push_back(family_from_string(name));
            opts.k_ref = k_ref;
            if (regime == "dense")
                opts.regime = DensityRegime::Kind::dense;
            else if (regime == "sparse")
                opts.regime = DensityRegime::Kind::sparse;
            opts.jobs = sel_jobs > 0 ? sel_jobs : default_jobs();
            const ChainConfig chain = sel_chain.config();
            const auto report = sweep(g, opts, chain, priors);
            for (const auto &cell : report.grid) {
                const auto state = BlockState::from_labels(g, cell.labels, cell.k);
                check_score(g, state, cell.family, priors, cell.log_icl);
            }
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                if (!csv)
                    throw InputError("cannot write " + csv_path);
                write_curve_csv(csv, report);
            }
            out << dump_canonical(to_json(report, chain, priors)) << '\n';
            return kOk;
        }

        if (enc->parsed()) {
            const Graph g = enc_graph.load();
            const auto labels = load_labels(enc_labels, g);
            const auto state = BlockState::from_labels(g, labels, enc_k);
            out << dump_canonical(to_json(sbm_code_lengths(g, state))) << '\n';
            return kOk;
        }
    } catch (const InvariantError &e) {
        err << "blockselect: internal inconsistency: " << e.what() << '\n';
        return kInvariantError;
    } catch (const InputError &e) {
        err << "blockselect: " << e.what() << '\n';
        return kInputError;
    } catch (const json::exception &e) {
        err << "blockselect: malformed JSON: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

} // namespace blockselect::cli
