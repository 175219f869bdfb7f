#include "blockselect/report_json.hpp"

#include "blockselect/errors.hpp"

#include <cmath>
#include <cstdio>
#include <string>

namespace blockselect {

namespace {

json canonical(const json &doc) {
    switch (doc.type()) {
    case json::value_t::object: {
        json out = json::object();
        for (auto it = doc.begin(); it != doc.end(); ++it)
            out[it.key()] = canonical(it.value());
        return out;
    }
    case json::value_t::array: {
        json out = json::array();
        for (const auto &v : doc)
            out.push_back(canonical(v));
        return out;
    }
    case json::value_t::number_float: {
        const double v = doc.get<double>();
        if (std::isnan(v))
            return "nan";
        if (std::isinf(v))
            return v > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", v);
        double rounded = std::stod(buf);
        if (rounded == 0.0)
            rounded = 0.0; // drop negative zero
        return rounded;
    }
    default:
        return doc;
    }
}

double number(const json &doc, const char *key) {
    if (!doc.contains(key) || !doc.at(key).is_number())
        throw InputError(std::string("missing numeric field '") + key + "'");
    return doc.at(key).get<double>();
}

SymmetricMatrix matrix_from_json(const json &doc, Block k, const char *name) {
    if (doc.is_object()) {
        SymmetricMatrix m(k, number(doc, "out"));
        for (Block s = 0; s < k; ++s)
            m.set(s, s, number(doc, "in"));
        return m;
    }
    if (!doc.is_array() || doc.size() != static_cast<std::size_t>(k))
        throw InputError(std::string("'") + name + "' must be a k x k matrix or {\"in\", \"out\"}");
    SymmetricMatrix m(k);
    for (Block s = 0; s < k; ++s) {
        const auto &row = doc.at(static_cast<std::size_t>(s));
        if (!row.is_array() || row.size() != static_cast<std::size_t>(k))
            throw InputError(std::string("'") + name + "' must be a k x k matrix");
        for (Block t = 0; t < k; ++t) {
            const double v = row.at(static_cast<std::size_t>(t)).get<double>();
            if (t < s && v != m(s, t))
                throw InputError(std::string("'") + name + "' must be symmetric");
            m.set(s, t, v);
        }
    }
    return m;
}

json matrix_to_json(const SymmetricMatrix &m) {
    json rows = json::array();
    for (Block s = 0; s < m.size(); ++s) {
        json row = json::array();
        for (Block t = 0; t < m.size(); ++t)
            row.push_back(m(s, t));
        rows.push_back(row);
    }
    return rows;
}

} // namespace

std::string dump_canonical(const json &doc) { return canonical(doc).dump(2); }

json to_json(const ScoreBreakdown &score) {
    return {{"vertex_term", score.vertex_term},
            {"edge_term", score.edge_term},
            {"theta_term", score.theta_term},
            {"total", score.total}};
}

json to_json(const CodeLengthReport &r) {
    return {{"part1_k", r.part1_k},
            {"part1_implicit", true},
            {"part2_partition", r.part2_partition},
            {"part3_assignment", r.part3_assignment},
            {"part4_edge_counts", r.part4_edge_counts},
            {"part5_edge_alloc", r.part5_edge_alloc},
            {"total_bits", r.total_bits}};
}

json to_json(const PriorConfig &p) {
    return {{"alpha", p.alpha}, {"beta", p.beta}, {"delta", p.delta}, {"gamma", p.gamma}};
}

json to_json(const MapResult &result, const ChainConfig &config) {
    json doc;
    doc["family"] = to_string(config.family);
    doc["k"] = config.k;
    doc["labels"] = result.state.labels();
    doc["score"] = to_json(result.score);
    doc["accepted_moves"] = result.accepted_moves;
    doc["chain_id"] = result.chain_id;
    doc["seed"] = config.seed;
    doc["sweeps"] = config.sweeps;
    doc["restarts"] = config.restarts;
    doc["warnings"] = result.warnings;
    return doc;
}

json to_json(const SelectionReport &report, const ChainConfig &chain, const PriorConfig &priors) {
    json doc;
    doc["graph"] = {{"n", report.n},
                    {"m", report.m},
                    {"regime", to_string(report.regime.regime)},
                    {"rho", report.regime.rho},
                    {"sample_size_log", report.regime.sample_size_log}};
    json grid = json::array();
    for (const auto &cell : report.grid) {
        grid.push_back({{"family", to_string(cell.family)},
                        {"k", cell.k},
                        {"log_icl", cell.log_icl},
                        {"log_icl_normalized", cell.log_icl_normalized},
                        {"bic", cell.bic},
                        {"lambda_dc", cell.lambda_dc},
                        {"seed", cell.seed},
                        {"map_state_ref", cell.map_state_ref}});
    }
    doc["grid"] = grid;
    auto ref = [&](std::size_t i) {
        const auto &c = report.grid.at(i);
        return json{{"family", to_string(c.family)}, {"k", c.k}, {"index", i}};
    };
    doc["best_by_icl"] = ref(report.best_by_icl);
    doc["best_by_bic"] = ref(report.best_by_bic);
    doc["k_ref"] = report.k_ref;
    doc["expected_gap_at_k_ref"] = report.gap_at_k_ref;
    doc["notes"] = {"BIC asymptotic Theta(.) constants are set to 1"};
    doc["warnings"] = report.warnings;
    doc["config"] = {{"priors", to_json(priors)},
                     {"sweeps", chain.sweeps},
                     {"restarts", chain.restarts},
                     {"seed", chain.seed},
                     {"beta_start", chain.schedule.beta_start},
                     {"beta_end", chain.schedule.beta_end},
                     {"schedule", chain.schedule.shape == Schedule::Shape::linear ? "linear" : "geometric"},
                     {"greedy_finish", chain.greedy_finish}};
    return doc;
}

PriorConfig priors_from_json(const json &doc) {
    if (doc.is_string())
        return PriorConfig::preset(doc.get<std::string>());
    if (!doc.is_object())
        throw InputError("priors must be a preset name or an object");
    PriorConfig p = doc.contains("preset") ? PriorConfig::preset(doc.at("preset").get<std::string>())
                                           : PriorConfig::uniform();
    if (doc.contains("alpha"))
        p.alpha = number(doc, "alpha");
    if (doc.contains("beta"))
        p.beta = number(doc, "beta");
    if (doc.contains("delta"))
        p.delta = number(doc, "delta");
    if (doc.contains("gamma"))
        p.gamma = number(doc, "gamma");
    p.validate();
    return p;
}

GeneratorSpec generator_spec_from_json(const json &doc) {
    if (!doc.is_object())
        throw InputError("generator spec must be a JSON object");
    const std::string model = doc.value("model", std::string("sbm"));
    const auto n = static_cast<Vertex>(number(doc, "n"));
    const auto k = static_cast<Block>(number(doc, "k"));
    if (k < 1)
        throw InputError("k must be at least 1");
    std::vector<double> q(static_cast<std::size_t>(k), 1.0 / k);
    if (doc.contains("q"))
        q = doc.at("q").get<std::vector<double>>();
    const std::uint64_t seed = doc.value("seed", std::uint64_t{0});
    if (model == "sbm") {
        if (!doc.contains("p"))
            throw InputError("sbm spec needs 'p'");
        SbmSpec spec{n, k, q, matrix_from_json(doc.at("p"), k, "p"), seed};
        spec.validate();
        return spec;
    }
    if (model == "dcsbm") {
        if (!doc.contains("omega"))
            throw InputError("dcsbm spec needs 'omega'");
        DegreeProfile profile;
        if (doc.contains("degree_profile")) {
            const auto &dp = doc.at("degree_profile");
            profile.low_mean = dp.value("low_mean", profile.low_mean);
            profile.ratio = dp.value("ratio", profile.ratio);
            profile.mix = dp.value("mix", profile.mix);
        }
        DcSpec spec{n, k, q, matrix_from_json(doc.at("omega"), k, "omega"), profile, seed};
        spec.validate();
        return spec;
    }
    throw InputError("unknown generator model '" + model + "'");
}

json to_json(const GeneratorSpec &spec) {
    if (const auto *s = std::get_if<SbmSpec>(&spec))
        return {{"model", "sbm"}, {"n", s->n}, {"k", s->k}, {"q", s->q}, {"p", matrix_to_json(s->p)}, {"seed", s->seed}};
    const auto &d = std::get<DcSpec>(spec);
    return {{"model", "dcsbm"},
            {"n", d.n},
            {"k", d.k},
            {"q", d.q},
            {"omega", matrix_to_json(d.omega)},
            {"degree_profile",
             {{"low_mean", d.degree_profile.low_mean}, {"ratio", d.degree_profile.ratio}, {"mix", d.degree_profile.mix}}},
            {"seed", d.seed}};
}

std::vector<Block> labels_from_json(const json &doc) {
    const json &arr = doc.is_object() && doc.contains("labels") ? doc.at("labels") : doc;
    if (!arr.is_array())
        throw InputError("labels must be a JSON integer array");
    std::vector<Block> out;
    out.reserve(arr.size());
    for (const auto &v : arr) {
        if (!v.is_number_integer())
            throw InputError("labels must be integers");
        out.push_back(v.get<Block>());
    }
    return out;
}

void write_curve_csv(std::ostream &out, const SelectionReport &report) {
    out << "k,family,log_icl,log_icl_normalized,bic\n";
    char buf[160];
    for (const auto &cell : report.grid) {
        std::snprintf(buf, sizeof buf, "%d,%s,%.12g,%.12g,%.12g\n", cell.k, to_string(cell.family).c_str(),
                      cell.log_icl, cell.log_icl_normalized, cell.bic);
        out << buf;
    }
}

void write_trace_csv(std::ostream &out, const MapResult &result) {
    out << "sweep,chain,best_score\n";
    char buf[96];
    for (const auto &p : result.trace) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.12g\n", p.sweep, p.chain, p.best_score);
        out << buf;
    }
}

} // namespace blockselect
