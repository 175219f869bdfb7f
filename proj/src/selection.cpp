#include "blockselect/selection.hpp"

#include "blockselect/dcsbm_icl.hpp"
#include "blockselect/errors.hpp"
#include "blockselect/sbm_icl.hpp"
#include "blockselect/special.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace blockselect {

std::string to_string(DensityRegime::Kind kind) { return kind == DensityRegime::Kind::dense ? "dense" : "sparse"; }

DensityRegime density_regime(Count n, Count m) {
    const auto nn = static_cast<double>(n);
    const bool dense = static_cast<double>(m) >= nn * std::sqrt(nn);
    return density_regime(n, m, dense ? DensityRegime::Kind::dense : DensityRegime::Kind::sparse);
}

DensityRegime density_regime(Count n, Count m, DensityRegime::Kind forced) {
    if (n < 2)
        throw InputError("density regime needs at least two vertices");
    const auto nn = static_cast<double>(n);
    DensityRegime r;
    r.regime = forced;
    if (forced == DensityRegime::Kind::dense) {
        r.rho = static_cast<double>(m) / (nn * nn);
        r.sample_size_log = 2.0 * std::log(nn);
    } else {
        r.rho = static_cast<double>(m) / nn;
        r.sample_size_log = 3.0 * std::log(nn);
    }
    return r;
}

double bic_sbm(const Graph &g, const BlockState &state, const DensityRegime &regime) {
    const double ll = sbm_log_likelihood(g, state, mle_params(state));
    const auto k = static_cast<double>(state.num_blocks());
    return -2.0 * ll + k * k * regime.sample_size_log;
}

double bic_dc(const Graph &g, const BlockState &state, const DensityRegime &regime) {
    const double ll = dc_log_likelihood(g, state, mle_dc_params(g, state));
    const auto k = static_cast<double>(state.num_blocks());
    return -2.0 * ll + k * k * regime.sample_size_log + 2.0 * std::log(static_cast<double>(g.num_vertices()));
}

double lambda_dc(const Graph &g, const BlockState &state) {
    const auto params = mle_dc_params(g, state);
    double total = 0.0;
    for (Vertex u = 0; u < g.num_vertices(); ++u)
        total += xlogy(static_cast<double>(g.degree(u)), params.theta[static_cast<std::size_t>(u)]);
    return total;
}

double expected_gap(Count n, Count m, Block k, bool as_printed) {
    if (n <= k)
        throw InputError("expected gap needs n > k");
    if (m <= 0)
        throw InputError("expected gap needs at least one edge");
    const auto nn = static_cast<double>(n);
    const double gap = (0.5 + nn / (24.0 * static_cast<double>(m))) * (nn - static_cast<double>(k));
    return as_printed ? std::log(gap) : gap;
}

Curve normalize_dc_curve(const Curve &dc_scores, const Curve &sbm_scores, Count n, Count m, Block k_ref) {
    if (dc_scores.size() < 2)
        throw InputError("normalization needs a curve over at least two values of k");
    if (!dc_scores.contains(k_ref) || (!sbm_scores.empty() && !sbm_scores.contains(k_ref)))
        throw InputError("reference k = " + std::to_string(k_ref) + " is not on the swept curves");
    const double shift = expected_gap(n, m, k_ref);
    Curve out;
    for (const auto &[k, v] : dc_scores)
        out.emplace(k, v - shift);
    return out;
}

Block curve_argmax(const Curve &curve) {
    if (curve.empty())
        throw InputError("argmax of an empty curve");
    auto best = curve.begin();
    for (auto it = curve.begin(); it != curve.end(); ++it)
        if (it->second > best->second)
            best = it;
    return best->first;
}

SelectionReport sweep(const Graph &g, const SweepOptions &options, const ChainConfig &chain,
                      const PriorConfig &priors) {
    if (options.k_values.empty())
        throw InputError("empty k range");
    if (options.families.empty())
        throw InputError("no model family selected");
    chain.validate();
    priors.validate();

    SelectionReport report;
    report.n = g.num_vertices();
    report.m = g.num_edges();
    report.regime = options.regime ? density_regime(report.n, report.m, *options.regime)
                                   : density_regime(report.n, report.m);

    std::vector<Block> ks = options.k_values;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    std::vector<Family> families = options.families;
    std::sort(families.begin(), families.end());
    families.erase(std::unique(families.begin(), families.end()), families.end());

    for (Family f : families) {
        for (Block k : ks) {
            ModelScore cell;
            cell.family = f;
            cell.k = k;
            cell.seed = chain.seed + 1000003ULL * static_cast<std::uint64_t>(k) +
                        (f == Family::degree_corrected ? 7919ULL : 0ULL);
            cell.map_state_ref = to_string(f) + ":k=" + std::to_string(k);
            report.grid.push_back(std::move(cell));
        }
    }

    std::vector<std::vector<std::string>> cell_warnings(report.grid.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < report.grid.size(); i = next++) {
            auto &cell = report.grid[i];
            ChainConfig cfg = chain;
            cfg.family = cell.family;
            cfg.k = cell.k;
            cfg.seed = cell.seed;
            cfg.jobs = 1;
            const auto result = find_map(g, cfg, priors);
            cell.log_icl = result.score.total;
            cell.labels = result.state.labels();
            cell.lambda_dc = lambda_dc(g, result.state);
            cell.bic = cell.family == Family::vanilla ? bic_sbm(g, result.state, report.regime)
                                                      : bic_dc(g, result.state, report.regime);
            cell_warnings[i] = result.warnings;
        }
    };
    const int jobs = std::clamp(options.jobs, 1, static_cast<int>(report.grid.size()));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }
    for (auto &w : cell_warnings)
        report.warnings.insert(report.warnings.end(), w.begin(), w.end());

    Curve sbm_curve, dc_curve;
    for (const auto &cell : report.grid)
        (cell.family == Family::vanilla ? sbm_curve : dc_curve)[cell.k] = cell.log_icl;

    if (options.k_ref)
        report.k_ref = *options.k_ref;
    else
        report.k_ref = sbm_curve.empty() ? ks.back() : curve_argmax(sbm_curve);

    for (auto &cell : report.grid)
        cell.log_icl_normalized = cell.log_icl;
    if (!dc_curve.empty()) {
        if (dc_curve.size() < 2 || report.k_ref >= report.n || report.m == 0) {
            report.warnings.push_back("degree-corrected curve left unnormalized");
        } else {
            const auto normalized = normalize_dc_curve(dc_curve, sbm_curve, report.n, report.m, report.k_ref);
            report.gap_at_k_ref = expected_gap(report.n, report.m, report.k_ref);
            for (auto &cell : report.grid)
                if (cell.family == Family::degree_corrected)
                    cell.log_icl_normalized = normalized.at(cell.k);
        }
    }

    // first cell wins ties: vanilla before DC, smaller k before larger
    for (std::size_t i = 1; i < report.grid.size(); ++i) {
        if (report.grid[i].log_icl_normalized > report.grid[report.best_by_icl].log_icl_normalized)
            report.best_by_icl = i;
        if (report.grid[i].bic < report.grid[report.best_by_bic].bic)
            report.best_by_bic = i;
    }
    return report;
}

} // namespace blockselect
