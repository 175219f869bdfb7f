#include "blockselect/synth.hpp"

#include "blockselect/errors.hpp"

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace blockselect {

namespace {

void check_weights(const std::vector<double> &q, Block k) {
    if (q.size() != static_cast<std::size_t>(k))
        throw InputError("block weight vector must have k entries");
    double sum = 0.0;
    for (double w : q) {
        if (!std::isfinite(w) || w < 0.0)
            throw InputError("block weights must be nonnegative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw InputError("block weights must sum to 1");
}

// Salted so a chain run with the same --seed does not start from the
// planted labels.
std::mt19937_64 generator_stream(std::uint64_t seed) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0x9e3779b9u};
    return std::mt19937_64(seq);
}

std::vector<Block> draw_labels(Vertex n, const std::vector<double> &q, std::mt19937_64 &rng) {
    std::discrete_distribution<Block> pick(q.begin(), q.end());
    std::vector<Block> labels(static_cast<std::size_t>(n));
    for (auto &l : labels)
        l = pick(rng);
    return labels;
}

std::vector<double> equal_weights(Block k) { return std::vector<double>(static_cast<std::size_t>(k), 1.0 / k); }

SymmetricMatrix two_level(Block k, double diag, double off) {
    SymmetricMatrix m(k, off);
    for (Block s = 0; s < k; ++s)
        m.set(s, s, diag);
    return m;
}

} // namespace

void SbmSpec::validate() const {
    if (n < 0 || k < 1)
        throw InputError("spec needs n >= 0 and k >= 1");
    check_weights(q, k);
    if (p.size() != k)
        throw InputError("affinity matrix must be k x k");
    for (Block s = 0; s < k; ++s)
        for (Block t = 0; t < k; ++t)
            if (!(p(s, t) >= 0.0 && p(s, t) <= 1.0))
                throw InputError("edge probabilities must lie in [0, 1]");
}

SbmSpec SbmSpec::planted(Vertex n, Block k, double p_in, double p_out, std::uint64_t seed) {
    return {n, k, equal_weights(k), two_level(k, p_in, p_out), seed};
}

void DcSpec::validate() const {
    if (n < 0 || k < 1)
        throw InputError("spec needs n >= 0 and k >= 1");
    check_weights(q, k);
    if (omega.size() != k)
        throw InputError("rate matrix must be k x k");
    for (Block s = 0; s < k; ++s)
        for (Block t = 0; t < k; ++t)
            if (!(omega(s, t) >= 0.0) || !std::isfinite(omega(s, t)))
                throw InputError("Poisson rates must be finite and nonnegative");
    const auto &dp = degree_profile;
    if (!(dp.low_mean > 0.0) || !(dp.ratio > 0.0) || !(dp.mix >= 0.0 && dp.mix <= 1.0))
        throw InputError("degree profile needs low_mean > 0, ratio > 0 and mix in [0, 1]");
}

DcSpec DcSpec::planted(Vertex n, Block k, double w_in, double w_out, DegreeProfile profile, std::uint64_t seed) {
    return {n, k, equal_weights(k), two_level(k, w_in, w_out), profile, seed};
}

SyntheticGraph sample_sbm(const SbmSpec &spec) {
    spec.validate();
    auto rng = generator_stream(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    SyntheticGraph out;
    out.labels = draw_labels(spec.n, spec.q, rng);
    out.theta.assign(static_cast<std::size_t>(spec.n), 1.0);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u) {
        const Block a = out.labels[static_cast<std::size_t>(u)];
        for (Vertex v = u + 1; v < spec.n; ++v)
            if (unit(rng) < spec.p(a, out.labels[static_cast<std::size_t>(v)]))
                edges.push_back({u, v});
    }
    out.graph = Graph(spec.n, std::move(edges));
    return out;
}

SyntheticGraph sample_dc_sbm(const DcSpec &spec) {
    spec.validate();
    auto rng = generator_stream(spec.seed);
    SyntheticGraph out;
    out.labels = draw_labels(spec.n, spec.q, rng);

    const auto &dp = spec.degree_profile;
    std::bernoulli_distribution high(dp.mix);
    std::vector<double> raw(static_cast<std::size_t>(spec.n));
    for (auto &r : raw)
        r = high(rng) ? dp.ratio * dp.low_mean : dp.low_mean;
    std::vector<double> block_sum(static_cast<std::size_t>(spec.k), 0.0);
    std::vector<double> block_n(static_cast<std::size_t>(spec.k), 0.0);
    for (Vertex u = 0; u < spec.n; ++u) {
        block_sum[static_cast<std::size_t>(out.labels[static_cast<std::size_t>(u)])] += raw[static_cast<std::size_t>(u)];
        block_n[static_cast<std::size_t>(out.labels[static_cast<std::size_t>(u)])] += 1.0;
    }
    out.theta.resize(static_cast<std::size_t>(spec.n));
    for (Vertex u = 0; u < spec.n; ++u) {
        const auto s = static_cast<std::size_t>(out.labels[static_cast<std::size_t>(u)]);
        out.theta[static_cast<std::size_t>(u)] = raw[static_cast<std::size_t>(u)] * block_n[s] / block_sum[s];
    }

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Edge> edges;
    std::int64_t collapsed = 0;
    for (Vertex u = 0; u < spec.n; ++u) {
        const Block a = out.labels[static_cast<std::size_t>(u)];
        const double tu = out.theta[static_cast<std::size_t>(u)];
        for (Vertex v = u + 1; v < spec.n; ++v) {
            const double mean = tu * out.theta[static_cast<std::size_t>(v)] * spec.omega(a, out.labels[static_cast<std::size_t>(v)]);
            if (mean <= 0.0)
                continue;
            // inversion: only whether the draw is 0, 1 or at least 2 matters
            const double x = unit(rng);
            double p = std::exp(-mean);
            if (x < p)
                continue;
            double cdf = p;
            p *= mean;
            cdf += p;
            edges.push_back({u, v});
            if (x >= cdf)
                ++collapsed;
        }
    }
    out.collapse_rate = edges.empty() ? 0.0 : static_cast<double>(collapsed) / static_cast<double>(edges.size());
    if (out.collapse_rate > 0.01) {
        std::ostringstream msg;
        msg << "collapsed multi-edges on " << out.collapse_rate * 100.0 << "% of edges";
        out.warnings.push_back(msg.str());
    }
    out.graph = Graph(spec.n, std::move(edges));
    return out;
}

} // namespace blockselect
