#pragma once

#include "blockselect/map_search.hpp"
#include "blockselect/mdl_codec.hpp"
#include "blockselect/priors.hpp"
#include "blockselect/sbm_icl.hpp"
#include "blockselect/selection.hpp"
#include "blockselect/synth.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <variant>

namespace blockselect {

using nlohmann::json;

// Sorted keys, every double rounded to 12 significant digits, non-finite
// values as strings ("inf", "-inf", "nan"). Identical inputs give identical
// bytes.
std::string dump_canonical(const json &doc);

json to_json(const ScoreBreakdown &score);
json to_json(const CodeLengthReport &report);
json to_json(const MapResult &result, const ChainConfig &config);
json to_json(const SelectionReport &report, const ChainConfig &chain, const PriorConfig &priors);
json to_json(const PriorConfig &priors);

// Accepts a preset name ("uniform", "jeffreys") or an object with any of
// alpha, beta, delta, gamma (missing keys keep the uniform value), or an
// object {"preset": name} with optional overrides.
PriorConfig priors_from_json(const json &doc);

// {"model": "sbm" | "dcsbm", "n", "k", "q"?, "p" | "omega" (matrix or
// {"in", "out"}), "degree_profile"?: {"low_mean", "ratio", "mix"}, "seed"?}
using GeneratorSpec = std::variant<SbmSpec, DcSpec>;
GeneratorSpec generator_spec_from_json(const json &doc);
json to_json(const GeneratorSpec &spec);

std::vector<Block> labels_from_json(const json &doc);

// CSV curves (k, family, log_icl, log_icl_normalized, bic) for plotting.
void write_curve_csv(std::ostream &out, const SelectionReport &report);
void write_trace_csv(std::ostream &out, const MapResult &result);

} // namespace blockselect
