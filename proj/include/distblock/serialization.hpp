#pragma once

#include <json.hpp>

#include <string>

#include "distblock/graph.hpp"
#include "distblock/matrix.hpp"
#include "distblock/multipartite.hpp"
#include "distblock/singularity.hpp"

namespace distblock::jsonio {

using nlohmann::json;

/// Rationals serialize as strings ("p/q", or the plain integer); parsing
/// additionally accepts JSON integers and exact decimal strings, so the
/// round-trip is bit-exact.
json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// Array-of-arrays of rational strings.
json matrix_to_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);

json spec_to_json(const MultipartiteSpec& spec);

/// {"vertex_count": N, "blocks": [{"parts": [[ids...], ...]}, ...]}
json graph_to_json(const graphs::MultiBlockGraph& g);
graphs::MultiBlockGraph graph_from_json(const json& j);

json verdict_to_json(const singularity::SingularityVerdict& v,
                     const MultipartiteSpec& spec);

/// Accepts, in order: inline JSON ('{'-prefixed), a path to a JSON file,
/// the generator shortcuts tree:<edges>, star_of_blocks:<spec>x<b> and
/// t6_tn:<n>,<b>, or a bare composition "n1,n2,..." meaning a single block.
graphs::MultiBlockGraph parse_graph_argument(const std::string& arg);

/// FNV-1a digest of a canonical input string, hex-encoded.
std::string digest(const std::string& canonical);

}  // namespace distblock::jsonio
