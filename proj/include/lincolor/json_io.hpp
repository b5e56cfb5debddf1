#pragma once

#include <json.hpp>

#include "lincolor/coloring.hpp"
#include "lincolor/graph.hpp"
#include "lincolor/interval.hpp"
#include "lincolor/sat_gadget.hpp"
#include "lincolor/treedepth.hpp"
#include "lincolor/verify.hpp"

namespace lincolor {

// Stable JSON encodings shared by the CLI and the file formats:
//   coloring      {"n": int, "colors": [c_0, ...]}        colors >= 1
//   witness       {"kind": "subgraph"|"path", "vertices": [...]}
//   decomposition {"n": int, "parent": [p_0, ...]}        -1 for roots
//   graph         {"n": int, "edges": [[u, v], ...]}      u < v, sorted

nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const CenteredWitness& w);
nlohmann::json witness_to_json(const NonCenteredPath& w);

nlohmann::json decomposition_to_json(const TreedepthDecomposition& t);
TreedepthDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json gadget_roles_to_json(const GadgetInstance& gi);
nlohmann::json preprocess_to_json(const PreprocessResult& pre);

// FNV-1a digest used for the run reports' input fingerprints.
std::string digest_hex(const std::string& bytes);

}  // namespace lincolor
