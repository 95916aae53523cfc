#pragma once

#include <robinson/embed.hpp>
#include <robinson/feasibility.hpp>
#include <robinson/pathgen.hpp>
#include <robinson/pipeline.hpp>

#include <json.hpp>

namespace robinson {

using Json = nlohmann::json;

Json to_json(const BoundVector & b);
Json vertices_to_json(const std::vector<Vertex> & vertices);
Json to_json(const ThresholdVector & d);
Json to_json(const CycleRecord & c);
Json to_json(const InfeasibilityCertificate & cert);

/// {"pairs": {"i,j": [{"bound": [...], "path": [...]}]}, "cycles": [{"vertices": [...], "bound": [...]}]}
Json table_to_json(const BoundTable & table);

/// {"d": [...], "pi": [...]}
Json embedding_to_json(const ThresholdVector & d, const Embedding & pi);

/// {"status": "feasible", "d": [...], "pi": [...]} or {"status": "infeasible", "certificate": {...}}
Json to_json(const SolveResult & result);

struct EmbeddingFile
{
    ThresholdVector d;
    Embedding pi;
};

/// Reads the "d" and "pi" members; other members are ignored. Throws std::invalid_argument.
EmbeddingFile embedding_from_json(const Json & j);

/// Reads {"cycles": [[v...]...]} or a full certificate object; vertices are 1-based.
std::vector<std::vector<Vertex>> certificate_cycles_from_json(const Json & j);

} // namespace robinson
