#include <robinson/json_io.hpp>

namespace robinson {

Json to_json(const BoundVector & b)
{
    Json j = Json::array();
    for (int x : b.coeffs())
        j.push_back(x);
    return j;
}

Json vertices_to_json(const std::vector<Vertex> & vertices)
{
    Json j = Json::array();
    for (Vertex v : vertices)
        j.push_back(v + 1);
    return j;
}

namespace {

Json rationals_to_json(const std::vector<Rational> & xs)
{
    Json j = Json::array();
    for (auto & x : xs)
        j.push_back(to_string(x));
    return j;
}

std::vector<Rational> rationals_from_json(const Json & j, const char * what)
{
    if (! j.is_array())
        throw std::invalid_argument(std::string("\"") + what + "\" must be an array");
    std::vector<Rational> out;
    for (auto & x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.emplace_back(Integer(std::to_string(x.get<long long>())));
        else
            throw std::invalid_argument(std::string("\"") + what + "\" entries must be rational strings or integers");
    }
    return out;
}

} // namespace

Json to_json(const ThresholdVector & d)
{
    return rationals_to_json(d.values());
}

Json to_json(const CycleRecord & c)
{
    return {{"vertices", vertices_to_json(c.vertices)}, {"bound", to_json(c.bound)}};
}

Json to_json(const InfeasibilityCertificate & cert)
{
    Json cycles = Json::array(), bounds = Json::array();
    for (auto & c : cert.cycles) {
        cycles.push_back(vertices_to_json(c.vertices));
        bounds.push_back(to_json(c.bound));
    }
    return {{"cycles", cycles}, {"bounds", bounds}, {"explanation", cert.explanation}};
}

Json table_to_json(const BoundTable & table)
{
    Json pairs = Json::object();
    const int n = table.size();
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
            if (i == j)
                continue;
            Json cell = Json::array();
            for (auto & e : table.cell(i, j))
                cell.push_back({{"bound", to_json(e.bound)}, {"path", vertices_to_json(e.path)}});
            pairs[std::to_string(i + 1) + "," + std::to_string(j + 1)] = cell;
        }
    Json cycles = Json::array();
    for (auto & c : extract_cycles(table))
        cycles.push_back(to_json(c));
    return {{"pairs", pairs}, {"cycles", cycles}};
}

Json embedding_to_json(const ThresholdVector & d, const Embedding & pi)
{
    return {{"d", to_json(d)}, {"pi", rationals_to_json(pi.positions)}};
}

Json to_json(const SolveResult & result)
{
    if (auto * s = std::get_if<Solution>(&result)) {
        Json j = embedding_to_json(s->d, s->pi);
        j["status"] = "feasible";
        return j;
    }
    return {{"status", "infeasible"}, {"certificate", to_json(std::get<InfeasibilityCertificate>(result))}};
}

EmbeddingFile embedding_from_json(const Json & j)
{
    if (! j.is_object() || ! j.contains("d") || ! j.contains("pi"))
        throw std::invalid_argument("embedding JSON needs \"d\" and \"pi\" members");
    return EmbeddingFile{ThresholdVector(rationals_from_json(j.at("d"), "d")),
                         Embedding{rationals_from_json(j.at("pi"), "pi")}};
}

std::vector<std::vector<Vertex>> certificate_cycles_from_json(const Json & j)
{
    const Json & body = j.contains("certificate") ? j.at("certificate") : j;
    if (! body.is_object() || ! body.contains("cycles") || ! body.at("cycles").is_array())
        throw std::invalid_argument("certificate JSON needs a \"cycles\" array");
    std::vector<std::vector<Vertex>> out;
    for (auto & c : body.at("cycles")) {
        // accept both plain vertex lists and {"vertices": [...]} objects
        const Json & vs = c.is_object() ? c.at("vertices") : c;
        std::vector<Vertex> cycle;
        for (auto & v : vs) {
            if (! v.is_number_integer() || v.get<int>() < 1)
                throw std::invalid_argument("cycle vertices must be positive integers");
            cycle.push_back(v.get<int>() - 1);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

} // namespace robinson
