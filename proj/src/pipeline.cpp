#include <robinson/pipeline.hpp>

#include <robinson/reduction.hpp>

namespace robinson {

SolveResult solve(const RobinsonMatrix & m, const SolveOptions & options)
{
    const auto reduction = reduce_repeated_rows(m);
    const auto & core = reduction.reduced;
    const auto table = generate_bound_tables(core, options.tables);
    const auto cycles = extract_cycles(table);

    Method method = options.method;
    if (method == Method::Auto)
        method = core.levels() == 2 ? Method::RatioK2 : Method::General;
    if (method == Method::RatioK2 && core.levels() != 2)
        throw std::invalid_argument("the ratio method needs k = 2, matrix has k = " + std::to_string(core.levels()));

    auto decided = method == Method::RatioK2 ? solve_ratio_k2(cycles) : solve_general_k(cycles, core.levels());

    if (auto * cert = std::get_if<InfeasibilityCertificate>(&decided)) {
        for (auto & c : cert->cycles)
            for (auto & v : c.vertices)
                v = reduction.representatives[v];
        return std::move(*cert);
    }

    const auto & d = std::get<ThresholdVector>(decided);
    Embedding reduced_pi;
    try {
        reduced_pi = construct_embedding(core, d, table);
    }
    catch (const ConstructionError & e) {
        throw InternalError(std::string("construction failed for a feasible d: ") + e.what());
    }
    if (auto bad = verify_embedding(core, d, reduced_pi))
        throw InternalError("constructed embedding violates pair (" + std::to_string(bad->u + 1) + "," +
                            std::to_string(bad->v + 1) + ") at level " + std::to_string(bad->level));

    Embedding pi = expand_embedding(reduction, reduced_pi, d);
    if (auto bad = verify_embedding(m, d, pi))
        throw InternalError("expanded embedding violates pair (" + std::to_string(bad->u + 1) + "," +
                            std::to_string(bad->v + 1) + ") at level " + std::to_string(bad->level));
    return Solution{d, std::move(pi)};
}

} // namespace robinson
