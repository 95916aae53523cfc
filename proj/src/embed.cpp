#include <robinson/embed.hpp>

#include <sstream>

namespace robinson {

namespace {

std::optional<EmbeddingViolation> check_row(const RobinsonMatrix & m, const ThresholdVector & d,
                                            const Embedding & pi, Vertex u)
{
    const int n = m.size();
    for (Vertex v = u + 1; v < n; ++v) {
        const int t = m.at(u, v);
        Rational gap = pi.positions[v] - pi.positions[u];
        auto hi = d.level_upper(t);
        if (gap <= d.level_lower(t) || (hi && gap >= *hi))
            return EmbeddingViolation{u, v, t, gap};
    }
    return std::nullopt;
}

void check_shape(const RobinsonMatrix & m, const ThresholdVector & d, const Embedding & pi)
{
    if (pi.positions.size() != static_cast<std::size_t>(m.size()))
        throw std::invalid_argument("embedding has " + std::to_string(pi.positions.size()) + " positions, matrix has " +
                                    std::to_string(m.size()) + " rows");
    if (d.levels() != m.levels())
        throw std::invalid_argument("threshold vector has " + std::to_string(d.levels()) + " levels, matrix has k = " +
                                    std::to_string(m.levels()));
}

} // namespace

std::optional<EmbeddingViolation> verify_embedding_serial(const RobinsonMatrix & m, const ThresholdVector & d,
                                                          const Embedding & pi)
{
    check_shape(m, d, pi);
    for (Vertex u = 0; u < m.size(); ++u)
        if (auto bad = check_row(m, d, pi, u))
            return bad;
    return std::nullopt;
}

std::optional<EmbeddingViolation> verify_embedding(const RobinsonMatrix & m, const ThresholdVector & d,
                                                   const Embedding & pi)
{
    check_shape(m, d, pi);
    const int n = m.size();
    std::vector<std::optional<EmbeddingViolation>> first(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 4)
    for (Vertex u = 0; u < n; ++u)
        first[u] = check_row(m, d, pi, u);
    for (auto & f : first)
        if (f)
            return f;
    return std::nullopt;
}

Embedding construct_embedding(const RobinsonMatrix & m, const ThresholdVector & d, const BoundTable & table)
{
    const int n = m.size();
    if (table.size() != n || table.levels() != m.levels() || d.levels() != m.levels())
        throw std::invalid_argument("bound table, thresholds and matrix disagree in size");
    auto cycles = extract_cycles(table);
    for (auto & c : cycles)
        if (dot(c.bound, d) <= 0)
            throw std::invalid_argument("d violates cycle " + format_vertices(c.vertices) + " with bound " +
                                        to_string(c.bound));

    Embedding pi;
    pi.positions.assign(static_cast<std::size_t>(n), Rational(0));
    for (Vertex v = 1; v < n; ++v) {
        std::optional<Rational> ub, lb;
        Vertex ub_from = -1, lb_from = -1;
        for (Vertex i = 0; i < v; ++i) {
            for (auto & e : table.cell(i, v)) {
                Rational x = pi.positions[i] + dot(e.bound, d);
                if (! ub || x < *ub) {
                    ub = x;
                    ub_from = i;
                }
            }
            for (auto & e : table.cell(v, i)) {
                Rational x = pi.positions[i] - dot(e.bound, d);
                if (! lb || x > *lb) {
                    lb = x;
                    lb_from = i;
                }
            }
        }
        if (! lb)
            throw std::logic_error("bound table has no lower bound for vertex " + std::to_string(v + 1));
        if (! ub) {
            pi.positions[v] = *lb + d.at(1);
            continue;
        }
        if (*lb >= *ub) {
            std::ostringstream msg;
            msg << "vertex " << v + 1 << ": lower bound " << to_string(*lb) << " (from " << lb_from + 1
                << ") is not below upper bound " << to_string(*ub) << " (from " << ub_from + 1 << ")";
            throw ConstructionError(v, ub_from, lb_from, msg.str());
        }
        pi.positions[v] = (*lb + *ub) / 2;
    }
    return pi;
}

} // namespace robinson
