#include <robinson/reduction.hpp>

#include <algorithm>

namespace robinson {

RowReduction reduce_repeated_rows(const RobinsonMatrix & m)
{
    const int n = m.size();
    RowReduction r{m, std::vector<Vertex>(static_cast<std::size_t>(n)), {}, {}};
    for (Vertex v = 0; v < n; ++v) {
        if (v > 0 && m.same_row(v - 1, v)) {
            r.index_map[v] = r.index_map[v - 1];
            ++r.run_lengths.back();
            continue;
        }
        // Robinson order puts equal rows next to each other
        for (Vertex rep : r.representatives)
            if (m.same_row(rep, v))
                throw std::logic_error("rows " + std::to_string(rep + 1) + " and " + std::to_string(v + 1) +
                                       " are equal but not adjacent");
        r.index_map[v] = static_cast<Vertex>(r.representatives.size());
        r.representatives.push_back(v);
        r.run_lengths.push_back(0);
    }

    const auto p = r.representatives.size();
    RawMatrix rows(p, std::vector<int>(p));
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
            rows[i][j] = m.at(r.representatives[i], r.representatives[j]);
    r.reduced = RobinsonMatrix::from_rows(m.levels(), rows);
    return r;
}

Embedding expand_embedding(const RowReduction & reduction, const Embedding & reduced_pi, const ThresholdVector & d)
{
    const auto & m = reduction.reduced;
    if (auto bad = verify_embedding_serial(m, d, reduced_pi))
        throw std::invalid_argument("reduced embedding violates pair (" + std::to_string(bad->u + 1) + "," +
                                    std::to_string(bad->v + 1) + ")");

    const int p = m.size();
    const int k = m.levels();
    const auto & x = reduced_pi.positions;
    Embedding out;
    out.positions.reserve(reduction.index_map.size());
    for (Vertex i = 0; i < p; ++i) {
        out.positions.push_back(x[i]);
        const int r = reduction.run_lengths[i];
        if (r == 0)
            continue;
        // twice the room left around x[i]
        Rational slack = d.at(k);
        for (Vertex j = 0; j < p; ++j) {
            if (j == i)
                continue;
            const int t = m.at(std::min(i, j), std::max(i, j));
            if (j < i) {
                if (auto hi = d.level_upper(t))
                    slack = std::min(slack, Rational(*hi - (x[i] - x[j])));
            }
            else
                slack = std::min(slack, Rational((x[j] - x[i]) - d.level_lower(t)));
        }
        Rational eps = slack / 2;
        for (int c = 1; c <= r; ++c)
            out.positions.push_back(x[i] + eps * c / r);
    }
    return out;
}

} // namespace robinson
