#include <robinson/pathgen.hpp>

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace robinson {

bool VertexSet::subset_of(const VertexSet & o) const
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        if (_words[i] & ~o._words[i])
            return false;
    return true;
}

int VertexSet::intersection_size(const VertexSet & o) const
{
    int c = 0;
    for (std::size_t i = 0; i < _words.size(); ++i)
        c += std::popcount(_words[i] & o._words[i]);
    return c;
}

VertexSet & VertexSet::operator|=(const VertexSet & o)
{
    for (std::size_t i = 0; i < _words.size(); ++i)
        _words[i] |= o._words[i];
    return *this;
}

namespace {

bool dominates(const BoundVector & eb, const VertexSet & es, const BoundVector & cb, const VertexSet & cs,
               Pruning pruning)
{
    if (! precedes(eb, cb))
        return false;
    return pruning == Pruning::Bound || es.subset_of(cs);
}

bool entry_less(const BoundEntry & a, const BoundEntry & b)
{
    if (auto c = a.bound <=> b.bound; c != 0)
        return c < 0;
    return a.path < b.path;
}

} // namespace

bool minimal_insert(BoundCell & cell, BoundEntry candidate, Pruning pruning)
{
    for (auto & e : cell)
        if (dominates(e.bound, e.support, candidate.bound, candidate.support, pruning))
            return false;
    std::erase_if(cell, [&](const BoundEntry & e) {
        return dominates(candidate.bound, candidate.support, e.bound, e.support, pruning);
    });
    auto pos = std::upper_bound(cell.begin(), cell.end(), candidate, entry_less);
    cell.insert(pos, std::move(candidate));
    return true;
}

void prune_to_minimal(BoundCell & cell)
{
    std::sort(cell.begin(), cell.end(), entry_less);
    std::vector<char> keep(cell.size(), 1);
    for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t j = 0; j < cell.size() && keep[i]; ++j) {
            if (i == j || ! precedes(cell[j].bound, cell[i].bound))
                continue;
            // equal bounds: the earlier (lexicographically smaller path) one survives
            keep[i] = cell[j].bound == cell[i].bound && j > i;
        }
    BoundCell kept;
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (keep[i])
            kept.push_back(std::move(cell[i]));
    cell = std::move(kept);
}

std::vector<BoundVector> BoundTable::upper_bounds(Vertex u, Vertex v) const
{
    std::vector<BoundVector> out;
    for (auto & e : cell(u, v))
        out.push_back(e.bound);
    return out;
}

std::vector<BoundVector> BoundTable::lower_bounds(Vertex u, Vertex v) const
{
    std::vector<BoundVector> out;
    for (auto & e : cell(v, u))
        out.push_back(-e.bound);
    return out;
}

std::size_t BoundTable::max_cell_size() const
{
    std::size_t m = 0;
    for (auto & c : _cells)
        m = std::max(m, c.size());
    return m;
}

bool operator==(const BoundTable & a, const BoundTable & b)
{
    if (a._n != b._n || a._k != b._k)
        return false;
    for (std::size_t i = 0; i < a._cells.size(); ++i) {
        auto & x = a._cells[i];
        auto & y = b._cells[i];
        if (x.size() != y.size())
            return false;
        for (std::size_t e = 0; e < x.size(); ++e)
            if (x[e].bound != y[e].bound || x[e].path != y[e].path || ! (x[e].support == y[e].support))
                return false;
    }
    return true;
}

namespace {

BoundTable initial_table(const RobinsonMatrix & m)
{
    const int n = m.size();
    BoundTable table(n, m.levels());
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j) {
            if (i == j)
                continue;
            // forward steps need an edge; backward steps are always legal
            if (auto b = edge_upper_bound(m, i, j)) {
                VertexSet s(n);
                s.insert(i);
                s.insert(j);
                table.cell(i, j).push_back({*b, {i, j}, std::move(s)});
            }
        }
    return table;
}

// Merges UB(i,s) + UB(s,j) into cell (i,j). Only reads row s and column s, which
// are never written during pivot phase s, so rows i can run concurrently.
void relax(BoundTable & table, Vertex s, Vertex i, Vertex j, Pruning pruning)
{
    const auto & left = table.cell(i, s);
    const auto & right = table.cell(s, j);
    if (left.empty() || right.empty())
        return;
    auto & target = table.cell(i, j);
    // pieces share only the pivot, or the pivot and the closing vertex of a cycle
    const int shared = i == j ? 2 : 1;

    for (const auto & w1 : left)
        for (const auto & w2 : right) {
            if (w1.support.intersection_size(w2.support) != shared)
                continue;
            BoundVector bound = w1.bound + w2.bound;
            if (pruning == Pruning::Bound) {
                bool dominated = std::any_of(target.begin(), target.end(),
                    [&](const BoundEntry & e) { return precedes(e.bound, bound); });
                if (dominated)
                    continue;
            }
            BoundEntry candidate;
            candidate.bound = std::move(bound);
            candidate.support = w1.support;
            candidate.support |= w2.support;
            candidate.path.reserve(w1.path.size() + w2.path.size() - 1);
            candidate.path = w1.path;
            candidate.path.insert(candidate.path.end(), w2.path.begin() + 1, w2.path.end());
            minimal_insert(target, std::move(candidate), pruning);
        }
}

void finish(BoundTable & table, Pruning pruning)
{
    if (pruning != Pruning::Exact)
        return;
    for (Vertex i = 0; i < table.size(); ++i)
        for (Vertex j = 0; j < table.size(); ++j)
            prune_to_minimal(table.cell(i, j));
}

} // namespace

BoundTable generate_bound_tables_serial(const RobinsonMatrix & m, Pruning pruning)
{
    auto table = initial_table(m);
    const int n = m.size();
    for (Vertex s = 0; s < n; ++s)
        for (Vertex i = 0; i < n; ++i) {
            if (i == s)
                continue;
            for (Vertex j = 0; j < n; ++j)
                if (j != s)
                    relax(table, s, i, j, pruning);
        }
    finish(table, pruning);
    return table;
}

BoundTable generate_bound_tables(const RobinsonMatrix & m, const TableOptions & options)
{
    if (! options.parallel)
        return generate_bound_tables_serial(m, options.pruning);

    auto table = initial_table(m);
    const int n = m.size();
    for (Vertex s = 0; s < n; ++s) {
#pragma omp parallel for schedule(dynamic, 1)
        for (Vertex i = 0; i < n; ++i) {
            if (i == s)
                continue;
            for (Vertex j = 0; j < n; ++j)
                if (j != s)
                    relax(table, s, i, j, options.pruning);
        }
    }
    finish(table, options.pruning);
    return table;
}

std::vector<Vertex> canonical_rotation(const std::vector<Vertex> & closed)
{
    if (closed.size() < 2)
        return closed;
    std::vector<Vertex> open(closed.begin(), closed.end() - 1);
    std::rotate(open.begin(), std::min_element(open.begin(), open.end()), open.end());
    open.push_back(open.front());
    return open;
}

std::vector<CycleRecord> extract_cycles(const BoundTable & table)
{
    // every cycle shows up once per member vertex
    std::map<std::vector<Vertex>, BoundVector> distinct;
    for (Vertex v = 0; v < table.size(); ++v)
        for (auto & e : table.cell(v, v))
            distinct.emplace(canonical_rotation(e.path), e.bound);

    std::vector<CycleRecord> all;
    all.reserve(distinct.size());
    for (auto & [vs, b] : distinct)
        all.push_back({vs, b});
    std::sort(all.begin(), all.end(), [](const CycleRecord & a, const CycleRecord & b) {
        if (auto c = a.bound <=> b.bound; c != 0)
            return c < 0;
        return a.vertices < b.vertices;
    });

    std::vector<CycleRecord> minimal;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < all.size() && ! dominated; ++j)
            if (i != j && precedes(all[j].bound, all[i].bound))
                dominated = all[j].bound != all[i].bound || j < i;
        if (! dominated)
            minimal.push_back(all[i]);
    }
    return minimal;
}

} // namespace robinson
