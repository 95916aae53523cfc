#pragma once

#include <robinson/bounds.hpp>
#include <robinson/matrix.hpp>

#include <cstdint>
#include <vector>

namespace robinson {

/// Fixed-size bitset over [n].
class VertexSet
{
public:
    VertexSet() = default;
    explicit VertexSet(int n) : _words((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    void insert(Vertex v) { _words[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
    bool contains(Vertex v) const { return (_words[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1U; }
    bool subset_of(const VertexSet & o) const;
    int intersection_size(const VertexSet & o) const;
    VertexSet & operator|=(const VertexSet & o);

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    std::vector<std::uint64_t> _words;
};

/// How a table cell decides that a candidate path is redundant.
enum class Pruning
{
    /// Reject when some stored bound is ⪯ the candidate's. Polynomial; this is the
    /// published bound-generation rule.
    Bound,
    /// Reject only when a stored entry has a ⪯ bound *and* visits a subset of the
    /// candidate's vertices. Cells are filtered to their ⪯-minimal bounds at the
    /// end and then equal the true minimal sets over all simple paths. Worst case
    /// exponential; meant for small matrices and for checking Bound.
    Exact
};

struct BoundEntry
{
    BoundVector bound;
    std::vector<Vertex> path;
    VertexSet support;
};

using BoundCell = std::vector<BoundEntry>;

/// Inserts `candidate` unless an existing entry dominates it; evicts entries it
/// dominates. Keeps the cell sorted by (bound, path). Returns whether it was inserted.
bool minimal_insert(BoundCell & cell, BoundEntry candidate, Pruning pruning = Pruning::Bound);

/// Per ordered pair (i,j), i != j: upper-bound-paths from i to j with their bounds.
/// Cell (i,i) holds upper-bound-cycles through i.
class BoundTable
{
public:
    BoundTable(int n, int k) : _n(n), _k(k), _cells(static_cast<std::size_t>(n) * n) {}

    int size() const noexcept { return _n; }
    int levels() const noexcept { return _k; }

    const BoundCell & cell(Vertex i, Vertex j) const { return _cells[index(i, j)]; }
    BoundCell & cell(Vertex i, Vertex j) { return _cells[index(i, j)]; }

    /// UB(u,v) as bound vectors.
    std::vector<BoundVector> upper_bounds(Vertex u, Vertex v) const;
    /// LB(u,v) = { -b : b in UB(v,u) }.
    std::vector<BoundVector> lower_bounds(Vertex u, Vertex v) const;

    std::size_t max_cell_size() const;

    friend bool operator==(const BoundTable & a, const BoundTable & b);

private:
    std::size_t index(Vertex i, Vertex j) const { return static_cast<std::size_t>(i) * _n + j; }

    int _n, _k;
    std::vector<BoundCell> _cells;
};

struct TableOptions
{
    Pruning pruning = Pruning::Bound;
    /// Process the cells of each pivot phase on OpenMP threads; same result as serial.
    bool parallel = false;
};

/// Floyd-Warshall-style bound generation. With `parallel`, the cells of one pivot
/// phase are processed by OpenMP threads; the result is identical to the serial run.
BoundTable generate_bound_tables(const RobinsonMatrix & m, const TableOptions & options = {});

/// Single-threaded reference kernel.
BoundTable generate_bound_tables_serial(const RobinsonMatrix & m, Pruning pruning = Pruning::Bound);

/// Closed upper-bound-walk <u,...,u> with no other repeated vertex.
struct CycleRecord
{
    std::vector<Vertex> vertices;
    BoundVector bound;

    friend bool operator==(const CycleRecord &, const CycleRecord &) = default;
};

/// Rotates a closed walk so that it starts (and ends) at its smallest vertex.
std::vector<Vertex> canonical_rotation(const std::vector<Vertex> & closed);

/// Distinct cycles from the diagonal cells, canonically rotated, filtered to ⪯-minimal
/// bounds (one representative per bound). Sorted by (bound, vertices).
std::vector<CycleRecord> extract_cycles(const BoundTable & table);

/// Keeps the ⪯-minimal entries; among equal bounds, the lexicographically smallest path.
void prune_to_minimal(BoundCell & cell);

} // namespace robinson
