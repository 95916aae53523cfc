#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace robinson {

// Vertices are 0-based in the API and 1-based in every text or JSON rendering.
using Vertex = int;

class ParseError : public std::runtime_error
{
public:
    ParseError(int line, int column, const std::string & what);

    int line() const noexcept { return _line; }
    int column() const noexcept { return _column; }

private:
    int _line, _column;
};

enum class Defect
{
    Shape,
    EntryOutOfRange,
    Asymmetric,
    Diagonal,
    NotRobinson
};

/// A matrix that parsed but is not in S^n[k]. `where` holds the offending
/// vertices (0-based): (u,v) for entry defects, (u) for the diagonal, (u,v,w)
/// for a Robinson violation.
class ValidationError : public std::runtime_error
{
public:
    ValidationError(Defect defect, std::vector<Vertex> where, const std::string & what);

    Defect defect() const noexcept { return _defect; }
    const std::vector<Vertex> & where() const noexcept { return _where; }

private:
    Defect _defect;
    std::vector<Vertex> _where;
};

struct Triple
{
    Vertex u, v, w;
    friend bool operator==(const Triple &, const Triple &) = default;
};

using RawMatrix = std::vector<std::vector<int>>;

/// Symmetric matrix with entries in {0..k}, k on the diagonal, and entries
/// non-increasing away from the diagonal. Immutable once built.
class RobinsonMatrix
{
public:
    /// Checks every invariant; throws ValidationError naming the first defect.
    static RobinsonMatrix from_rows(int k, const RawMatrix & rows);

    int size() const noexcept { return _n; }
    int levels() const noexcept { return _k; }
    int at(Vertex u, Vertex v) const noexcept { return _entries[static_cast<std::size_t>(u) * _n + v]; }

    RawMatrix rows() const;
    bool same_row(Vertex u, Vertex v) const;

    friend bool operator==(const RobinsonMatrix &, const RobinsonMatrix &) = default;

private:
    RobinsonMatrix(int n, int k, std::vector<int> entries) :
        _n(n), _k(k), _entries(std::move(entries))
    {
    }

    int _n = 0;
    int _k = 0;
    std::vector<int> _entries;
};

/// Lexicographically smallest (u,v,w), u<v<w, with a[u][w] > a[u][v] or a[u][w] > a[v][w].
/// Expects a square, symmetric input.
std::optional<Triple> validate_robinson(const RawMatrix & m, int k);

RobinsonMatrix parse_matrix(std::istream & in);
RobinsonMatrix parse_matrix_text(std::string_view text);
RobinsonMatrix load_matrix(const std::string & path);

void write_matrix(std::ostream & out, const RobinsonMatrix & m);
std::string to_text(const RobinsonMatrix & m);

/// Binary matrix A^(t): 1 where a[u][v] >= t. Throws std::out_of_range unless 1 <= t <= k.
RawMatrix level_graph(const RobinsonMatrix & m, int t);

} // namespace robinson
