#pragma once

#include <robinson/matrix.hpp>

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace robinson {

/// Coefficients (a_1..a_k) of a linear form a.d in the threshold distances.
class BoundVector
{
public:
    using Storage = boost::container::small_vector<int, 4>;

    BoundVector() = default;
    BoundVector(std::initializer_list<int> coeffs) : _c(coeffs) {}
    explicit BoundVector(Storage coeffs) : _c(std::move(coeffs)) {}

    static BoundVector zero(int k) { return BoundVector(Storage(static_cast<std::size_t>(k), 0)); }
    /// chi_t, 1-based level t.
    static BoundVector unit(int k, int t);

    int levels() const noexcept { return static_cast<int>(_c.size()); }
    int operator[](int i) const noexcept { return _c[static_cast<std::size_t>(i)]; }
    int & operator[](int i) noexcept { return _c[static_cast<std::size_t>(i)]; }
    const Storage & coeffs() const noexcept { return _c; }

    bool is_zero() const noexcept;
    /// Sum of |a_i|; membership in Z^k_n is norm() <= n.
    int norm() const noexcept;

    BoundVector & operator+=(const BoundVector & o);
    BoundVector & operator-=(const BoundVector & o);
    friend BoundVector operator+(BoundVector a, const BoundVector & b) { return a += b; }
    friend BoundVector operator-(BoundVector a, const BoundVector & b) { return a -= b; }
    BoundVector operator-() const;

    friend bool operator==(const BoundVector & a, const BoundVector & b) { return a._c == b._c; }
    friend std::strong_ordering operator<=>(const BoundVector & a, const BoundVector & b);

private:
    Storage _c;
};

/// "(a1,...,ak)"
std::string to_string(const BoundVector & b);

/// beta+(u,v): an upper bound on Pi(v)-Pi(u). Undefined (nullopt) for a null-edge
/// traversed upwards. Throws std::invalid_argument when u == v.
std::optional<BoundVector> edge_upper_bound(const RobinsonMatrix & m, Vertex u, Vertex v);

/// beta-(u,v): a lower bound on Pi(v)-Pi(u). Undefined only for a null-edge
/// traversed downwards. Throws std::invalid_argument when u == v.
std::optional<BoundVector> edge_lower_bound(const RobinsonMatrix & m, Vertex u, Vertex v);

enum class WalkKind
{
    Upper,
    Lower
};

struct BoundWalk
{
    std::vector<Vertex> vertices;
    WalkKind kind = WalkKind::Upper;

    friend bool operator==(const BoundWalk &, const BoundWalk &) = default;
};

class IllegalWalk : public std::invalid_argument
{
public:
    IllegalWalk(std::size_t step, const std::string & what) : std::invalid_argument(what), _step(step) {}

    /// 1-based index of the offending step (w_{step-1} -> w_step).
    std::size_t step() const noexcept { return _step; }

private:
    std::size_t _step;
};

/// Index of the first step that breaks legality for the walk's kind, if any.
std::optional<std::size_t> first_illegal_step(const RobinsonMatrix & m, const BoundWalk & w);

/// Sum of the per-step edge bounds of the walk's kind. Throws IllegalWalk.
BoundVector walk_bound(const RobinsonMatrix & m, const BoundWalk & w);

BoundWalk reverse_walk(const BoundWalk & w);

/// Concatenation W1 + W2; the last vertex of W1 must be the first of W2 and the kinds must match.
BoundWalk concatenate(const BoundWalk & w1, const BoundWalk & w2);

/// a ⪯ b: every prefix sum of a is at most the matching prefix sum of b.
/// Throws std::invalid_argument on a length mismatch.
bool precedes(const BoundVector & a, const BoundVector & b);

/// Label of the chain S_t^i containing a (k = 2 only). The zero vector gets
/// norm 0, chain 0.
struct ChainLabel
{
    int norm = 0;
    int chain = 0;

    bool is_zero() const noexcept { return norm == 0; }
    friend bool operator==(const ChainLabel &, const ChainLabel &) = default;
};

ChainLabel chain_id(const BoundVector & a);

/// "⟨v0,...,vp⟩" with 1-based vertices.
std::string format_vertices(const std::vector<Vertex> & vertices);

} // namespace robinson
