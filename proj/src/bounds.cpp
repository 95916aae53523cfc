#include <robinson/bounds.hpp>

#include <algorithm>
#include <cstdlib>

namespace robinson {

BoundVector BoundVector::unit(int k, int t)
{
    auto b = zero(k);
    b[t - 1] = 1;
    return b;
}

bool BoundVector::is_zero() const noexcept
{
    return std::all_of(_c.begin(), _c.end(), [](int x) { return x == 0; });
}

int BoundVector::norm() const noexcept
{
    int s = 0;
    for (int x : _c)
        s += std::abs(x);
    return s;
}

BoundVector & BoundVector::operator+=(const BoundVector & o)
{
    for (std::size_t i = 0; i < _c.size(); ++i)
        _c[i] += o._c[i];
    return *this;
}

BoundVector & BoundVector::operator-=(const BoundVector & o)
{
    for (std::size_t i = 0; i < _c.size(); ++i)
        _c[i] -= o._c[i];
    return *this;
}

BoundVector BoundVector::operator-() const
{
    BoundVector r = *this;
    for (auto & x : r._c)
        x = -x;
    return r;
}

std::strong_ordering operator<=>(const BoundVector & a, const BoundVector & b)
{
    return std::lexicographical_compare_three_way(a._c.begin(), a._c.end(), b._c.begin(), b._c.end());
}

std::string to_string(const BoundVector & b)
{
    std::string s = "(";
    for (int i = 0; i < b.levels(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(b[i]);
    }
    return s + ")";
}

namespace {

void require_distinct(Vertex u, Vertex v)
{
    if (u == v)
        throw std::invalid_argument("edge bound needs two distinct vertices");
}

// Both helpers assume u < v.
std::optional<BoundVector> forward_upper(const RobinsonMatrix & m, Vertex u, Vertex v)
{
    int t = m.at(u, v);
    if (t == 0)
        return std::nullopt;
    return BoundVector::unit(m.levels(), t);
}

BoundVector forward_lower(const RobinsonMatrix & m, Vertex u, Vertex v)
{
    int t = m.at(u, v);
    if (t == m.levels())
        return BoundVector::zero(m.levels());
    return BoundVector::unit(m.levels(), t + 1);
}

} // namespace

std::optional<BoundVector> edge_upper_bound(const RobinsonMatrix & m, Vertex u, Vertex v)
{
    require_distinct(u, v);
    if (u < v)
        return forward_upper(m, u, v);
    return -forward_lower(m, v, u);
}

std::optional<BoundVector> edge_lower_bound(const RobinsonMatrix & m, Vertex u, Vertex v)
{
    require_distinct(u, v);
    if (u < v)
        return forward_lower(m, u, v);
    if (auto b = forward_upper(m, v, u))
        return -*b;
    return std::nullopt;
}

std::optional<std::size_t> first_illegal_step(const RobinsonMatrix & m, const BoundWalk & w)
{
    for (std::size_t i = 1; i < w.vertices.size(); ++i) {
        Vertex a = w.vertices[i - 1], b = w.vertices[i];
        if (a == b || a < 0 || b < 0 || a >= m.size() || b >= m.size())
            return i;
        bool null_edge = m.at(a, b) == 0;
        if (null_edge && (w.kind == WalkKind::Upper ? a < b : a > b))
            return i;
    }
    return std::nullopt;
}

BoundVector walk_bound(const RobinsonMatrix & m, const BoundWalk & w)
{
    if (w.vertices.empty())
        throw IllegalWalk(0, "empty walk");
    if (auto bad = first_illegal_step(m, w))
        throw IllegalWalk(*bad, "step " + std::to_string(*bad) + " of "
                + (w.kind == WalkKind::Upper ? "upper" : "lower") + "-bound-walk "
                + format_vertices(w.vertices) + " is not allowed");
    auto total = BoundVector::zero(m.levels());
    for (std::size_t i = 1; i < w.vertices.size(); ++i) {
        Vertex a = w.vertices[i - 1], b = w.vertices[i];
        total += *(w.kind == WalkKind::Upper ? edge_upper_bound(m, a, b) : edge_lower_bound(m, a, b));
    }
    return total;
}

BoundWalk reverse_walk(const BoundWalk & w)
{
    BoundWalk r{{w.vertices.rbegin(), w.vertices.rend()}, w.kind == WalkKind::Upper ? WalkKind::Lower : WalkKind::Upper};
    return r;
}

BoundWalk concatenate(const BoundWalk & w1, const BoundWalk & w2)
{
    if (w1.kind != w2.kind)
        throw std::invalid_argument("cannot concatenate walks of different kinds");
    if (w1.vertices.empty() || w2.vertices.empty() || w1.vertices.back() != w2.vertices.front())
        throw std::invalid_argument("walks do not meet");
    BoundWalk w = w1;
    w.vertices.insert(w.vertices.end(), w2.vertices.begin() + 1, w2.vertices.end());
    return w;
}

bool precedes(const BoundVector & a, const BoundVector & b)
{
    if (a.levels() != b.levels())
        throw std::invalid_argument("bound vectors of different lengths");
    long long sa = 0, sb = 0;
    for (int i = 0; i < a.levels(); ++i) {
        sa += a[i];
        sb += b[i];
        if (sa > sb)
            return false;
    }
    return true;
}

ChainLabel chain_id(const BoundVector & a)
{
    if (a.levels() != 2)
        throw std::invalid_argument("chain decomposition is defined for k = 2 only");
    int t = a.norm();
    if (t == 0)
        return {};
    // S_t^1 = {(-t+i, i) : 0 <= i <= t} u {(i, t-i) : 1 <= i < t}
    // S_t^2 = {(-t+i, -i) : 1 <= i <= t} u {(i, -t+i) : 1 <= i <= t}
    if (a[1] > 0 || (a[1] == 0 && a[0] < 0))
        return {t, 1};
    return {t, 2};
}

std::string format_vertices(const std::vector<Vertex> & vertices)
{
    std::string s = "⟨";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(vertices[i] + 1);
    }
    return s + "⟩";
}

} // namespace robinson
