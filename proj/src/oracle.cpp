#include <robinson/oracle.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace robinson::oracle {

namespace {

void guard_paths(const RobinsonMatrix & m)
{
    if (m.size() > max_path_vertices)
        throw GuardError("brute-force path enumeration is limited to n <= " + std::to_string(max_path_vertices) +
                         ", got n = " + std::to_string(m.size()));
}

std::optional<BoundVector> step_bound(const RobinsonMatrix & m, Vertex a, Vertex b, WalkKind kind)
{
    return kind == WalkKind::Upper ? edge_upper_bound(m, a, b) : edge_lower_bound(m, a, b);
}

// Calls visit(path, bound) for every simple legal path from `from` to `to`, in
// lexicographic order of the vertex sequence. With to == from, closes cycles instead.
void for_each_path(const RobinsonMatrix & m, Vertex from, Vertex to, WalkKind kind, Vertex min_vertex,
                   const std::function<void(const std::vector<Vertex> &, const BoundVector &)> & visit)
{
    const int n = m.size();
    std::vector<Vertex> path{from};
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    used[from] = 1;

    std::function<void(const BoundVector &)> dfs = [&](const BoundVector & acc) {
        const Vertex here = path.back();
        for (Vertex next = min_vertex; next < n; ++next) {
            if (next == here)
                continue;
            const bool closes = next == to;
            if (! closes && used[next])
                continue;
            // a closed walk needs at least one intermediate vertex
            if (closes && to == from && path.size() < 2)
                continue;
            auto step = step_bound(m, here, next, kind);
            if (! step)
                continue;
            path.push_back(next);
            if (closes)
                visit(path, acc + *step);
            else {
                used[next] = 1;
                dfs(acc + *step);
                used[next] = 0;
            }
            path.pop_back();
        }
    };
    dfs(BoundVector::zero(m.levels()));
}

} // namespace

std::vector<PathBound> enumerate_paths_bruteforce(const RobinsonMatrix & m, Vertex u, Vertex v, WalkKind kind)
{
    if (u == v)
        throw std::invalid_argument("paths need distinct endpoints");
    if (u < 0 || v < 0 || u >= m.size() || v >= m.size())
        throw std::out_of_range("vertex out of range");
    guard_paths(m);

    std::map<BoundVector, std::vector<Vertex>> first;
    for_each_path(m, u, v, kind, 0,
                  [&](const std::vector<Vertex> & p, const BoundVector & b) { first.try_emplace(b, p); });

    std::vector<PathBound> out;
    for (auto & [b, p] : first) {
        bool dominated = false;
        for (auto & [o, _] : first) {
            if (o == b)
                continue;
            if (kind == WalkKind::Upper ? precedes(o, b) : precedes(b, o)) {
                dominated = true;
                break;
            }
        }
        if (! dominated)
            out.push_back({b, p});
    }
    return out;
}

std::vector<CycleRecord> enumerate_cycles_bruteforce(const RobinsonMatrix & m)
{
    guard_paths(m);
    std::vector<CycleRecord> out;
    for (Vertex u = 0; u < m.size(); ++u)
        for_each_path(m, u, u, WalkKind::Upper, u, [&](const std::vector<Vertex> & p, const BoundVector & b) {
            out.push_back({p, b});
        });
    return out;
}

namespace {

// Phase-one simplex on  A x >= 1, x >= 0  with Bland's rule. Returns a feasible x or nothing.
std::optional<std::vector<Rational>> feasible_point(const std::vector<std::vector<int>> & a, std::size_t vars)
{
    const std::size_t rows = a.size();
    // columns: x (vars), surplus (rows), artificial (rows), then rhs
    const std::size_t cols = vars + 2 * rows;
    std::vector<std::vector<Rational>> tab(rows, std::vector<Rational>(cols + 1, 0));
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t j = 0; j < vars; ++j)
            tab[r][j] = a[r][j];
        tab[r][vars + r] = -1;
        tab[r][vars + rows + r] = 1;
        tab[r][cols] = 1;
        basis[r] = vars + rows + r;
    }
    // reduced costs of "minimize the sum of artificials"
    std::vector<Rational> cost(cols + 1, 0);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t j = 0; j <= cols; ++j)
            if (j < vars + rows || j == cols)
                cost[j] -= tab[r][j];

    for (;;) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols)
            break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][enter] <= 0)
                continue;
            Rational ratio = tab[r][cols] / tab[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                leave = r;
                best = ratio;
            }
        }
        if (leave == rows)
            break; // unbounded direction; cannot happen with a bounded-below objective

        Rational piv = tab[leave][enter];
        for (auto & x : tab[leave])
            x /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || tab[r][enter] == 0)
                continue;
            Rational f = tab[r][enter];
            for (std::size_t j = 0; j <= cols; ++j)
                tab[r][j] -= f * tab[leave][j];
        }
        Rational f = cost[enter];
        for (std::size_t j = 0; j <= cols; ++j)
            cost[j] -= f * tab[leave][j];
        basis[leave] = enter;
    }

    if (cost[cols] != 0)
        return std::nullopt;
    std::vector<Rational> x(vars, 0);
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < vars)
            x[basis[r]] = tab[r][cols];
    return x;
}

} // namespace

std::optional<DirectSolution> direct_feasibility(const RobinsonMatrix & m)
{
    const int n = m.size(), k = m.levels();
    if (n > max_direct_vertices || k > max_direct_levels)
        throw GuardError("direct feasibility is limited to n <= " + std::to_string(max_direct_vertices) +
                         " and k <= " + std::to_string(max_direct_levels));

    // unknowns: Pi(2..n) at 0..n-2, d_1..d_k at n-1..n+k-2; Pi(1) = 0.
    // Every strict homogeneous inequality g.x > 0 becomes g.x >= 1.
    const std::size_t vars = static_cast<std::size_t>(n - 1 + k);
    auto pi_col = [&](Vertex v) { return v - 1; };
    auto d_col = [&](int t) { return n - 2 + t; };
    std::vector<std::vector<int>> rows;
    auto gap_row = [&](Vertex u, Vertex v, int sign) {
        std::vector<int> r(vars, 0);
        if (v > 0)
            r[pi_col(v)] += sign;
        if (u > 0)
            r[pi_col(u)] -= sign;
        return r;
    };
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            const int t = m.at(u, v);
            auto lower = gap_row(u, v, 1); // gap - d_{t+1} > 0
            if (t < k)
                lower[d_col(t + 1)] -= 1;
            rows.push_back(lower);
            if (t >= 1) {
                auto upper = gap_row(u, v, -1); // d_t - gap > 0
                upper[d_col(t)] += 1;
                rows.push_back(upper);
            }
        }
    for (int t = 1; t <= k; ++t) {
        std::vector<int> r(vars, 0);
        r[d_col(t)] = 1;
        if (t < k)
            r[d_col(t + 1)] = -1;
        rows.push_back(r);
    }

    auto x = feasible_point(rows, vars);
    if (! x)
        return std::nullopt;
    std::vector<Rational> d(static_cast<std::size_t>(k));
    for (int t = 1; t <= k; ++t)
        d[t - 1] = (*x)[d_col(t)];
    Embedding pi;
    pi.positions.push_back(0);
    for (Vertex v = 1; v < n; ++v)
        pi.positions.push_back((*x)[pi_col(v)]);
    return DirectSolution{ThresholdVector(std::move(d)), std::move(pi)};
}

namespace {

void check_lengths(const BoundVector & a, const BoundVector & b)
{
    if (a.levels() != b.levels() || a.levels() == 0)
        throw std::invalid_argument("bound vectors " + to_string(a) + " and " + to_string(b) +
                                    " need the same non-zero length");
}

} // namespace

ThresholdVector separating_threshold(const BoundVector & a, const BoundVector & b)
{
    check_lengths(a, b);
    if (precedes(a, b))
        throw std::invalid_argument(to_string(a) + " ⪯ " + to_string(b) + ": nothing to separate");
    const int k = a.levels();

    // first level where a's prefix sum overtakes b's (0-based)
    int t = 0;
    long ahead = 0, behind = 0; // sum_{i<t} (b_i - a_i)
    for (;; ++t) {
        ahead += a[t] - b[t];
        if (ahead > 0)
            break;
        behind += b[t] - a[t];
    }
    // d_t / d_1 strictly inside (behind / (a_t - b_t), 1)
    Rational lo(behind, a[t] - b[t]);
    lo.canonicalize();
    Rational rho = t == 0 ? Rational(1) : (lo + 1) / 2;

    // Levels before t sit just below d_1, levels after t just above 0; shrink
    // both offsets until the separation is exact.
    for (Rational delta(1, 2);; delta /= 2) {
        std::vector<Rational> d(static_cast<std::size_t>(k));
        d[0] = 1;
        for (int i = 1; i < t; ++i)
            d[i] = 1 - delta * (1 - rho) * i / t;
        d[t] = rho;
        for (int i = t + 1; i < k; ++i)
            d[i] = rho * delta * (k - i) / (k - 1 - t);
        Rational diff = 0;
        for (int i = 0; i < k; ++i)
            diff += (a[i] - b[i]) * d[i];
        if (diff <= 0)
            continue;

        Integer l = 1;
        for (auto & x : d) {
            x.canonicalize();
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        }
        for (auto & x : d)
            x *= l;
        Integer g = 0;
        for (auto & x : d)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        for (auto & x : d)
            x /= g;
        return ThresholdVector(std::move(d));
    }
}

BoundVector buffer_vector(const BoundVector & a, const BoundVector & b)
{
    check_lengths(a, b);
    if (! precedes(a, b))
        throw std::invalid_argument(to_string(a) + " ⋠ " + to_string(b) + ": no buffer vector");
    const int k = a.levels();

    BoundVector c = BoundVector::zero(k);
    for (int t = 0; t < k; ++t) {
        const int e = std::max(a[t] - b[t], 0);
        // push the excess at level t onto earlier levels with room below b
        int f = e;
        for (int i = 0; i < t; ++i) {
            const int step = std::min(f, b[i] - c[i]);
            f -= step;
            c[i] += step;
        }
        c[t] = a[t] - e;
    }
    return c;
}

} // namespace robinson::oracle
