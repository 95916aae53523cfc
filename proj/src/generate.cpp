#include <robinson/generate.hpp>

#include <algorithm>

namespace robinson {

namespace {

int uniform(Rng & rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

} // namespace

RobinsonMatrix quantized_instance(int n, int k, Rng & rng)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("need n >= 1 and k >= 1");
    // integer thresholds D_t; the real thresholds D_t + 1/2 never tie with an integer gap
    std::vector<int> big(static_cast<std::size_t>(k) + 1);
    big[k] = uniform(rng, 1, 3);
    for (int t = k - 1; t >= 1; --t)
        big[t] = big[t + 1] + uniform(rng, 1, 4);

    std::vector<long> pos(static_cast<std::size_t>(n), 0);
    for (int v = 1; v < n; ++v)
        pos[v] = pos[v - 1] + uniform(rng, 1, big[1] / 2 + 2);

    RawMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), k));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const long gap = pos[v] - pos[u];
            int t = 0;
            while (t < k && gap <= big[t + 1])
                ++t;
            a[u][v] = a[v][u] = t;
        }
    return RobinsonMatrix::from_rows(k, a);
}

RobinsonMatrix perturb_instance(const RobinsonMatrix & m, int attempts, Rng & rng)
{
    const int n = m.size(), k = m.levels();
    RawMatrix a = m.rows();
    if (n < 2)
        return m;
    for (int i = 0; i < attempts; ++i) {
        int u = uniform(rng, 0, n - 2);
        int v = uniform(rng, u + 1, n - 1);
        int next = a[u][v] + (uniform(rng, 0, 1) ? 1 : -1);
        if (next < 0 || next > k)
            continue;
        const int old = a[u][v];
        a[u][v] = a[v][u] = next;
        if (validate_robinson(a, k))
            a[u][v] = a[v][u] = old;
    }
    return RobinsonMatrix::from_rows(k, a);
}

RobinsonMatrix random_robinson(int n, int k, Rng & rng)
{
    if (n < 1 || k < 1)
        throw std::invalid_argument("need n >= 1 and k >= 1");
    RawMatrix a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), k));
    for (int u = n - 2; u >= 0; --u)
        for (int w = u + 1; w < n; ++w) {
            const int cap = std::min(a[u][w - 1], a[u + 1][w]);
            // mostly keep the cap so that levels stay wide
            const int drop = uniform(rng, 0, 5) == 0 ? uniform(rng, 1, 2) : 0;
            a[u][w] = a[w][u] = std::max(0, cap - drop);
        }
    return RobinsonMatrix::from_rows(k, a);
}

RobinsonMatrix duplicate_vertex(const RobinsonMatrix & m, Vertex v, int copies)
{
    const int n = m.size();
    if (v < 0 || v >= n || copies < 0)
        throw std::invalid_argument("bad vertex or copy count");
    auto source = [&](int i) { return i <= v ? i : (i <= v + copies ? v : i - copies); };
    const int big = n + copies;
    RawMatrix a(static_cast<std::size_t>(big), std::vector<int>(static_cast<std::size_t>(big)));
    for (int i = 0; i < big; ++i)
        for (int j = 0; j < big; ++j)
            a[i][j] = m.at(source(i), source(j));
    return RobinsonMatrix::from_rows(m.levels(), a);
}

RobinsonMatrix inject_duplicates(const RobinsonMatrix & m, int runs, Rng & rng)
{
    RobinsonMatrix out = m;
    for (int r = 0; r < runs; ++r)
        out = duplicate_vertex(out, uniform(rng, 0, out.size() - 1), uniform(rng, 1, 2));
    return out;
}

} // namespace robinson
