#include <robinson/feasibility.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace robinson {

RatioInterval ratio_interval_k2(std::span<const CycleRecord> cycles)
{
    RatioInterval r;
    for (std::size_t idx = 0; idx < cycles.size(); ++idx) {
        const auto & b = cycles[idx].bound;
        if (b.levels() != 2)
            throw std::invalid_argument("ratio method needs k = 2, got bound " + to_string(b));
        const int a1 = b[0], a2 = b[1];
        if (a2 == 0) {
            // a1 * d1 > 0 holds iff a1 > 0
            if (a1 <= 0 && ! r.degenerate)
                r.degenerate = idx;
            continue;
        }
        Rational ratio(-a1, a2);
        ratio.canonicalize();
        if (a2 > 0 && ratio > r.lo) {
            r.lo = ratio;
            r.lo_cycle = idx;
        }
        else if (a2 < 0 && ratio < r.hi) {
            r.hi = ratio;
            r.hi_cycle = idx;
        }
    }
    return r;
}

FeasibilityResult solve_ratio_k2(std::span<const CycleRecord> cycles)
{
    auto r = ratio_interval_k2(cycles);
    if (r.feasible()) {
        Rational mid = (r.lo + r.hi) / 2;
        return ThresholdVector({Rational(1), mid});
    }

    InfeasibilityCertificate cert;
    std::ostringstream why;
    if (r.degenerate) {
        const auto & c = cycles[*r.degenerate];
        cert.cycles.push_back(c);
        why << "cycle " << format_vertices(c.vertices) << " has bound " << to_string(c.bound)
            << ", so it requires " << c.bound[0] << "*d1 > 0, which no d1 > 0 satisfies";
    }
    else {
        why << "d2/d1 must exceed " << to_string(r.lo);
        if (r.lo_cycle) {
            const auto & c = cycles[*r.lo_cycle];
            cert.cycles.push_back(c);
            why << " (cycle " << format_vertices(c.vertices) << ", bound " << to_string(c.bound) << ")";
        }
        else
            why << " (d2 > 0)";
        why << " and stay below " << to_string(r.hi);
        if (r.hi_cycle) {
            const auto & c = cycles[*r.hi_cycle];
            cert.cycles.push_back(c);
            why << " (cycle " << format_vertices(c.vertices) << ", bound " << to_string(c.bound) << ")";
        }
        else
            why << " (d2 < d1)";
    }
    cert.explanation = why.str();
    return cert;
}

bool satisfies_cycles(const ThresholdVector & d, std::span<const CycleRecord> cycles)
{
    return std::all_of(cycles.begin(), cycles.end(), [&](const CycleRecord & c) { return dot(c.bound, d) > 0; });
}

std::vector<std::size_t> essential_cycles(std::span<const CycleRecord> cycles)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        const auto & b = cycles[i].bound;
        if (! b.is_zero() && precedes(BoundVector::zero(b.levels()), b))
            continue;
        bool dominated = false;
        for (std::size_t j = 0; j < cycles.size() && ! dominated; ++j) {
            if (i == j || ! precedes(cycles[j].bound, b))
                continue;
            dominated = cycles[j].bound != b || j < i;
        }
        if (! dominated)
            keep.push_back(i);
    }
    return keep;
}

namespace {

// Strict homogeneous inequality coef . d > 0, remembering which cycle rows it came from.
struct Row
{
    std::vector<Integer> coef;
    std::vector<std::size_t> origin;
};

bool all_zero(const Row & r)
{
    return std::all_of(r.coef.begin(), r.coef.end(), [](const Integer & x) { return x == 0; });
}

void normalize(Row & r)
{
    Integer g = 0;
    for (auto & x : r.coef)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto & x : r.coef)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

std::vector<std::size_t> merge_origins(const std::vector<std::size_t> & a, const std::vector<std::size_t> & b)
{
    std::vector<std::size_t> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool better_origin(const std::vector<std::size_t> & a, const std::vector<std::size_t> & b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

struct Elimination
{
    /// stages[j] is the system over d_{j+1}..d_k (0-based: variables j..k-1)
    std::vector<std::vector<Row>> stages;
    std::optional<std::vector<std::size_t>> contradiction;
};

std::optional<std::vector<std::size_t>> find_contradiction(const std::vector<Row> & rows)
{
    std::optional<std::vector<std::size_t>> best;
    for (auto & r : rows)
        if (all_zero(r) && (! best || better_origin(r.origin, *best)))
            best = r.origin;
    return best;
}

Elimination eliminate(std::span<const CycleRecord> cycles, std::span<const std::size_t> use, int k)
{
    Elimination el;
    std::vector<Row> rows;
    for (int i = 0; i < k; ++i) {
        // d_i - d_{i+1} > 0, and d_k > 0
        Row r{std::vector<Integer>(static_cast<std::size_t>(k), 0), {}};
        r.coef[i] = 1;
        if (i + 1 < k)
            r.coef[i + 1] = -1;
        rows.push_back(std::move(r));
    }
    for (auto idx : use) {
        Row r{std::vector<Integer>(static_cast<std::size_t>(k)), {idx}};
        for (int i = 0; i < k; ++i)
            r.coef[i] = cycles[idx].bound[i];
        normalize(r);
        rows.push_back(std::move(r));
    }

    el.stages.push_back(rows);
    if ((el.contradiction = find_contradiction(rows)))
        return el;

    for (int j = 0; j < k; ++j) {
        const auto & cur = el.stages.back();
        std::vector<const Row *> pos, neg;
        std::map<std::vector<Integer>, Row> next;
        auto keep = [&](Row r) {
            auto [it, fresh] = next.try_emplace(r.coef, r);
            if (! fresh && better_origin(r.origin, it->second.origin))
                it->second = std::move(r);
        };
        for (auto & r : cur) {
            if (r.coef[j] > 0)
                pos.push_back(&r);
            else if (r.coef[j] < 0)
                neg.push_back(&r);
            else
                keep(r);
        }
        for (auto * p : pos)
            for (auto * q : neg) {
                Row c{std::vector<Integer>(static_cast<std::size_t>(k)), merge_origins(p->origin, q->origin)};
                Integer lp = -q->coef[j], lq = p->coef[j];
                for (int i = 0; i < k; ++i)
                    c.coef[i] = lp * p->coef[i] + lq * q->coef[i];
                normalize(c);
                keep(std::move(c));
            }
        std::vector<Row> stage;
        stage.reserve(next.size());
        for (auto & [_, r] : next)
            stage.push_back(std::move(r));
        el.stages.push_back(std::move(stage));
        if ((el.contradiction = find_contradiction(el.stages.back())))
            return el;
    }
    return el;
}

ThresholdVector back_substitute(const Elimination & el, int k)
{
    std::vector<Rational> x(static_cast<std::size_t>(k), 0);
    for (int j = k - 1; j >= 0; --j) {
        std::optional<Rational> lower, upper;
        for (auto & r : el.stages[static_cast<std::size_t>(j)]) {
            if (r.coef[j] == 0)
                continue;
            Rational rest = 0;
            for (int l = j + 1; l < k; ++l)
                rest += r.coef[l] * x[l];
            Rational limit = -rest / r.coef[j];
            if (r.coef[j] > 0) {
                if (! lower || limit > *lower)
                    lower = limit;
            }
            else if (! upper || limit < *upper)
                upper = limit;
        }
        if (lower && upper)
            x[j] = (*lower + *upper) / 2;
        else if (lower)
            x[j] = *lower + 1;
        else if (upper)
            x[j] = *upper - 1;
        else
            x[j] = 1;
    }

    // primitive integer vector: every gap becomes >= 1
    Integer l = 1;
    for (auto & v : x) {
        v.canonicalize();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    }
    Integer g = 0;
    std::vector<Integer> ints;
    for (auto & v : x) {
        Integer i = v.get_num() * (l / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), i.get_mpz_t());
        ints.push_back(i);
    }
    std::vector<Rational> d;
    for (auto & i : ints)
        d.emplace_back(Integer(i / g));
    return ThresholdVector(std::move(d));
}

} // namespace

FeasibilityResult solve_general_k(std::span<const CycleRecord> cycles, int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
    for (auto & c : cycles)
        if (c.bound.levels() != k)
            throw std::invalid_argument("cycle bound " + to_string(c.bound) + " does not have k = " + std::to_string(k));

    auto use = essential_cycles(cycles);
    auto el = eliminate(cycles, use, k);
    if (! el.contradiction)
        return back_substitute(el, k);

    // deletion filter: drop cycles while the rest stays infeasible
    std::vector<std::size_t> core = *el.contradiction;
    for (std::size_t pos = 0; pos < core.size();) {
        std::vector<std::size_t> trial = core;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(pos));
        if (eliminate(cycles, trial, k).contradiction)
            core = std::move(trial);
        else
            ++pos;
    }

    InfeasibilityCertificate cert;
    std::ostringstream why;
    why << "no d with " << (k == 1 ? "d1" : k == 2 ? "d1 > d2" : "d1 > ... > d" + std::to_string(k)) << " > 0 satisfies ";
    for (std::size_t i = 0; i < core.size(); ++i) {
        const auto & c = cycles[core[i]];
        cert.cycles.push_back(c);
        why << (i ? " and " : "") << to_string(c.bound) << ".d > 0 (cycle " << format_vertices(c.vertices) << ")";
    }
    cert.explanation = why.str();
    return cert;
}

} // namespace robinson
