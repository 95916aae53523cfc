#pragma once

// Brute-force references. None of these scale; each enforces a size guard and
// throws GuardError instead of running long.

#include <robinson/bounds.hpp>
#include <robinson/embed.hpp>
#include <robinson/pathgen.hpp>
#include <robinson/threshold.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace robinson::oracle {

class GuardError : public std::length_error
{
public:
    using std::length_error::length_error;
};

constexpr int max_path_vertices = 10;
constexpr int max_direct_vertices = 7;
constexpr int max_direct_levels = 3;

struct PathBound
{
    BoundVector bound;
    std::vector<Vertex> path;
};

/// Every simple legal (u,v)-path by DFS, filtered to ⪯-minimal bounds (upper) or
/// ⪯-maximal bounds (lower). One path per bound; sorted by bound.
/// Throws std::invalid_argument for u == v and GuardError for n > 10.
std::vector<PathBound> enumerate_paths_bruteforce(const RobinsonMatrix & m, Vertex u, Vertex v, WalkKind kind);

/// Every simple upper-bound-cycle, canonically rotated, unfiltered. GuardError for n > 10.
std::vector<CycleRecord> enumerate_cycles_bruteforce(const RobinsonMatrix & m);

struct DirectSolution
{
    ThresholdVector d;
    Embedding pi;
};

/// Feasibility of the strict system over all unknowns {Pi(2..n), d_1..d_k}, decided
/// by an exact rational simplex. GuardError for n > 7 or k > 3.
std::optional<DirectSolution> direct_feasibility(const RobinsonMatrix & m);

/// d in D^k with a.d > b.d. Throws std::invalid_argument if a ⪯ b.
ThresholdVector separating_threshold(const BoundVector & a, const BoundVector & b);

/// c with c_i <= b_i and a.d <= c.d <= b.d for all d in D^k. Throws std::invalid_argument unless a ⪯ b.
BoundVector buffer_vector(const BoundVector & a, const BoundVector & b);

} // namespace robinson::oracle
