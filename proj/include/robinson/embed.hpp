#pragma once

#include <robinson/matrix.hpp>
#include <robinson/pathgen.hpp>
#include <robinson/threshold.hpp>

#include <optional>
#include <stdexcept>
#include <vector>

namespace robinson {

/// Positions Pi(1..n) on the line, in the same unit as d.
struct Embedding
{
    std::vector<Rational> positions;

    friend bool operator==(const Embedding &, const Embedding &) = default;
};

/// First pair (u < v) whose gap leaves the open interval (d_{t+1}, d_t), t = a[u][v].
struct EmbeddingViolation
{
    Vertex u, v;
    int level;
    Rational gap;
};

/// Strict check against a_{u,v} = t  <=>  d_{t+1} < Pi(v) - Pi(u) < d_t for all u < v.
/// Pairs are scanned in parallel; the reported violation is the lexicographically first.
std::optional<EmbeddingViolation> verify_embedding(const RobinsonMatrix & m, const ThresholdVector & d,
                                                   const Embedding & pi);

std::optional<EmbeddingViolation> verify_embedding_serial(const RobinsonMatrix & m, const ThresholdVector & d,
                                                          const Embedding & pi);

/// Raised when lb_v >= ub_v during construction, i.e. d violates the cycle system.
class ConstructionError : public std::runtime_error
{
public:
    ConstructionError(Vertex v, Vertex upper_from, Vertex lower_from, const std::string & what) :
        std::runtime_error(what), v(v), upper_from(upper_from), lower_from(lower_from)
    {
    }

    Vertex v, upper_from, lower_from;
};

/// Pi(1) = 0, Pi(v) = (ub_v + lb_v) / 2 from the bound table. When no i < v has an
/// upper bound on (i,v), Pi(v) = lb_v + d_1.
Embedding construct_embedding(const RobinsonMatrix & m, const ThresholdVector & d, const BoundTable & table);

} // namespace robinson
