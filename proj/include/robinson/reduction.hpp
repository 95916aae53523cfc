#pragma once

#include <robinson/embed.hpp>
#include <robinson/matrix.hpp>

#include <vector>

namespace robinson {

/// A[I] with repeated rows collapsed onto their first appearance.
struct RowReduction
{
    RobinsonMatrix reduced;
    /// original vertex -> index of its representative in `reduced`
    std::vector<Vertex> index_map;
    /// reduced index -> original vertex of the representative
    std::vector<Vertex> representatives;
    /// reduced index -> number of duplicates r_i collapsed into it
    std::vector<int> run_lengths;
};

RowReduction reduce_repeated_rows(const RobinsonMatrix & m);

/// Places the r_i duplicates of representative i at Pi(i) + (j / r_i) * eps_i, j = 1..r_i,
/// where 2 eps_i is the smallest slack of the reduced embedding at i (capped by d_k).
/// Throws std::invalid_argument if `reduced_pi` does not verify on the reduced matrix.
Embedding expand_embedding(const RowReduction & reduction, const Embedding & reduced_pi, const ThresholdVector & d);

} // namespace robinson
