#pragma once

#include <robinson/matrix.hpp>

#include <cstdint>
#include <random>

namespace robinson {

using Rng = std::mt19937_64;

/// Samples increasing integer positions and half-integer thresholds, then reads the
/// similarity levels off the gaps. Always has a uniform embedding.
RobinsonMatrix quantized_instance(int n, int k, Rng & rng);

/// Up to `attempts` random +-1 changes of an off-diagonal entry, each kept only if the
/// matrix stays Robinson. Feasibility of the result is unknown.
RobinsonMatrix perturb_instance(const RobinsonMatrix & m, int attempts, Rng & rng);

/// Entry-by-entry sampler over Robinson matrices, biased towards large entries.
RobinsonMatrix random_robinson(int n, int k, Rng & rng);

/// Copies row/column v next to itself `copies` times.
RobinsonMatrix duplicate_vertex(const RobinsonMatrix & m, Vertex v, int copies);

/// Duplicates a few random vertices.
RobinsonMatrix inject_duplicates(const RobinsonMatrix & m, int runs, Rng & rng);

} // namespace robinson
