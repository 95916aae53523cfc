#pragma once

#include <robinson/pathgen.hpp>
#include <robinson/threshold.hpp>

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace robinson {

/// Cycles whose inequalities beta+(C).d > 0, together with d in D^k, have no
/// common solution.
struct InfeasibilityCertificate
{
    std::vector<CycleRecord> cycles;
    std::string explanation;
};

using FeasibilityResult = std::variant<ThresholdVector, InfeasibilityCertificate>;

/// Bounds on rho = d2/d1 implied by k = 2 cycle inequalities: rho in (lo, hi).
struct RatioInterval
{
    Rational lo{0};
    Rational hi{1};
    std::optional<std::size_t> lo_cycle;   ///< cycle attaining lo, absent if lo = 0 comes from D^2
    std::optional<std::size_t> hi_cycle;   ///< cycle attaining hi, absent if hi = 1 comes from D^2
    std::optional<std::size_t> degenerate; ///< a cycle with a2 = 0 and a1 <= 0

    bool feasible() const { return !degenerate && lo < hi; }
};

/// Throws std::invalid_argument if some cycle bound does not have k = 2.
RatioInterval ratio_interval_k2(std::span<const CycleRecord> cycles);

/// Combinatorial k = 2 decision; d is returned with d1 = 1 and d2 the midpoint of the ratio interval.
FeasibilityResult solve_ratio_k2(std::span<const CycleRecord> cycles);

/// Exact Fourier-Motzkin decision for any k. Certificates are irreducible: dropping
/// any one cycle makes the system feasible.
FeasibilityResult solve_general_k(std::span<const CycleRecord> cycles, int k);

/// True iff b.d > 0 for every cycle.
bool satisfies_cycles(const ThresholdVector & d, std::span<const CycleRecord> cycles);

/// Indices of the cycles that survive the ⪯ pre-filter: bounds implied by D^k
/// (0 ⪯ b, b != 0) and bounds ⪰ another cycle's bound are dropped.
std::vector<std::size_t> essential_cycles(std::span<const CycleRecord> cycles);

} // namespace robinson
