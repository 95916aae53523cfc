#pragma once

#include <robinson/embed.hpp>
#include <robinson/feasibility.hpp>
#include <robinson/matrix.hpp>
#include <robinson/pathgen.hpp>

#include <stdexcept>
#include <variant>

namespace robinson {

enum class Method
{
    Auto,    ///< ratio method when k = 2, elimination otherwise
    RatioK2,
    General
};

struct SolveOptions
{
    Method method = Method::Auto;
    TableOptions tables;
};

struct Solution
{
    ThresholdVector d;
    Embedding pi;
};

using SolveResult = std::variant<Solution, InfeasibilityCertificate>;

/// A constructed embedding failed verification. Always a bug.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

/// reduce -> bound tables -> cycles -> thresholds -> construct -> expand -> verify.
/// Certificate cycles use the original vertex numbering.
SolveResult solve(const RobinsonMatrix & m, const SolveOptions & options = {});

} // namespace robinson
