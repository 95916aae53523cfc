#pragma once

#include <robinson/bounds.hpp>
#include <robinson/rational.hpp>

#include <optional>
#include <vector>

namespace robinson {

/// d in D^k: d_1 > d_2 > ... > d_k > 0, exact.
class ThresholdVector
{
public:
    /// Throws std::invalid_argument if the values are not strictly decreasing and positive.
    explicit ThresholdVector(std::vector<Rational> values);

    int levels() const noexcept { return static_cast<int>(_d.size()); }
    /// d_t for 1 <= t <= k.
    const Rational & at(int t) const { return _d.at(static_cast<std::size_t>(t - 1)); }
    const std::vector<Rational> & values() const noexcept { return _d; }

    /// Open interval (d_{t+1}, d_t) allowed for a gap at similarity level t, with
    /// d_{k+1} = 0 and d_0 = +infinity (nullopt).
    Rational level_lower(int t) const;
    std::optional<Rational> level_upper(int t) const;

    friend bool operator==(const ThresholdVector &, const ThresholdVector &) = default;

private:
    std::vector<Rational> _d;
};

Rational dot(const BoundVector & b, const ThresholdVector & d);

} // namespace robinson
