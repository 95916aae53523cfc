#include <robinson/threshold.hpp>

#include <stdexcept>

namespace robinson {

ThresholdVector::ThresholdVector(std::vector<Rational> values) : _d(std::move(values))
{
    if (_d.empty())
        throw std::invalid_argument("threshold vector needs at least one level");
    for (auto & x : _d)
        x.canonicalize();
    for (std::size_t i = 0; i < _d.size(); ++i) {
        if (_d[i] <= 0)
            throw std::invalid_argument("thresholds must be positive");
        if (i + 1 < _d.size() && _d[i] <= _d[i + 1])
            throw std::invalid_argument("thresholds must be strictly decreasing");
    }
}

Rational ThresholdVector::level_lower(int t) const
{
    return t >= levels() ? Rational(0) : _d[static_cast<std::size_t>(t)];
}

std::optional<Rational> ThresholdVector::level_upper(int t) const
{
    if (t <= 0)
        return std::nullopt;
    return _d[static_cast<std::size_t>(t - 1)];
}

Rational dot(const BoundVector & b, const ThresholdVector & d)
{
    if (b.levels() != d.levels())
        throw std::invalid_argument("bound and threshold vector lengths differ");
    Rational s = 0;
    for (int i = 0; i < b.levels(); ++i)
        if (b[i] != 0)
            s += b[i] * d.values()[static_cast<std::size_t>(i)];
    return s;
}

} // namespace robinson
