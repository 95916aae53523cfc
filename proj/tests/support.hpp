#pragma once

#include <robinson/bounds.hpp>
#include <robinson/generate.hpp>
#include <robinson/matrix.hpp>
#include <robinson/threshold.hpp>

#include <string>

namespace testing_support {

inline std::string data_path(const std::string & name)
{
    return std::string(ROBINSON_TEST_DATA) + "/" + name;
}

inline robinson::RobinsonMatrix matrix_a()
{
    return robinson::load_matrix(data_path("matrixA.txt"));
}

inline robinson::RobinsonMatrix matrix_b()
{
    return robinson::load_matrix(data_path("matrixB.txt"));
}

inline int uniform(robinson::Rng & rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// p/q in canonical form; gmp arithmetic assumes it.
inline robinson::Rational ratio(long p, long q)
{
    robinson::Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Random vector with sum |a_i| <= n.
inline robinson::BoundVector random_bound(int k, int n, robinson::Rng & rng)
{
    auto a = robinson::BoundVector::zero(k);
    int budget = uniform(rng, 0, n);
    for (int i = 0; i < k && budget > 0; ++i) {
        int x = uniform(rng, -budget, budget);
        a[i] = x;
        budget -= x < 0 ? -x : x;
    }
    // shuffle positions so later levels are not always small
    for (int i = k - 1; i > 0; --i) {
        int j = uniform(rng, 0, i);
        std::swap(a[i], a[j]);
    }
    return a;
}

/// Random d in D^k with distinct small rational components.
inline robinson::ThresholdVector random_threshold(int k, robinson::Rng & rng)
{
    std::vector<robinson::Rational> d(static_cast<std::size_t>(k));
    robinson::Rational acc = 0;
    for (int i = k - 1; i >= 0; --i) {
        acc += ratio(uniform(rng, 1, 1000), uniform(rng, 1, 50));
        d[i] = acc;
    }
    return robinson::ThresholdVector(std::move(d));
}

} // namespace testing_support
