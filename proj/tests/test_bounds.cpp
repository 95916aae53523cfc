#include "support.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <set>

using namespace robinson;
using testing_support::matrix_a;
using testing_support::matrix_b;
using testing_support::uniform;

namespace {

BoundWalk upper(std::vector<Vertex> one_based)
{
    for (auto & v : one_based)
        --v;
    return {one_based, WalkKind::Upper};
}

BoundWalk lower(std::vector<Vertex> one_based)
{
    auto w = upper(std::move(one_based));
    w.kind = WalkKind::Lower;
    return w;
}

BoundWalk random_legal_walk(const RobinsonMatrix & m, WalkKind kind, int steps, Rng & rng)
{
    BoundWalk w{{uniform(rng, 0, m.size() - 1)}, kind};
    for (int s = 0; s < steps; ++s) {
        std::vector<Vertex> options;
        for (Vertex v = 0; v < m.size(); ++v) {
            if (v == w.vertices.back())
                continue;
            auto b = kind == WalkKind::Upper ? edge_upper_bound(m, w.vertices.back(), v)
                                             : edge_lower_bound(m, w.vertices.back(), v);
            if (b)
                options.push_back(v);
        }
        if (options.empty())
            break;
        w.vertices.push_back(options[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(options.size()) - 1))]);
    }
    return w;
}

} // namespace

TEST(EdgeBounds, Upper)
{
    auto a = matrix_a();
    EXPECT_EQ(edge_upper_bound(a, 0, 1), (BoundVector{0, 1}));
    EXPECT_FALSE(edge_upper_bound(a, 0, 3));
    EXPECT_EQ(edge_upper_bound(a, 1, 0), (BoundVector{0, 0}));
    EXPECT_EQ(edge_upper_bound(a, 3, 0), (BoundVector{-1, 0}));
    EXPECT_THROW(edge_upper_bound(a, 2, 2), std::invalid_argument);
}

TEST(EdgeBounds, Lower)
{
    EXPECT_EQ(edge_lower_bound(matrix_a(), 0, 2), (BoundVector{0, 1}));
    EXPECT_EQ(edge_lower_bound(matrix_a(), 0, 1), (BoundVector{0, 0}));
    EXPECT_EQ(edge_lower_bound(matrix_b(), 0, 3), (BoundVector{1, 0}));
    EXPECT_FALSE(edge_lower_bound(matrix_b(), 3, 0));
    EXPECT_EQ(edge_lower_bound(matrix_a(), 2, 0), (BoundVector{-1, 0}));
    EXPECT_THROW(edge_lower_bound(matrix_a(), 1, 1), std::invalid_argument);
}

TEST(Walks, Bounds)
{
    auto b = matrix_b();
    EXPECT_EQ(walk_bound(b, upper({1, 2, 6})), (BoundVector{1, 1}));
    EXPECT_EQ(walk_bound(b, lower({1, 4, 6})), (BoundVector{1, 1}));
    EXPECT_EQ(walk_bound(b, upper({1, 2, 6, 4, 1})), (BoundVector{0, 0}));
    try {
        walk_bound(b, upper({1, 4}));
        FAIL();
    }
    catch (const IllegalWalk & e) {
        EXPECT_EQ(e.step(), 1U);
    }
    EXPECT_EQ(first_illegal_step(b, upper({2, 1, 4})), 2U);
    EXPECT_FALSE(first_illegal_step(b, upper({4, 1})));
}

TEST(Walks, Reverse)
{
    auto b = matrix_b();
    auto r = reverse_walk(upper({1, 2, 6}));
    EXPECT_EQ(r, lower({6, 2, 1}));
    EXPECT_EQ(walk_bound(b, r), (BoundVector{-1, -1}));
    auto r2 = reverse_walk(lower({1, 4, 6}));
    EXPECT_EQ(r2, upper({6, 4, 1}));
    EXPECT_EQ(walk_bound(b, r2), (BoundVector{-1, -1}));
    auto r3 = reverse_walk(upper({1, 2}));
    EXPECT_EQ(walk_bound(matrix_a(), r3), (BoundVector{0, -1}));
}

TEST(Walks, ConcatenateChecksJoin)
{
    EXPECT_EQ(concatenate(upper({1, 2}), upper({2, 6})), upper({1, 2, 6}));
    EXPECT_THROW(concatenate(upper({1, 2}), upper({3, 6})), std::invalid_argument);
    EXPECT_THROW(concatenate(upper({1, 2}), lower({2, 6})), std::invalid_argument);
}

TEST(Walks, RandomReverseAndConcatenation)
{
    Rng rng(31);
    for (int i = 0; i < 500; ++i) {
        int k = uniform(rng, 1, 4);
        auto m = random_robinson(uniform(rng, 2, 10), k, rng);
        for (auto kind : {WalkKind::Upper, WalkKind::Lower}) {
            auto w1 = random_legal_walk(m, kind, uniform(rng, 1, 8), rng);
            if (w1.vertices.size() < 2)
                continue;
            ASSERT_FALSE(first_illegal_step(m, w1));
            auto rev = reverse_walk(w1);
            ASSERT_FALSE(first_illegal_step(m, rev));
            EXPECT_EQ(walk_bound(m, w1), -walk_bound(m, rev));

            // extend from the end of w1
            auto w2 = random_legal_walk(m, kind, uniform(rng, 1, 6), rng);
            w2.vertices.front() = w1.vertices.back();
            if (w2.vertices.size() < 2 || first_illegal_step(m, w2))
                continue;
            EXPECT_EQ(walk_bound(m, concatenate(w1, w2)), walk_bound(m, w1) + walk_bound(m, w2));
        }
    }
}

TEST(Precedes, Examples)
{
    EXPECT_TRUE(precedes({1, 1}, {2, 1}));
    EXPECT_FALSE(precedes({0, 4}, {1, 1}));
    EXPECT_FALSE(precedes({1, 1}, {0, 4}));
    EXPECT_TRUE(precedes({3, -2, 7}, {3, -2, 7}));
    EXPECT_THROW(precedes({1}, {1, 2}), std::invalid_argument);
}

TEST(Precedes, PartialOrderOnRandomTriples)
{
    Rng rng(77);
    for (int i = 0; i < 1000; ++i) {
        int k = uniform(rng, 1, 4), n = uniform(rng, 1, 10);
        auto a = testing_support::random_bound(k, n, rng);
        auto b = testing_support::random_bound(k, n, rng);
        auto c = testing_support::random_bound(k, n, rng);
        if (i % 3 == 0)
            b = a;
        EXPECT_TRUE(precedes(a, a));
        if (precedes(a, b) && precedes(b, a))
            EXPECT_EQ(a, b);
        if (precedes(a, b) && precedes(b, c))
            EXPECT_TRUE(precedes(a, c));
    }
}

TEST(Precedes, ImpliesDotOrder)
{
    Rng rng(78);
    int checked = 0;
    while (checked < 300) {
        int k = uniform(rng, 1, 4), n = uniform(rng, 1, 10);
        auto a = testing_support::random_bound(k, n, rng);
        auto b = testing_support::random_bound(k, n, rng);
        if (! precedes(a, b))
            continue;
        ++checked;
        for (int j = 0; j < 20; ++j) {
            auto d = testing_support::random_threshold(k, rng);
            EXPECT_LE(dot(a, d), dot(b, d));
        }
    }
}

TEST(Chains, Examples)
{
    EXPECT_EQ(chain_id({0, 3}), (ChainLabel{3, 1}));
    EXPECT_EQ(chain_id({1, -2}), (ChainLabel{3, 2}));
    EXPECT_EQ(chain_id({-3, 0}), (ChainLabel{3, 1}));
    EXPECT_EQ(chain_id({3, 0}), (ChainLabel{3, 2}));
    EXPECT_TRUE(chain_id({0, 0}).is_zero());
    EXPECT_THROW(chain_id({1, 2, 3}), std::invalid_argument);
}

TEST(Chains, PartitionIntoComparableChains)
{
    for (int t = 1; t <= 8; ++t) {
        std::set<std::pair<int, int>> norm_t;
        for (int a1 = -t; a1 <= t; ++a1) {
            int rest = t - std::abs(a1);
            norm_t.insert({a1, rest});
            norm_t.insert({a1, -rest});
        }
        ASSERT_EQ(norm_t.size(), static_cast<std::size_t>(4 * t));

        std::vector<BoundVector> chains[3];
        for (auto [a1, a2] : norm_t) {
            auto label = chain_id({a1, a2});
            ASSERT_EQ(label.norm, t);
            ASSERT_TRUE(label.chain == 1 || label.chain == 2);
            chains[label.chain].push_back({a1, a2});
        }
        EXPECT_EQ(chains[1].size() + chains[2].size(), norm_t.size());
        for (int c = 1; c <= 2; ++c)
            for (auto & x : chains[c])
                for (auto & y : chains[c])
                    EXPECT_TRUE(precedes(x, y) || precedes(y, x)) << to_string(x) << " " << to_string(y);
    }
}

TEST(Format, Text)
{
    EXPECT_EQ(to_string(BoundVector{1, -2, 0}), "(1,-2,0)");
    EXPECT_EQ(format_vertices({0, 1, 5, 3, 0}), "⟨1,2,6,4,1⟩");
}

TEST(Threshold, Validation)
{
    EXPECT_THROW(ThresholdVector({Rational(1), Rational(1)}), std::invalid_argument);
    EXPECT_THROW(ThresholdVector({Rational(1), Rational(0)}), std::invalid_argument);
    ThresholdVector d({Rational(8), Rational(6)});
    EXPECT_EQ(d.level_lower(2), 0);
    EXPECT_EQ(d.level_lower(0), 8);
    EXPECT_FALSE(d.level_upper(0));
    EXPECT_EQ(*d.level_upper(2), 6);
    EXPECT_EQ(dot(BoundVector{1, -1}, d), 2);
}
