#include "support.hpp"

#include <robinson/reduction.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace robinson;
using testing_support::matrix_a;
using testing_support::matrix_b;

TEST(Parse, MatrixA)
{
    auto a = matrix_a();
    EXPECT_EQ(a.size(), 5);
    EXPECT_EQ(a.levels(), 2);
    EXPECT_EQ(a.at(0, 2), 1);
    EXPECT_EQ(a.at(4, 0), 0);
}

TEST(Parse, SingleEntry)
{
    auto m = parse_matrix_text("1 1\n1\n");
    EXPECT_EQ(m.size(), 1);
    EXPECT_EQ(m.levels(), 1);
}

TEST(Parse, RobinsonViolationWitness)
{
    try {
        parse_matrix_text("3 2\n2 1 2\n1 2 2\n2 2 2\n");
        FAIL() << "expected a validation error";
    }
    catch (const ValidationError & e) {
        EXPECT_EQ(e.defect(), Defect::NotRobinson);
        EXPECT_EQ(e.where(), (std::vector<Vertex>{0, 1, 2}));
    }
}

TEST(Parse, SyntaxErrorHasPosition)
{
    try {
        parse_matrix_text("# c\n2 1\n1 1\n1 z\n");
        FAIL() << "expected a parse error";
    }
    catch (const ParseError & e) {
        EXPECT_EQ(e.line(), 4);
        EXPECT_EQ(e.column(), 3);
    }
}

TEST(Parse, Defects)
{
    auto defect = [](const char * text) {
        try {
            parse_matrix_text(text);
        }
        catch (const ValidationError & e) {
            return e.defect();
        }
        ADD_FAILURE() << "accepted: " << text;
        return Defect::Shape;
    };
    EXPECT_EQ(defect("2 1\n1 0\n1 1\n"), Defect::Asymmetric);
    EXPECT_EQ(defect("2 2\n2 1\n1 1\n"), Defect::Diagonal);
    EXPECT_THROW(parse_matrix_text("2 1\n1 2\n2 1\n"), std::runtime_error);
}

TEST(Parse, RejectsEmptyAndTruncated)
{
    EXPECT_THROW(parse_matrix_text("0 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_text(""), ParseError);
    EXPECT_THROW(parse_matrix_text("2 1\n1 1\n"), ParseError);
    EXPECT_THROW(parse_matrix_text("1 1\n1\n1\n"), ParseError);
}

TEST(Parse, RoundTrip)
{
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        auto m = random_robinson(testing_support::uniform(rng, 1, 9), testing_support::uniform(rng, 1, 4), rng);
        auto text = to_text(m);
        auto again = parse_matrix_text(text);
        EXPECT_EQ(again, m);
        EXPECT_EQ(to_text(again), text);
    }
}

TEST(Validate, ExampleMatrices)
{
    EXPECT_FALSE(validate_robinson(matrix_a().rows(), 2));
    EXPECT_FALSE(validate_robinson(matrix_b().rows(), 2));
    auto w = validate_robinson({{2, 0, 2}, {0, 2, 2}, {2, 2, 2}}, 2);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, (Triple{0, 1, 2}));
}

TEST(LevelGraph, MatrixA)
{
    auto g2 = level_graph(matrix_a(), 2);
    RawMatrix expect2 = {{1, 1, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 1, 1, 1}, {0, 0, 0, 1, 1}};
    EXPECT_EQ(g2, expect2);
    auto g1 = level_graph(matrix_a(), 1);
    RawMatrix expect1 = {{1, 1, 1, 0, 0}, {1, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {0, 1, 1, 1, 1}, {0, 1, 1, 1, 1}};
    EXPECT_EQ(g1, expect1);
    EXPECT_THROW(level_graph(matrix_a(), 0), std::out_of_range);
    EXPECT_THROW(level_graph(matrix_a(), 3), std::out_of_range);
}

TEST(LevelGraph, CompleteAtTopLevel)
{
    auto m = RobinsonMatrix::from_rows(3, RawMatrix(4, std::vector<int>(4, 3)));
    EXPECT_EQ(level_graph(m, 3), RawMatrix(4, std::vector<int>(4, 1)));
}

TEST(LevelGraph, Nested)
{
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        int k = testing_support::uniform(rng, 1, 4);
        auto m = random_robinson(testing_support::uniform(rng, 1, 12), k, rng);
        for (int t = 1; t < k; ++t) {
            auto lo = level_graph(m, t), hi = level_graph(m, t + 1);
            for (std::size_t u = 0; u < lo.size(); ++u)
                for (std::size_t v = 0; v < lo.size(); ++v)
                    EXPECT_LE(hi[u][v], lo[u][v]);
        }
    }
}

TEST(Reduction, NoDuplicates)
{
    for (auto m : {matrix_a(), matrix_b()}) {
        auto r = reduce_repeated_rows(m);
        EXPECT_EQ(r.reduced, m);
        EXPECT_EQ(r.run_lengths, std::vector<int>(static_cast<std::size_t>(m.size()), 0));
    }
}

TEST(Reduction, AllEqualRows)
{
    auto m = RobinsonMatrix::from_rows(2, {{2, 2}, {2, 2}});
    auto r = reduce_repeated_rows(m);
    EXPECT_EQ(r.reduced.size(), 1);
    EXPECT_EQ(r.run_lengths, std::vector<int>{1});
    EXPECT_EQ(r.index_map, (std::vector<Vertex>{0, 0}));

    ThresholdVector d({Rational(5), Rational(3)});
    auto pi = expand_embedding(r, Embedding{{Rational(0)}}, d);
    EXPECT_EQ(pi.positions, (std::vector<Rational>{0, Rational(3, 2)}));
}

TEST(Reduction, IdentityExpansion)
{
    auto m = matrix_a();
    auto r = reduce_repeated_rows(m);
    ThresholdVector d({Rational(8), Rational(6)});
    Embedding pi{{Rational(0), Rational(5), Rational(13, 2), Rational(47, 4), Rational(51, 4)}};
    EXPECT_EQ(expand_embedding(r, pi, d), pi);
}

TEST(Reduction, ThreeByThreeK1)
{
    auto m = RobinsonMatrix::from_rows(1, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    auto r = reduce_repeated_rows(m);
    ASSERT_EQ(r.reduced.size(), 2);
    ThresholdVector d({Rational(1)});
    auto pi = expand_embedding(r, Embedding{{Rational(0), Rational(2)}}, d);
    ASSERT_EQ(pi.positions.size(), 3U);
    EXPECT_LT(pi.positions[0], pi.positions[1]);
    EXPECT_LT(pi.positions[1], pi.positions[2]);
    EXPECT_FALSE(verify_embedding_serial(m, d, pi));
}

TEST(Reduction, RejectsBadReducedEmbedding)
{
    auto m = RobinsonMatrix::from_rows(1, {{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
    auto r = reduce_repeated_rows(m);
    EXPECT_THROW(expand_embedding(r, Embedding{{Rational(0), Rational(1, 2)}}, ThresholdVector({Rational(1)})),
                 std::invalid_argument);
}

TEST(Reduction, EqualRowsContiguousOnRandomMatrices)
{
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        auto m = random_robinson(testing_support::uniform(rng, 1, 12), testing_support::uniform(rng, 1, 3), rng);
        if (i % 2)
            m = inject_duplicates(m, 2, rng);
        // independent pairwise check
        for (Vertex u = 0; u < m.size(); ++u)
            for (Vertex w = u + 2; w < m.size(); ++w)
                if (m.same_row(u, w))
                    for (Vertex v = u + 1; v < w; ++v)
                        ASSERT_TRUE(m.same_row(u, v)) << to_text(m);
        auto r = reduce_repeated_rows(m);
        for (Vertex v = 0; v < m.size(); ++v)
            ASSERT_TRUE(m.same_row(v, r.representatives[r.index_map[v]]));
        for (Vertex a = 0; a < r.reduced.size(); ++a)
            for (Vertex b = a + 1; b < r.reduced.size(); ++b)
                ASSERT_FALSE(r.reduced.same_row(a, b));
    }
}
