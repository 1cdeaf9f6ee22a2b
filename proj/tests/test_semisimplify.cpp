#include <gtest/gtest.h>

#include "support.hpp"

using namespace relcr;
using namespace relcr::testing;

TEST(Semisimplify, AlreadyRelCRTakesNoSteps)
{
    GF k(3);
    auto t = group(k, {Matrix<GF>(k, {{0, 1}, {1, 0}})});
    auto tr = semisimplify(t, HSpec::glu(2, {1}));
    EXPECT_TRUE(tr.steps.empty());
    EXPECT_EQ(tr.final, t);
    EXPECT_EQ(tr.final_report.verdict, Verdict::RelCR);
}

TEST(Semisimplify, UnipotentInFullGL)
{
    GF k(3);
    auto t = group(k, {jordan(k, 2)});
    auto tr = semisimplify(t, HSpec::full_gl(2));
    ASSERT_EQ(tr.steps.size(), 1u);
    EXPECT_EQ(tr.steps[0].destabilizer.lambda.weights(), (std::vector<std::int64_t>{1, 0}));
    EXPECT_EQ(tr.steps[0].before_dim, 2u);
    EXPECT_EQ(tr.steps[0].after_dim, 4u);
    EXPECT_TRUE(tr.final[0].is_identity());
}

TEST(Semisimplify, CornerUnipotentAgainstLastTwoCoordinates)
{
    GF k(3);
    auto x = Matrix<GF>::identity(k, 3);
    x(0, 2) = k.one();
    auto h = HSpec::glu(3, {1, 2});
    auto tr = semisimplify(group(k, {x}), h);
    ASSERT_EQ(tr.steps.size(), 1u);
    EXPECT_TRUE(tr.final[0].is_identity());
    EXPECT_EQ(tr.steps[0].before_dim, 2u);
    EXPECT_EQ(tr.steps[0].after_dim, 4u);
    // weight -1 on U, so the corner entry becomes positive weight
    EXPECT_EQ(tr.steps[0].destabilizer.lambda.weights(), (std::vector<std::int64_t>{0, -1, -1}));
    EXPECT_TRUE(replay_trace(tr, group(k, {x}), h));
}

TEST(Semisimplify, JordanFamily)
{
    GF k(3);
    for (std::size_t n = 1; n <= 5; ++n) {
        auto t = group(k, {jordan(k, n)});
        auto h = HSpec::full_gl(n);
        auto tr = semisimplify(t, h);
        EXPECT_EQ(tr.steps.size(), n - 1);
        EXPECT_TRUE(tr.final[0].is_identity());
        for (const auto& s : tr.steps) EXPECT_LT(s.before_dim, s.after_dim);
        EXPECT_TRUE(replay_trace(tr, t, h));
    }
}

TEST(Semisimplify, RandomInstancesTerminateAndReplay)
{
    std::mt19937_64 rng(51);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        GF k(p);
        for (int it = 0; it < 60; ++it) {
            std::uniform_int_distribution<std::size_t> dim(1, 4);
            const auto n = dim(rng);
            auto t = random_tuple(k, n, it % 3 == 0 ? TupleKind::Assoc : TupleKind::Group, 1 + it % 2, rng);
            for (const auto& c : coordinate_subsets(n)) {
                auto h = HSpec::glu(n, c);
                auto a = semisimplify(t, h, DestabilizerPreference::ConditionIFirst);
                auto b = semisimplify(t, h, DestabilizerPreference::ConditionIIFirst);
                EXPECT_LE(a.steps.size(), h.lie_dim());
                EXPECT_EQ(a.final_report.verdict, Verdict::RelCR);
                EXPECT_TRUE(replay_trace(a, t, h));
                EXPECT_TRUE(replay_trace(b, t, h));
                // invariants of the limit class do not depend on the order of repairs
                EXPECT_EQ(centralizer_dim(h, a.final), centralizer_dim(h, b.final));
                std::multiset<std::size_t> da{a.final_report.sigma->dim(), a.final_report.iota->dim()};
                std::multiset<std::size_t> db{b.final_report.sigma->dim(), b.final_report.iota->dim()};
                EXPECT_EQ(da, db);
            }
        }
    }
}

TEST(Semisimplify, RejectsNonGLU)
{
    GF k(3);
    auto h = HSpec::standard_levi(3, {HBlock{{1, 2}, true}});
    EXPECT_THROW(semisimplify(group(k, {Matrix<GF>::identity(k, 3)}), h), UnsupportedHSpec);
}
