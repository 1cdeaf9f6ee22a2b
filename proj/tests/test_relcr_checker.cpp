#include <gtest/gtest.h>

#include "support.hpp"

using namespace relcr;
using namespace relcr::testing;

namespace {

HSpec sl_block() { return HSpec::standard_levi(3, {HBlock{{1, 2}, true}}); }

Matrix<QQ> unipotent(const QQ& q, std::size_t i, std::size_t j)
{
    auto x = Matrix<QQ>::identity(q, 3);
    x(i, j) = q.one();
    return x;
}

Matrix<GF> swap2(const GF& k) { return Matrix<GF>(k, {{0, 1}, {1, 0}}); }

} // namespace

TEST(RestoringMu, Examples)
{
    QQ q;
    auto t = group(q, {unipotent(q, 0, 2)});
    EXPECT_TRUE(exists_restoring_mu(make_cocharacter<QQ>(sl_block(), {0, 0, 0}, std::nullopt), t, sl_block()));
    EXPECT_FALSE(exists_restoring_mu(make_cocharacter<QQ>(sl_block(), {0, 1, -1}, std::nullopt), t, sl_block()));
    GF k(3);
    auto d = group(k, {Matrix<GF>(k, {{2, 0}, {0, 1}})});
    EXPECT_TRUE(exists_restoring_mu(make_cocharacter<GF>(HSpec::full_gl(2), {1, 0}, std::nullopt), d,
                                    HSpec::full_gl(2)));
    auto bad = make_cocharacter<GF>(HSpec::full_gl(2), {0, 1}, std::nullopt);
    EXPECT_THROW(exists_restoring_mu(bad, group(k, {jordan(k, 2)}), HSpec::full_gl(2)), NotInP);
}

TEST(RestoringMu, DimensionsDropTheWrongWayForTheExample)
{
    // centralizer dims computed in the GL superset of the SL block
    QQ q;
    auto h = sl_block().gl_superset();
    auto t = group(q, {unipotent(q, 0, 2)});
    auto l = make_cocharacter<QQ>(sl_block(), {0, 1, -1}, std::nullopt);
    EXPECT_LT(centralizer_dim(h, t), centralizer_dim(h, apply_limit(l, t)));
    EXPECT_FALSE(exists_restoring_mu_by_centralizer(l, t, sl_block()));
}

TEST(RestoringMu, RoutesAgreeWithEnumeration)
{
    std::mt19937_64 rng(41);
    GF k(3);
    std::vector<HSpec> specs{HSpec::full_gl(3), HSpec::glu(3, {0, 1}), HSpec::glu(3, {1, 2}), HSpec::glu(3, {1}),
                             HSpec::standard_levi(3, {HBlock{{1, 2}, true}}),
                             HSpec::standard_levi(3, {HBlock{{0, 1, 2}, true}})};
    std::size_t checked = 0, restorable = 0;
    for (int it = 0; it < 150; ++it) {
        auto t = random_tuple(k, 3, it % 2 ? TupleKind::Group : TupleKind::Lie, 1 + it % 2, rng);
        for (const auto& h : specs)
            for (const auto& l : enumerate_destabilizer_candidates<GF>(h, {})) {
                if (!tuple_in_parabolic(l, t)) continue;
                ++checked;
                const bool affine = exists_restoring_mu(l, t, h);
                restorable += affine;
                EXPECT_EQ(affine, brute_force_restoring_mu(l, t, h)) << l.describe();
                EXPECT_EQ(affine, exists_restoring_mu_by_centralizer(l, t, h)) << l.describe();
                if (auto u = find_restoring_unipotent(l, t, h))
                    for (const auto& x : t.entries()) {
                        auto y = (*inverse(*u)) * x * (*u);
                        EXPECT_EQ(classify_membership(l, y, t.kind()), MembershipClass::InLevi);
                    }
            }
    }
    EXPECT_GT(checked, 100u);
    EXPECT_GT(restorable, 0u);
    EXPECT_LT(restorable, checked);
}

TEST(CheckRelcr, IdentityIsRelCR)
{
    GF k(3);
    auto t = group(k, {Matrix<GF>::identity(k, 3)});
    for (const auto& c : coordinate_subsets(3)) {
        EXPECT_EQ(check_relcr(t, HSpec::glu(3, c), CheckMode::ModuleCriterion).verdict, Verdict::RelCR);
        EXPECT_EQ(check_relcr(t, HSpec::glu(3, c), CheckMode::CocharSearch).verdict, Verdict::RelCR);
    }
    auto r = check_relcr(t, HSpec::standard_levi(3, {HBlock{{0, 1}, true}}), CheckMode::CocharSearch);
    EXPECT_EQ(r.verdict, Verdict::RelCR);
    EXPECT_TRUE(r.search_exhausted);
}

TEST(CheckRelcr, JordanBlockAgainstSecondCoordinate)
{
    GF k(3);
    auto t = group(k, {jordan(k, 2)});
    auto h = HSpec::glu(2, {1});
    auto m = check_relcr(t, h, CheckMode::ModuleCriterion);
    EXPECT_EQ(m.verdict, Verdict::NotRelCR);
    EXPECT_TRUE(m.sigma->is_zero());
    EXPECT_EQ(*m.iota, Subspace<GF>::coordinate(k, 2, {0}));
    auto s = check_relcr(t, h, CheckMode::CocharSearch);
    EXPECT_EQ(s.verdict, Verdict::NotRelCR);
    EXPECT_EQ(s.destabilizer->lambda.weights(), (std::vector<std::int64_t>{0, -1}));
}

TEST(CheckRelcr, UnipotentPairWithDeterminantOneBlock)
{
    QQ q;
    auto k_all = check_relcr(group(q, {unipotent(q, 0, 1), unipotent(q, 0, 2)}), sl_block(), CheckMode::CocharSearch);
    EXPECT_EQ(k_all.verdict, Verdict::RelCR);
    EXPECT_TRUE(k_all.search_exhausted);
    EXPECT_EQ(k_all.normalized_by_h, true);
    auto beta = check_relcr(group(q, {unipotent(q, 0, 1)}), sl_block(), CheckMode::CocharSearch);
    EXPECT_EQ(beta.verdict, Verdict::NotRelCR);
    EXPECT_EQ(beta.destabilizer->lambda.weights(), (std::vector<std::int64_t>{0, -1, 1}));
    auto ab = check_relcr(group(q, {unipotent(q, 0, 2)}), sl_block(), CheckMode::CocharSearch);
    EXPECT_EQ(ab.verdict, Verdict::NotRelCR);
    EXPECT_EQ(ab.destabilizer->lambda.weights(), (std::vector<std::int64_t>{0, 1, -1}));
    EXPECT_THROW(check_relcr(group(q, {unipotent(q, 0, 2)}), sl_block(), CheckMode::ModuleCriterion),
                 UnsupportedHSpec);
}

TEST(CheckRelcr, LieAndAssocShareThePipeline)
{
    QQ q;
    auto e12 = Matrix<QQ>::unit(q, 2, 0, 1);
    for (auto t : {lie(q, {e12}), assoc(q, {e12})}) {
        EXPECT_EQ(check_relcr(t, HSpec::full_gl(2), CheckMode::ModuleCriterion).verdict, Verdict::NotRelCR);
        EXPECT_EQ(check_relcr(t, HSpec::full_gl(2), CheckMode::CocharSearch).verdict, Verdict::NotRelCR);
    }
    auto diag = lie(q, {Matrix<QQ>(q, {{1, 0}, {0, 2}})});
    EXPECT_EQ(check_relcr(diag, HSpec::full_gl(2), CheckMode::ModuleCriterion).verdict, Verdict::RelCR);
}

TEST(CheckRelcr, ModuleAndSearchAgreeAndCertificatesReplay)
{
    std::mt19937_64 rng(42);
    for (std::uint32_t p : {2u, 3u}) {
        GF k(p);
        for (int it = 0; it < 80; ++it) {
            std::uniform_int_distribution<std::size_t> dim(1, 3);
            const auto n = dim(rng);
            auto t = random_tuple(k, n, TupleKind::Group, 1 + it % 2, rng);
            for (const auto& c : coordinate_subsets(n)) {
                auto h = HSpec::glu(n, c);
                auto m = check_relcr(t, h, CheckMode::ModuleCriterion);
                auto s = check_relcr(t, h, CheckMode::CocharSearch);
                ASSERT_NE(m.verdict, Verdict::Inconclusive);
                EXPECT_EQ(m.verdict, s.verdict);
                if (s.verdict == Verdict::RelCR) EXPECT_TRUE(s.search_exhausted);
                for (const auto* r : {&m, &s}) {
                    if (r->verdict != Verdict::NotRelCR) continue;
                    ASSERT_TRUE(r->destabilizer);
                    const auto& l = r->destabilizer->lambda;
                    EXPECT_TRUE(tuple_in_parabolic(l, t));
                    EXPECT_FALSE(exists_restoring_mu(l, t, h));
                    EXPECT_FALSE(brute_force_restoring_mu(l, t, h));
                }
            }
        }
    }
}

TEST(CheckRelcr, ComplementFormAgrees)
{
    std::mt19937_64 rng(43);
    GF k(3);
    for (int it = 0; it < 60; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 1, rng);
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            EXPECT_EQ(relcr_by_complements(t, h), check_relcr_module(t, h).verdict == Verdict::RelCR);
        }
    }
}

TEST(Irreducible, Examples)
{
    GF k(3);
    EXPECT_TRUE(is_rel_irreducible(group(k, {swap2(k)}), HSpec::glu(2, {1})));
    EXPECT_FALSE(is_rel_irreducible(group(k, {Matrix<GF>::identity(k, 2)}), HSpec::glu(2, {0})));
    EXPECT_FALSE(is_rel_irreducible(group(k, {jordan(k, 2)}), HSpec::glu(2, {0})));
}

TEST(Irreducible, ImpliesRelCR)
{
    std::mt19937_64 rng(44);
    GF k(3);
    std::size_t irreducible = 0;
    for (int it = 0; it < 200; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 1 + it % 2, rng);
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            if (!is_rel_irreducible(t, h)) continue;
            ++irreducible;
            EXPECT_EQ(check_relcr_module(t, h).verdict, Verdict::RelCR);
        }
    }
    EXPECT_GT(irreducible, 0u);
}

TEST(LeviCondition, Examples)
{
    GF k(3);
    std::vector<std::vector<std::size_t>> blocks{{0}, {1}};
    EXPECT_TRUE(levi_necessary_condition(group(k, {Matrix<GF>::identity(k, 2)}), blocks));
    EXPECT_FALSE(levi_necessary_condition(group(k, {jordan(k, 2)}), blocks));
    EXPECT_TRUE(levi_necessary_condition(group(k, {swap2(k)}), blocks));
}

TEST(CheckRelcr, StableSubmoduleRemark)
{
    std::mt19937_64 rng(45);
    GF k(5);
    std::size_t seen = 0;
    for (int it = 0; it < 300; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 1, rng);
        if (!is_semisimple_module(t)) continue;
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            auto u = Subspace<GF>::coordinate(k, 3, c);
            if (!is_stable(t, u)) continue;
            ++seen;
            auto ubar = Subspace<GF>::coordinate(k, 3, h.complement());
            EXPECT_EQ(check_relcr_module(t, h).verdict == Verdict::RelCR, is_stable(t, ubar));
        }
    }
    EXPECT_GT(seen, 0u);
}

TEST(CheckRelcr, ExtendingByCentralizingElementsOfH)
{
    // K ⊆ M = <K, c> with c ∈ C_H(K): M RelCR implies K RelCR
    std::mt19937_64 rng(46);
    GF k(3);
    std::size_t m_relcr = 0;
    for (int it = 0; it < 150; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 1, rng);
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            auto space = centralizer_space(h, t);
            if (space.is_zero()) continue;
            Vec<GF> z(9, k.zero());
            std::uniform_int_distribution<std::uint64_t> d(0, 2);
            for (std::size_t i = 0; i < space.dim(); ++i) {
                auto coeff = k.element(d(rng));
                auto b = space.basis_vector(i);
                for (std::size_t j = 0; j < 9; ++j) z[j] = z[j] + coeff * b[j];
            }
            auto g = Matrix<GF>::identity(k, 3) + Matrix<GF>::unflatten(k, 3, z);
            if (!inverse(g)) continue;
            auto entries = t.entries();
            entries.push_back(g);
            auto m = t.with_entries(entries);
            if (check_relcr_module(m, h).verdict == Verdict::RelCR) {
                ++m_relcr;
                EXPECT_EQ(check_relcr_module(t, h).verdict, Verdict::RelCR);
            }
        }
    }
    EXPECT_GT(m_relcr, 0u);
}

TEST(Normalization, Examples)
{
    QQ q;
    EXPECT_TRUE(normalized_by_h(sl_block(), group(q, {unipotent(q, 0, 1), unipotent(q, 0, 2)})));
    EXPECT_FALSE(normalized_by_h(sl_block(), group(q, {unipotent(q, 0, 1)})));
    EXPECT_TRUE(normalized_by_h(HSpec::full_gl(3), group(q, {Matrix<QQ>::identity(q, 3)})));
}

TEST(CheckRelcr, ConjugatorPoolFindsNonDiagonalDestabilizer)
{
    // K stabilizes the line spanned by e1 + e2 inside U = <e1, e2>; only a
    // conjugated cocharacter sees that flag.
    GF k(3);
    auto x = Matrix<GF>(k, {{0, 1, 1}, {1, 0, 1}, {0, 0, 1}});
    auto t = group(k, {x});
    auto h = HSpec::standard_levi(3, {HBlock{{0, 1}, false}});
    ASSERT_TRUE(h.glu_coords());
    auto no_pool = check_relcr_search(t, h, {});
    auto g = Matrix<GF>(k, {{1, 0, 0}, {1, 1, 0}, {0, 0, 1}});
    auto with_pool = check_relcr_search(t, h, {g});
    EXPECT_EQ(check_relcr_module(t, h).verdict, with_pool.verdict);
    EXPECT_EQ(no_pool.verdict, with_pool.verdict);
}
