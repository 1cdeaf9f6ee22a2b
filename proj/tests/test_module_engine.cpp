#include <gtest/gtest.h>

#include "support.hpp"

using namespace relcr;
using namespace relcr::testing;

namespace {

Matrix<GF> swap2(const GF& k) { return Matrix<GF>(k, {{0, 1}, {1, 0}}); }

Matrix<GF> shift3(const GF& k)
{
    // J e3 = e2, J e2 = e1, J e1 = 0
    return Matrix<GF>(k, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
}

} // namespace

TEST(Spin, IdentityFixesSeed)
{
    GF k(3);
    auto t = group(k, {Matrix<GF>::identity(k, 3)});
    auto w = Subspace<GF>::span(k, 3, {vec(k, {1, 2, 0})});
    EXPECT_EQ(spin(t, w), w);
}

TEST(Spin, NilpotentShift)
{
    GF k(2);
    auto t = assoc(k, {shift3(k)});
    EXPECT_TRUE(spin(t, Subspace<GF>::coordinate(k, 3, {2})).is_full());
    EXPECT_EQ(spin(t, Subspace<GF>::coordinate(k, 3, {0})), Subspace<GF>::coordinate(k, 3, {0}));
}

TEST(Sigma, Examples)
{
    GF k(3);
    auto u = Subspace<GF>::coordinate(k, 3, {0, 2});
    EXPECT_EQ(sigma(group(k, {Matrix<GF>::identity(k, 3)}), u), u);
    auto e2 = Subspace<GF>::coordinate(k, 2, {1});
    EXPECT_TRUE(sigma(group(k, {jordan(k, 2)}), e2).is_zero());
    EXPECT_TRUE(sigma(group(k, {swap2(k)}), e2).is_zero());
}

TEST(Iota, Examples)
{
    GF k(3);
    auto w = Subspace<GF>::coordinate(k, 3, {1});
    EXPECT_EQ(iota(group(k, {Matrix<GF>::identity(k, 3)}), w), w);
    auto e1 = Subspace<GF>::coordinate(k, 2, {0});
    EXPECT_TRUE(iota(group(k, {swap2(k)}), e1).is_full());
    EXPECT_EQ(iota(group(k, {jordan(k, 2)}), e1), e1);
}

TEST(AlgebraClosure, Examples)
{
    GF k(3);
    EXPECT_EQ(algebra_closure(group(k, {Matrix<GF>::identity(k, 2)})).dim(), 1u);
    auto a = algebra_closure(group(k, {jordan(k, 2)}));
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_TRUE(a.contains(Matrix<GF>::unit(k, 2, 0, 1)));
    QQ q;
    auto l = algebra_closure(lie(q, {Matrix<QQ>::unit(q, 2, 0, 1), Matrix<QQ>::unit(q, 2, 1, 0)}));
    EXPECT_EQ(l.dim(), 3u);
    EXPECT_TRUE(l.contains(Matrix<QQ>(q, {{1, 0}, {0, -1}})));
    EXPECT_FALSE(l.contains(Matrix<QQ>::identity(q, 2)));
}

TEST(Radical, Examples)
{
    GF k3(3);
    EXPECT_TRUE(radical(associative_closure(group(k3, {Matrix<GF>::identity(k3, 2)}))).radical.is_zero());
    auto r = radical(associative_closure(group(k3, {jordan(k3, 2)})));
    EXPECT_EQ(r.method, RadicalMethod::TraceForm);
    EXPECT_EQ(r.radical, Subspace<GF>::span(k3, 4, {Matrix<GF>::unit(k3, 2, 0, 1).flatten()}));
    GF k2(2);
    auto r2 = radical(associative_closure(group(k2, {swap2(k2)})));
    EXPECT_EQ(r2.method, RadicalMethod::CompositionSeries);
    EXPECT_EQ(r2.radical, Subspace<GF>::span(k2, 4, {Matrix<GF>(k2, {{1, 1}, {1, 1}}).flatten()}));
}

TEST(Radical, ForcedTraceFormInSmallCharacteristicIsUndecided)
{
    GF k2(2);
    auto a = associative_closure(group(k2, {swap2(k2)}));
    EXPECT_THROW(radical(a, RadicalMethod::TraceForm), RadicalUndecided);
    QQ q;
    auto b = associative_closure(group(q, {Matrix<QQ>::identity(q, 2)}));
    EXPECT_THROW(radical(b, RadicalMethod::CompositionSeries), RadicalUndecided);
}

TEST(Radical, TooLargeForEnumerationIsUndecided)
{
    GF k(2);
    auto t = group(k, {Matrix<GF>::identity(k, 17)});
    EXPECT_THROW(radical(associative_closure(t)), RadicalUndecided);
}

TEST(Semisimple, Examples)
{
    GF k(3);
    EXPECT_TRUE(is_semisimple_module(group(k, {Matrix<GF>::identity(k, 2)})));
    EXPECT_FALSE(is_semisimple_module(group(k, {jordan(k, 2)})));
    QQ q;
    EXPECT_FALSE(is_semisimple_module(group(q, {Matrix<QQ>(q, {{1, 1}, {0, 1}})})));
    EXPECT_TRUE(is_semisimple_module(group(k, {swap2(k)})));
}

TEST(Centralizer, Examples)
{
    GF k(3);
    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<std::size_t> u;
        for (std::size_t i = 0; i < m; ++i) u.push_back(i);
        EXPECT_EQ(centralizer_dim(HSpec::glu(3, u), group(k, {Matrix<GF>::identity(k, 3)})), m * m);
    }
    auto x = Matrix<GF>::identity(k, 3);
    x(0, 2) = k.one();
    EXPECT_EQ(centralizer_dim(HSpec::glu(3, {1, 2}), group(k, {x})), 2u);
    QQ q;
    EXPECT_EQ(centralizer_dim(HSpec::full_gl(2), group(q, {Matrix<QQ>(q, {{1, 0}, {0, 2}})})), 2u);
    EXPECT_THROW(centralizer_dim(HSpec::standard_levi(3, {HBlock{{1, 2}, true}}), group(k, {x})),
                 UnsupportedHSpec);
}

TEST(EquivariantComplement, Examples)
{
    GF k(3);
    const auto full = Subspace<GF>::full(k, 2);
    const Subspace<GF> zero(k, 2);
    auto w = Subspace<GF>::coordinate(k, 2, {0});
    auto c = equivariant_complement(group(k, {Matrix<GF>::identity(k, 2)}), w, zero, full);
    ASSERT_TRUE(c);
    EXPECT_TRUE(is_direct_complement(w, *c));
    EXPECT_FALSE(equivariant_complement(group(k, {jordan(k, 2)}), w, zero, full));
    auto plus = Subspace<GF>::span(k, 2, {vec(k, {1, 1})});
    auto minus = Subspace<GF>::span(k, 2, {vec(k, {1, -1})});
    EXPECT_EQ(equivariant_complement(group(k, {swap2(k)}), plus, zero, full), minus);
    EXPECT_THROW(equivariant_complement(group(k, {swap2(k)}), w, zero, full), NotStable);
}

TEST(Spin, ExtensiveMonotoneIdempotent)
{
    std::mt19937_64 rng(21);
    GF k(3);
    for (int it = 0; it < 100; ++it) {
        auto t = random_tuple(k, 4, TupleKind::Group, 2, rng);
        auto v1 = uniform_matrix(k, 4, rng).row_vec(0);
        auto v2 = uniform_matrix(k, 4, rng).row_vec(0);
        auto a = Subspace<GF>::span(k, 4, {v1});
        auto b = Subspace<GF>::span(k, 4, {v1, v2});
        auto sa = spin(t, a), sb = spin(t, b);
        EXPECT_TRUE(sa.contains(a));
        EXPECT_TRUE(sb.contains(sa));
        EXPECT_EQ(spin(t, sa), sa);
        EXPECT_TRUE(is_stable(t, sa));
    }
}

TEST(SigmaIota, MatchSubmoduleLattice)
{
    std::mt19937_64 rng(22);
    for (std::uint32_t p : {2u, 3u}) {
        GF k(p);
        for (int it = 0; it < 60; ++it) {
            std::uniform_int_distribution<std::size_t> dim(1, p == 2 ? 5 : 4);
            const auto n = dim(rng);
            auto kind = std::bernoulli_distribution(0.5)(rng) ? TupleKind::Group : TupleKind::Assoc;
            auto t = random_tuple(k, n, kind, 1 + it % 2, rng);
            auto lattice = submodule_lattice(t, false);
            for (const auto& c : coordinate_subsets(n)) {
                auto u = Subspace<GF>::coordinate(k, n, c);
                EXPECT_EQ(sigma(t, u), brute_force_sigma(lattice, u));
                EXPECT_EQ(iota(t, u), brute_force_iota(lattice, u));
            }
        }
    }
}

TEST(AlgebraClosure, ClosedUnderProduct)
{
    std::mt19937_64 rng(23);
    GF k(3);
    for (int it = 0; it < 40; ++it) {
        for (auto kind : {TupleKind::Group, TupleKind::Lie, TupleKind::Assoc}) {
            auto t = random_tuple(k, 3, kind, 2, rng);
            auto a = algebra_closure(t);
            auto el = a.elements();
            for (const auto& x : el)
                for (const auto& y : el)
                    EXPECT_TRUE(a.contains(kind == TupleKind::Lie ? commutator(x, y) : x * y));
            for (const auto& x : t.entries()) EXPECT_TRUE(a.contains(x));
            EXPECT_EQ(a.contains_identity, a.contains(Matrix<GF>::identity(k, 3)));
            if (kind != TupleKind::Lie) EXPECT_TRUE(a.contains_identity);
        }
    }
}

TEST(Radical, TraceFormAgreesWithCompositionSeries)
{
    std::mt19937_64 rng(24);
    GF k(5);
    for (int it = 0; it < 60; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Assoc, 1 + it % 2, rng);
        auto a = associative_closure(t);
        EXPECT_EQ(radical(a, RadicalMethod::TraceForm).radical, radical(a, RadicalMethod::CompositionSeries).radical);
    }
}

TEST(Semisimple, MatchesComplementOracle)
{
    std::mt19937_64 rng(25);
    for (std::uint32_t p : {2u, 3u}) {
        GF k(p);
        for (int it = 0; it < 80; ++it) {
            std::uniform_int_distribution<std::size_t> dim(1, p == 2 ? 5 : 4);
            auto t = random_tuple(k, dim(rng), TupleKind::Group, 1 + it % 2, rng);
            EXPECT_EQ(is_semisimple_module(t), brute_force_semisimple(t));
        }
    }
}

TEST(Centralizer, DependsOnlyOnClosure)
{
    std::mt19937_64 rng(26);
    GF k(3);
    for (int it = 0; it < 60; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 2, rng);
        auto extended = t.entries();
        extended.push_back(t[0] * t[1]);
        extended.push_back(t[1] * t[1]);
        auto t2 = t.with_entries(extended);
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            EXPECT_EQ(centralizer_dim(h, t), centralizer_dim(h, t2));
        }
    }
}

TEST(Centralizer, RelativelyCompletelyReducibleHasSemisimpleCentralizer)
{
    std::mt19937_64 rng(27);
    GF k(5);
    std::size_t relcr_seen = 0;
    for (int it = 0; it < 150; ++it) {
        auto t = random_tuple(k, 3, TupleKind::Group, 1, rng);
        for (const auto& c : coordinate_subsets(3)) {
            auto h = HSpec::glu(3, c);
            if (check_relcr_module(t, h).verdict != Verdict::RelCR) continue;
            ++relcr_seen;
            auto space = centralizer_space(h, t);
            std::vector<Matrix<GF>> basis;
            for (std::size_t i = 0; i < space.dim(); ++i)
                basis.push_back(Matrix<GF>::unflatten(k, 3, space.basis_vector(i)));
            if (basis.empty()) continue;
            auto rad = radical(associative_closure(assoc(k, basis)));
            EXPECT_TRUE(rad.radical.is_zero());
        }
    }
    EXPECT_GT(relcr_seen, 0u);
}
