#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "relcr/relcr.hpp"

namespace relcr::testing {

using GF = PrimeField;
using QQ = RationalField;

template <ExactField F>
Vec<F> vec(const F& k, std::initializer_list<std::int64_t> xs)
{
    Vec<F> v;
    for (auto x : xs) v.push_back(k.from_int(x));
    return v;
}

template <ExactField F>
GeneratorTuple<F> group(const F& k, std::vector<Matrix<F>> xs)
{
    const auto n = xs.front().rows();
    return GeneratorTuple<F>(k, n, TupleKind::Group, std::move(xs));
}

template <ExactField F>
GeneratorTuple<F> lie(const F& k, std::vector<Matrix<F>> xs)
{
    const auto n = xs.front().rows();
    return GeneratorTuple<F>(k, n, TupleKind::Lie, std::move(xs));
}

template <ExactField F>
GeneratorTuple<F> assoc(const F& k, std::vector<Matrix<F>> xs)
{
    const auto n = xs.front().rows();
    return GeneratorTuple<F>(k, n, TupleKind::Assoc, std::move(xs));
}

inline Matrix<GF> jordan(const GF& k, std::size_t n)
{
    auto m = Matrix<GF>::identity(k, n);
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = k.one();
    return m;
}

inline Matrix<GF> uniform_matrix(const GF& k, std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> d(0, k.characteristic() - 1);
    Matrix<GF> m(k, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = k.element(d(rng));
    return m;
}

/// Random matrices biased toward structure: sparse, triangular, unipotent,
/// block diagonal, scalar, and uniform.
inline Matrix<GF> structured_matrix(const GF& k, std::size_t n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> d(0, k.characteristic() - 1);
    std::uniform_int_distribution<int> style(0, 5);
    std::bernoulli_distribution sparse(0.25);
    auto m = uniform_matrix(k, n, rng);
    switch (style(rng)) {
    case 0:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!sparse(rng)) m(i, j) = k.zero();
        break;
    case 1:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) m(i, j) = k.zero();
        break;
    case 2:
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) m(i, j) = i == j ? k.one() : k.zero();
        break;
    case 3: {
        std::uniform_int_distribution<std::size_t> cut(1, n);
        auto c = cut(rng);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if ((i < c) != (j < c)) m(i, j) = k.zero();
        break;
    }
    case 4: {
        auto s = k.element(d(rng));
        m = s * Matrix<GF>::identity(k, n);
        break;
    }
    default: break;
    }
    return m;
}

inline Matrix<GF> invertible_matrix(const GF& k, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        auto m = structured_matrix(k, n, rng);
        if (inverse(m)) return m;
    }
}

inline GeneratorTuple<GF> random_tuple(const GF& k, std::size_t n, TupleKind kind, std::size_t count,
                                       std::mt19937_64& rng)
{
    std::vector<Matrix<GF>> xs;
    for (std::size_t i = 0; i < count; ++i)
        xs.push_back(kind == TupleKind::Group ? invertible_matrix(k, n, rng) : structured_matrix(k, n, rng));
    return GeneratorTuple<GF>(k, n, kind, std::move(xs));
}

/// All nonempty proper and improper coordinate subsets of {0..n-1}.
inline std::vector<std::vector<std::size_t>> coordinate_subsets(std::size_t n)
{
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::size_t(1) << i)) s.push_back(i);
        out.push_back(s);
    }
    return out;
}

} // namespace relcr::testing
