#pragma once

// Exhaustive enumeration over small finite fields: vectors, subspaces in
// canonical echelon form, and composition series found by minimal spins.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "relcr/spin.hpp"

namespace relcr {

/// Enumerations require q^n <= 2^16.
inline constexpr std::uint64_t kEnumerationBound = std::uint64_t(1) << 16;

inline std::uint64_t checked_power(std::uint64_t q, std::size_t n, std::uint64_t bound)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= q;
        if (r > bound)
            throw BudgetExceeded("enumeration over GF(" + std::to_string(q) + ")^" + std::to_string(n) +
                                 " exceeds the bound " + std::to_string(bound));
    }
    return r;
}

inline bool within_enumeration_bound(std::uint64_t q, std::size_t n)
{
    try {
        checked_power(q, n, kEnumerationBound);
        return true;
    } catch (const BudgetExceeded&) {
        return false;
    }
}

/// Visits every vector of GF(p)^n in base-p counting order (first coordinate fastest).
template <class Fn>
void for_each_vector(const PrimeField& k, std::size_t n, Fn&& fn)
{
    const std::uint64_t q = k.characteristic();
    const auto total = checked_power(q, n, kEnumerationBound);
    Vec<PrimeField> v(n, k.zero());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t r = idx;
        for (std::size_t j = 0; j < n; ++j) {
            v[j] = k.element(r % q);
            r /= q;
        }
        fn(static_cast<const Vec<PrimeField>&>(v));
    }
}

/// Visits every subspace of GF(p)^n exactly once, ordered by dimension, then
/// pivot set (lexicographic), then free entries. Each is already canonical.
template <class Fn>
void for_each_subspace(const PrimeField& k, std::size_t n, Fn&& fn)
{
    const std::uint64_t q = k.characteristic();
    checked_power(q, n, kEnumerationBound);
    for (std::size_t dim = 0; dim <= n; ++dim) {
        std::vector<std::size_t> piv(dim);
        for (std::size_t i = 0; i < dim; ++i) piv[i] = i;
        for (;;) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : piv) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free;
            for (std::size_t r = 0; r < dim; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free.emplace_back(r, c);
            std::vector<std::uint64_t> digits(free.size(), 0);
            for (;;) {
                Matrix<PrimeField> b(k, dim, n);
                for (std::size_t r = 0; r < dim; ++r) b(r, piv[r]) = k.one();
                for (std::size_t f = 0; f < free.size(); ++f) b(free[f].first, free[f].second) = k.element(digits[f]);
                fn(Subspace<PrimeField>(b));
                std::size_t f = 0;
                while (f < digits.size() && ++digits[f] == q) digits[f++] = 0;
                if (f == digits.size()) break;
            }
            // next pivot combination
            std::size_t i = dim;
            while (i > 0 && piv[i - 1] == n - dim + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
}

inline std::vector<Subspace<PrimeField>> enumerate_subspaces(std::size_t n, const PrimeField& k)
{
    std::vector<Subspace<PrimeField>> out;
    for_each_subspace(k, n, [&](Subspace<PrimeField> s) { out.push_back(std::move(s)); });
    return out;
}

/// Gaussian binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q)
{
    if (k > n) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        std::uint64_t a = 1, b = 1;
        for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
        for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
        num *= a - 1;
        den *= b - 1;
    }
    return num / den;
}

/// 0 = V_0 ⊂ V_1 ⊂ ... ⊂ V_r = V with simple quotients. Each V_i is the
/// smallest spin(V_{i-1} + v) over v ∉ V_{i-1}; minimality makes V_i/V_{i-1}
/// simple. Exhaustive over GF(p)^n, so bounded by q^n <= 2^16.
inline std::vector<Subspace<PrimeField>> composition_series(const GeneratorTuple<PrimeField>& t)
{
    const auto& k = t.field();
    const auto n = t.dim();
    checked_power(k.characteristic(), n, kEnumerationBound);
    std::vector<Subspace<PrimeField>> series{Subspace<PrimeField>(k, n)};
    while (!series.back().is_full()) {
        const auto& prev = series.back();
        std::optional<Subspace<PrimeField>> best;
        for_each_vector(k, n, [&](const Vec<PrimeField>& v) {
            if (best && best->dim() == prev.dim() + 1) return;
            if (prev.contains(v)) return;
            auto s = spin(t, sum(prev, Subspace<PrimeField>::span(k, n, {v})));
            if (!best || s.dim() < best->dim()) best = std::move(s);
        });
        series.push_back(std::move(*best));
    }
    return series;
}

/// Every submodule, as the closure of the cyclic submodules spin(v) under
/// sums. Sorted canonically.
inline std::vector<Subspace<PrimeField>> submodules_from_spins(const GeneratorTuple<PrimeField>& t)
{
    using S = Subspace<PrimeField>;
    const auto& k = t.field();
    const auto n = t.dim();
    auto less = [](const S& a, const S& b) { return canonical_compare(a, b) < 0; };
    std::set<S, decltype(less)> seen(less);
    std::vector<S> cyclic;
    for_each_vector(k, n, [&](const Vec<PrimeField>& v) {
        auto s = spin(t, S::span(k, n, {v}));
        if (seen.insert(s).second) cyclic.push_back(std::move(s));
    });
    std::vector<S> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        std::vector<S> next;
        for (const auto& a : frontier)
            for (const auto& c : cyclic) {
                auto s = sum(a, c);
                if (seen.insert(s).second) next.push_back(std::move(s));
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

} // namespace relcr
