#pragma once

// Exact minimum-Euclidean-norm point of a polyhedron
//     { d in Q^n : a_k · d >= 1 (k in ineq), e_l · d = 0 (l in eq) }
// by active-set enumeration. The optimum is unique (strictly convex
// objective) and admits KKT multipliers supported on a linearly independent
// set of active rows, so only independent active sets are visited.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "relcr/affine.hpp"

namespace relcr {

struct WeightConstraints {
    std::size_t n = 0;
    std::vector<std::vector<std::int64_t>> at_least_one; ///< rows a with a·d >= 1
    std::vector<std::vector<std::int64_t>> equal_zero;   ///< rows e with e·d = 0
};

namespace detail {

inline Matrix<RationalField> rational_rows(const std::vector<std::vector<std::int64_t>>& rows, std::size_t n)
{
    RationalField q;
    Matrix<RationalField> m(q, rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(rows[i][j]);
    return m;
}

inline Rational dot(const std::vector<std::int64_t>& a, const std::vector<Rational>& d)
{
    Rational s = 0;
    for (std::size_t j = 0; j < a.size(); ++j) s += Rational(a[j]) * d[j];
    return s;
}

} // namespace detail

inline std::optional<std::vector<Rational>> min_norm_point(const WeightConstraints& c)
{
    RationalField q;
    const std::size_t n = c.n;
    // independent equality rows
    auto eq_rref = rref_rank(detail::rational_rows(c.equal_zero, n));
    Matrix<RationalField> eq(q, eq_rref.rank, n);
    for (std::size_t i = 0; i < eq_rref.rank; ++i)
        for (std::size_t j = 0; j < n; ++j) eq(i, j) = eq_rref.rref(i, j);
    const auto ineq = detail::rational_rows(c.at_least_one, n);
    const std::size_t m = c.at_least_one.size();

    auto try_active = [&](const std::vector<std::size_t>& active) -> std::optional<std::vector<Rational>> {
        const std::size_t s = active.size();
        Matrix<RationalField> rows(q, s + eq.rows(), n);
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = 0; j < n; ++j) rows(i, j) = ineq(active[i], j);
        for (std::size_t i = 0; i < eq.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) rows(s + i, j) = eq(i, j);
        Vec<RationalField> rhs(rows.rows(), Rational(0));
        for (std::size_t i = 0; i < s; ++i) rhs[i] = 1;
        std::vector<Rational> d(n, Rational(0));
        if (rows.rows() > 0) {
            auto gram = rows * rows.transpose();
            auto sol = affine_solve(gram, rhs);
            if (!sol) return std::nullopt;
            for (std::size_t i = 0; i < s; ++i)
                if (sol->witness[i] < 0) return std::nullopt;
            d = rows.transpose().apply(sol->witness);
        }
        for (const auto& a : c.at_least_one)
            if (detail::dot(a, d) < 1) return std::nullopt;
        return d;
    };

    // depth-first over independent active sets, in lexicographic index order
    std::vector<std::size_t> active;
    std::optional<std::vector<Rational>> found;
    auto independent = [&](const std::vector<std::size_t>& act) {
        Matrix<RationalField> rows(q, act.size() + eq.rows(), n);
        for (std::size_t i = 0; i < act.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) rows(i, j) = ineq(act[i], j);
        for (std::size_t i = 0; i < eq.rows(); ++i)
            for (std::size_t j = 0; j < n; ++j) rows(act.size() + i, j) = eq(i, j);
        return rank(rows) == rows.rows();
    };
    auto dfs = [&](auto&& self, std::size_t next) -> void {
        if (found) return;
        if (auto d = try_active(active)) {
            found = std::move(d);
            return;
        }
        if (active.size() + eq.rows() >= n) return;
        for (std::size_t k = next; k < m && !found; ++k) {
            active.push_back(k);
            if (independent(active)) self(self, k + 1);
            active.pop_back();
        }
    };
    dfs(dfs, 0);
    return found;
}

/// Smallest positive integer multiple of a rational vector with coprime entries.
inline std::vector<std::int64_t> primitive_integer_vector(const std::vector<Rational>& v)
{
    BigInt l = 1;
    for (const auto& x : v) {
        BigInt den = boost::multiprecision::denominator(x);
        l = l / boost::multiprecision::gcd(l, den) * den;
    }
    std::vector<BigInt> ints;
    BigInt g = 0;
    for (const auto& x : v) {
        BigInt z = boost::multiprecision::numerator(x) * (l / boost::multiprecision::denominator(x));
        ints.push_back(z);
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(z));
    }
    std::vector<std::int64_t> out;
    for (const auto& z : ints) out.push_back(g == 0 ? 0 : static_cast<std::int64_t>(z / g));
    return out;
}

inline std::int64_t gcd_of(const std::vector<std::int64_t>& v)
{
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

} // namespace relcr
