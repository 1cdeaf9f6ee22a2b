#pragma once

// Optimal destabilizing cocharacter for the null limit (identity tuple for
// groups, zero tuple otherwise), restricted to the diagonal torus of H.
//
// With support rows χ = e_i - e_j of all entries, maximizing
// min_χ ⟨χ, λ⟩ / ‖λ‖ is the same as finding the minimum-norm d with
// ⟨χ, d⟩ >= 1 for every χ. The optimal value is 1/‖d‖², stored squared so
// everything stays rational.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relcr/cocharacter.hpp"
#include "relcr/min_norm.hpp"

namespace relcr {

enum class KempfStatus { Optimal, AlreadyInTarget, NotUnstable };

inline std::string to_string(KempfStatus s)
{
    switch (s) {
    case KempfStatus::Optimal: return "Optimal";
    case KempfStatus::AlreadyInTarget: return "AlreadyInTarget";
    case KempfStatus::NotUnstable: return "NotUnstable";
    }
    return "?";
}

template <ExactField F>
struct OptimalResult {
    WeightedCocharacter<F> lambda_opt;
    Rational value; ///< m(λ)² / ‖λ‖²
    std::vector<std::vector<std::size_t>> parabolic_fingerprint;
};

template <ExactField F>
struct KempfOutcome {
    KempfStatus status;
    std::optional<OptimalResult<F>> result;
    std::string reason;
};

namespace detail {

/// Support positions of the entries, measured from the null target.
template <ExactField F>
std::set<std::pair<std::size_t, std::size_t>> null_support(const GeneratorTuple<F>& t)
{
    const auto& k = t.field();
    std::set<std::pair<std::size_t, std::size_t>> sup;
    for (const auto& x : t.entries()) {
        auto y = t.kind() == TupleKind::Group ? x - Matrix<F>::identity(k, t.dim()) : x;
        for (std::size_t i = 0; i < t.dim(); ++i)
            for (std::size_t j = 0; j < t.dim(); ++j)
                if (!k.is_zero(y(i, j))) sup.emplace(i, j);
    }
    return sup;
}

/// Cocharacters of the diagonal torus of H: complement weights vanish, det-one blocks sum to zero.
inline std::vector<std::vector<std::int64_t>> torus_equalities(const HSpec& h)
{
    std::vector<std::vector<std::int64_t>> eq;
    const auto n = h.dim();
    for (auto c : h.complement()) {
        std::vector<std::int64_t> r(n, 0);
        r[c] = 1;
        eq.push_back(std::move(r));
    }
    for (const auto& b : h.blocks())
        if (b.det_one) {
            std::vector<std::int64_t> r(n, 0);
            for (auto c : b.coords) r[c] = 1;
            eq.push_back(std::move(r));
        }
    return eq;
}

} // namespace detail

/// m(λ)² / ‖λ‖² for a diagonal λ, or nullopt when some support weight is <= 0.
template <ExactField F>
std::optional<Rational> squared_quality(const GeneratorTuple<F>& t, const std::vector<std::int64_t>& w)
{
    const auto sup = detail::null_support(t);
    if (sup.empty()) return std::nullopt;
    std::int64_t m = 0;
    bool first = true;
    for (auto [i, j] : sup) {
        auto v = w[i] - w[j];
        if (first || v < m) m = v;
        first = false;
    }
    if (m <= 0) return std::nullopt;
    std::int64_t norm = 0;
    for (auto x : w) norm += x * x;
    return Rational(m * m) / Rational(norm);
}

template <ExactField F>
KempfOutcome<F> optimal_destabilizing_cocharacter(const GeneratorTuple<F>& t, const HSpec& h)
{
    if (h.dim() != t.dim()) throw AmbientMismatch("HSpec and tuple dimensions differ");
    const auto n = t.dim();
    const auto sup = detail::null_support(t);
    if (sup.empty()) return {KempfStatus::AlreadyInTarget, std::nullopt, "the tuple is already the null tuple"};
    WeightConstraints c;
    c.n = n;
    c.equal_zero = detail::torus_equalities(h);
    for (auto [i, j] : sup) {
        if (i == j)
            return {KempfStatus::NotUnstable, std::nullopt,
                    "diagonal component at (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") has weight 0"};
        std::vector<std::int64_t> r(n, 0);
        r[i] = 1;
        r[j] = -1;
        c.at_least_one.push_back(std::move(r));
    }
    auto d = min_norm_point(c);
    if (!d) return {KempfStatus::NotUnstable, std::nullopt, "no cocharacter of H makes every component weight positive"};
    Rational norm = 0;
    for (const auto& x : *d) norm += x * x;
    auto lambda = make_cocharacter<F>(h, primitive_integer_vector(*d), std::nullopt);
    auto fp = lambda.preorder();
    return {KempfStatus::Optimal, OptimalResult<F>{std::move(lambda), Rational(1) / norm, std::move(fp)}, ""};
}

} // namespace relcr
