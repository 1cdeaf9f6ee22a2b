#pragma once

// Brute-force baselines over small prime fields. Quantifiers are discharged
// literally by enumerating subspaces, unipotent elements or weight vectors.

#include <optional>
#include <vector>

#include "relcr/cocharacter.hpp"
#include "relcr/enumerate.hpp"
#include "relcr/kempf.hpp"
#include "relcr/module_engine.hpp"

namespace relcr {

using GFTuple = GeneratorTuple<PrimeField>;
using GFSubspace = Subspace<PrimeField>;

/// All t-stable subspaces, in enumeration order.
inline std::vector<GFSubspace> submodule_lattice(const GFTuple& t, bool verify_closure = true)
{
    std::vector<GFSubspace> out;
    for_each_subspace(t.field(), t.dim(), [&](GFSubspace s) {
        if (is_stable(t, s)) out.push_back(std::move(s));
    });
    if (verify_closure) {
        auto member = [&](const GFSubspace& s) { return std::find(out.begin(), out.end(), s) != out.end(); };
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = a + 1; b < out.size(); ++b)
                if (!member(sum(out[a], out[b])) || !member(intersect(out[a], out[b])))
                    throw std::logic_error("submodule lattice is not closed under sum and intersection");
    }
    return out;
}

/// Largest lattice element inside u.
inline GFSubspace brute_force_sigma(const std::vector<GFSubspace>& lattice, const GFSubspace& u)
{
    std::optional<GFSubspace> best;
    for (const auto& s : lattice)
        if (u.contains(s) && (!best || s.dim() > best->dim())) best = s;
    return *best;
}

/// Smallest lattice element containing w.
inline GFSubspace brute_force_iota(const std::vector<GFSubspace>& lattice, const GFSubspace& w)
{
    std::optional<GFSubspace> best;
    for (const auto& s : lattice)
        if (s.contains(w) && (!best || s.dim() < best->dim())) best = s;
    return *best;
}

/// Every submodule has a t-stable complement.
inline bool brute_force_semisimple(const GFTuple& t)
{
    const auto& k = t.field();
    const auto n = t.dim();
    const GFSubspace zero(k, n);
    const auto full = GFSubspace::full(k, n);
    for (const auto& w : submodule_lattice(t, false))
        if (!equivariant_complement(t, w, zero, full)) return false;
    return true;
}

/// Every submodule W ⊆ U has a complement containing Ũ, and every
/// submodule W ⊇ Ũ has a complement inside U.
inline bool brute_force_relcr(const GFTuple& t, const HSpec& h)
{
    auto coords = h.glu_coords();
    if (!coords) throw UnsupportedHSpec("brute_force_relcr needs H = GL(U)");
    const auto& k = t.field();
    const auto n = t.dim();
    const auto u = GFSubspace::coordinate(k, n, *coords);
    const auto ubar = GFSubspace::coordinate(k, n, h.complement());
    const GFSubspace zero(k, n);
    const auto full = GFSubspace::full(k, n);
    for (const auto& w : submodule_lattice(t, false)) {
        if (u.contains(w) && !equivariant_complement(t, w, ubar, full)) return false;
        if (w.contains(ubar) && !equivariant_complement(t, w, zero, u)) return false;
    }
    return true;
}

/// Enumerates u ∈ R_u(P_λ(H)) and tests u^{-1} x u ∈ L_λ for every entry.
inline bool brute_force_restoring_mu(const WeightedCocharacter<PrimeField>& lambda, const GFTuple& t, const HSpec& h)
{
    if (!tuple_in_parabolic(lambda, t)) throw NotInP("tuple is not in P_lambda");
    const auto& k = t.field();
    const auto n = t.dim();
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (h.same_block(i, j) && lambda.weight(i, j) > 0) pos.emplace_back(i, j);
    const std::uint64_t q = k.characteristic();
    const auto total = checked_power(q, pos.size(), kEnumerationBound);
    std::vector<Matrix<PrimeField>> frame;
    for (const auto& x : t.entries()) frame.push_back(lambda.to_frame(x));
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        auto u = Matrix<PrimeField>::identity(k, n);
        auto r = idx;
        for (const auto& [i, j] : pos) {
            u(i, j) = k.element(r % q);
            r /= q;
        }
        auto uinv = *inverse(u);
        bool ok = true;
        for (const auto& x : frame) {
            auto y = uinv * x * u;
            for (std::size_t i = 0; i < n && ok; ++i)
                for (std::size_t j = 0; j < n && ok; ++j)
                    if (lambda.weight(i, j) != 0 && !k.is_zero(y(i, j))) ok = false;
            if (!ok) break;
        }
        if (ok) return true;
    }
    return false;
}

struct BruteOptimal {
    std::vector<std::int64_t> weights;
    Rational value;
    std::size_t maximizers; ///< primitive maximizers found
};

/// Best m(λ)²/‖λ‖² over primitive integer weight vectors of the torus of H
/// with entries in [-bound, bound].
template <ExactField F>
std::optional<BruteOptimal> brute_force_optimal(const GeneratorTuple<F>& t, const HSpec& h, std::int64_t bound = 6)
{
    const auto n = t.dim();
    const auto eq = detail::torus_equalities(h);
    std::optional<BruteOptimal> best;
    std::vector<std::int64_t> w(n, -bound);
    for (;;) {
        bool in_torus = true;
        for (const auto& e : eq) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < n; ++i) s += e[i] * w[i];
            if (s != 0) in_torus = false;
        }
        if (in_torus && gcd_of(w) == 1) {
            if (auto v = squared_quality(t, w)) {
                if (!best || *v > best->value) best = BruteOptimal{w, *v, 1};
                else if (*v == best->value) ++best->maximizers;
            }
        }
        std::size_t i = 0;
        while (i < n && w[i] == bound) w[i++] = -bound;
        if (i == n) break;
        ++w[i];
    }
    return best;
}

} // namespace relcr
