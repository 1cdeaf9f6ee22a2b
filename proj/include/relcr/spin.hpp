#pragma once

// Spinning and its dual: the smallest stable subspace containing a seed,
// the largest stable subspace inside a given one, and the action induced on
// a stable subspace.

#include "relcr/generator_tuple.hpp"
#include "relcr/subspace.hpp"

namespace relcr {

/// Smallest subspace containing `seed` and stable under every entry of `t`.
/// Generators are applied in declaration order; sweeps repeat until one
/// adds nothing. For kind=group, stability under the inverses follows from
/// finite-dimensionality.
template <ExactField F>
Subspace<F> spin(const GeneratorTuple<F>& t, const Subspace<F>& seed)
{
    if (seed.ambient_dim() != t.dim()) throw AmbientMismatch("spin: seed lives in the wrong ambient space");
    Subspace<F> w = seed;
    for (;;) {
        const auto before = w.dim();
        for (const auto& x : t.entries()) {
            if (w.is_full()) return w;
            w = sum(w, w.image(x));
        }
        if (w.dim() == before) return w;
    }
}

/// ι_K(W): the submodule generated by W.
template <ExactField F>
Subspace<F> iota(const GeneratorTuple<F>& t, const Subspace<F>& w)
{
    return spin(t, w);
}

/// σ_K(U): the largest t-stable subspace contained in `u`, as the fixed point
/// of W <- W ∩ (∩_i x_i^{-1} W).
template <ExactField F>
Subspace<F> sigma(const GeneratorTuple<F>& t, const Subspace<F>& u)
{
    if (u.ambient_dim() != t.dim()) throw AmbientMismatch("sigma: subspace lives in the wrong ambient space");
    Subspace<F> w = u;
    for (;;) {
        Subspace<F> next = w;
        for (const auto& x : t.entries()) {
            if (next.is_zero()) return next;
            next = intersect(next, w.preimage(x));
        }
        if (next.dim() == w.dim()) return w;
        w = std::move(next);
    }
}

/// The matrices by which each entry acts on the stable subspace `w`, written
/// in w's echelon basis. Requires w nonzero and stable.
template <ExactField F>
GeneratorTuple<F> restrict_to(const GeneratorTuple<F>& t, const Subspace<F>& w)
{
    if (w.is_zero()) throw InvalidInput("restrict_to: zero subspace");
    const auto k = w.dim();
    std::vector<Matrix<F>> out;
    for (const auto& x : t.entries()) {
        Matrix<F> r(t.field(), k, k);
        for (std::size_t j = 0; j < k; ++j) {
            auto c = w.coordinates(x.apply(w.basis().row(j)));
            if (!c) throw NotStable("restrict_to: subspace is not stable");
            for (std::size_t i = 0; i < k; ++i) r(i, j) = (*c)[i];
        }
        out.push_back(std::move(r));
    }
    return GeneratorTuple<F>(t.field(), k, t.kind(), std::move(out));
}

template <ExactField F>
bool is_stable(const GeneratorTuple<F>& t, const Subspace<F>& w)
{
    return w.is_stable_under(t.entries());
}

} // namespace relcr
