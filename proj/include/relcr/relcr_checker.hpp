#pragma once

// Deciding relative complete reducibility of a tuple with respect to H.
//
// Two decision routes:
//   * ModuleCriterion (H = GL(U) for a coordinate subspace U, complement Ũ):
//     the tuple is relatively completely reducible iff σ(U) is a semisimple
//     module and V = σ(U) ⊕ ι(Ũ).
//   * CocharSearch (any H): for every candidate λ with the tuple in P_λ, look
//     for u ∈ R_u(P_λ(H)) conjugating the tuple into L_λ. A failure is a
//     sound counterexample.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "relcr/cocharacter.hpp"
#include "relcr/module_engine.hpp"

namespace relcr {

// ---------------------------------------------------------------------------
// Restoring cocharacters
// ---------------------------------------------------------------------------

namespace detail {

/// Positions of Lie(R_u(P_λ(H))) in the diagonal frame: same block, d_i > d_j.
template <ExactField F>
std::vector<std::pair<std::size_t, std::size_t>> unipotent_positions(const WeightedCocharacter<F>& lambda,
                                                                     const HSpec& h)
{
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (h.same_block(i, j) && lambda.weight(i, j) > 0) pos.emplace_back(i, j);
    return pos;
}

template <ExactField F>
void require_in_parabolic(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t)
{
    for (std::size_t i = 0; i < t.size(); ++i)
        if (classify_membership(lambda, t[i], t.kind()) == MembershipClass::NotInP)
            throw NotInP("entry " + std::to_string(i) + " is not in P_lambda for lambda = " + lambda.describe());
}

} // namespace detail

/// u ∈ R_u(P_λ(H)) with u^{-1} x u ∈ L_λ for every entry, or nullopt.
///
/// Any such u satisfies u^{-1} x u = c_λ(x), so with u = I + N (N in the
/// positive-weight part of Lie(H)) the condition is the linear system
/// x N - N c_λ(x) = c_λ(x) - x. This is exact for flags of any depth and
/// for det-one blocks, whose unipotent radicals coincide with those of the
/// GL blocks.
template <ExactField F>
std::optional<Matrix<F>> find_restoring_unipotent(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t,
                                                  const HSpec& h)
{
    detail::require_in_parabolic(lambda, t);
    const auto& k = t.field();
    const auto n = t.dim();
    const auto pos = detail::unipotent_positions(lambda, h);
    LinearSystem<F> sys(k, pos.size());
    for (const auto& xo : t.entries()) {
        const auto x = lambda.to_frame(xo);
        auto m = x;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (lambda.weight(i, j) > 0) m(i, j) = k.zero();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec<F> c(pos.size(), k.zero());
                for (std::size_t v = 0; v < pos.size(); ++v) {
                    auto [i, j] = pos[v];
                    // (x N)(a,b) picks N(i,j) when j == b with factor x(a,i)
                    if (j == b) c[v] = c[v] + x(a, i);
                    // (N m)(a,b) picks N(i,j) when i == a with factor m(j,b)
                    if (i == a) c[v] = c[v] - m(j, b);
                }
                sys.add(std::move(c), m(a, b) - x(a, b));
            }
    }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    auto u = Matrix<F>::identity(k, n);
    for (std::size_t v = 0; v < pos.size(); ++v) u(pos[v].first, pos[v].second) = sol->witness[v];
    return lambda.from_frame(u);
}

/// Is there μ ∈ Y(H) with P_μ = P_λ and the tuple inside L_μ?
template <ExactField F>
bool exists_restoring_mu(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t, const HSpec& h)
{
    if (lambda.is_zero()) {
        detail::require_in_parabolic(lambda, t);
        return true;
    }
    return find_restoring_unipotent(lambda, t, h).has_value();
}

/// The same question answered through centralizer dimensions:
/// dim C_H(c_λ(t)) == dim C_H(t). Det-one blocks are replaced by their GL
/// superset, which has the same unipotent radicals.
template <ExactField F>
bool exists_restoring_mu_by_centralizer(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t,
                                        const HSpec& h)
{
    const auto hh = h.has_det_one() ? h.gl_superset() : h;
    auto limit = apply_limit(lambda, t);
    return centralizer_dim(hh, limit) == centralizer_dim(hh, t);
}

// ---------------------------------------------------------------------------
// Normalization by H
// ---------------------------------------------------------------------------

/// Does H normalize the algebra spanned by the tuple? H is generated by its
/// diagonal torus and the root groups I + a E_ij inside each block, so this
/// asks that the span be graded by every torus cocharacter and closed under
/// x -> [E_ij, x] and x -> E_ij x E_ij.
template <ExactField F>
bool normalized_by_h(const HSpec& h, const GeneratorTuple<F>& t)
{
    const auto a = algebra_closure(t);
    const auto n = t.dim();
    const auto& k = t.field();
    const auto el = a.elements();
    std::vector<std::vector<std::int64_t>> torus;
    for (const auto& b : h.blocks()) {
        if (b.det_one) {
            for (std::size_t m = 1; m < b.coords.size(); ++m) {
                std::vector<std::int64_t> w(n, 0);
                w[b.coords[0]] = 1;
                w[b.coords[m]] = -1;
                torus.push_back(w);
            }
        } else {
            for (auto i : b.coords) {
                std::vector<std::int64_t> w(n, 0);
                w[i] = 1;
                torus.push_back(w);
            }
        }
    }
    for (const auto& w : torus)
        for (const auto& x : el)
            for (std::int64_t v = -2; v <= 2; ++v) {
                Matrix<F> part(k, n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (w[i] - w[j] == v) part(i, j) = x(i, j);
                if (!a.contains(part)) return false;
            }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !h.same_block(i, j)) continue;
            const auto e = Matrix<F>::unit(k, n, i, j);
            for (const auto& x : el)
                if (!a.contains(commutator(e, x)) || !a.contains(e * x * e)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Verdict { RelCR, NotRelCR, Inconclusive };
enum class CheckMode { ModuleCriterion, CocharSearch };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::RelCR: return "RelCR";
    case Verdict::NotRelCR: return "NotRelCR";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

inline std::string to_string(CheckMode m)
{
    return m == CheckMode::ModuleCriterion ? "module" : "search";
}

/// Which condition of the complement criterion a module-derived destabilizer refutes.
enum class FailedCondition {
    SubmoduleInU,      ///< a submodule W ⊆ U without a complement containing Ũ
    SubmoduleOverUbar, ///< a submodule W ⊇ Ũ without a complement inside U
};

template <ExactField F>
struct Destabilizer {
    WeightedCocharacter<F> lambda;
    std::optional<Subspace<F>> witness; ///< W, for module-derived destabilizers
    std::optional<FailedCondition> condition;
    std::string note;
};

template <ExactField F>
struct RelCrReport {
    Verdict verdict = Verdict::Inconclusive;
    CheckMode mode = CheckMode::ModuleCriterion;
    bool search_exhausted = false;
    std::size_t candidates_checked = 0;
    std::optional<Destabilizer<F>> destabilizer;
    // module-criterion certificate
    std::optional<Subspace<F>> sigma;
    std::optional<Subspace<F>> iota;
    std::optional<bool> sigma_semisimple;
    std::optional<RadicalMethod> radical_method;
    std::optional<bool> direct_sum;
    // search-mode certificate
    std::optional<bool> normalized_by_h;
    std::string note;
};

// ---------------------------------------------------------------------------
// Module criterion
// ---------------------------------------------------------------------------

namespace detail {

template <ExactField F>
struct GluFrame {
    Subspace<F> u;
    Subspace<F> ubar;
    std::vector<std::size_t> u_coords;
};

template <ExactField F>
GluFrame<F> glu_frame(const HSpec& h, const F& k)
{
    auto coords = h.glu_coords();
    if (!coords) throw UnsupportedHSpec("module criterion needs H = GL(U) for a coordinate subspace U");
    return {Subspace<F>::coordinate(k, h.dim(), *coords), Subspace<F>::coordinate(k, h.dim(), h.complement()), *coords};
}

/// σ(U) semisimple? A zero σ counts as semisimple.
template <ExactField F>
std::pair<bool, RadicalMethod> semisimple_on(const GeneratorTuple<F>& t, const Subspace<F>& s)
{
    if (s.is_zero()) return {true, RadicalMethod::Auto};
    auto r = restrict_to(t, s);
    auto rad = radical(associative_closure(r));
    return {rad.radical.is_zero(), rad.method};
}

/// λ with weight `w` on the first `lead.dim()` vectors of the adapted basis
/// [lead; rest] of U, and 0 on the remaining U-directions and on Ũ.
template <ExactField F>
WeightedCocharacter<F> adapted_cocharacter(const HSpec& h, const GluFrame<F>& fr, const Subspace<F>& lead,
                                           const Subspace<F>& rest, std::int64_t w)
{
    const auto n = h.dim();
    const auto& k = lead.field();
    auto g = Matrix<F>::identity(k, n);
    std::vector<Vec<F>> basis;
    for (std::size_t i = 0; i < lead.dim(); ++i) basis.push_back(lead.basis_vector(i));
    for (std::size_t i = 0; i < rest.dim(); ++i) basis.push_back(rest.basis_vector(i));
    if (basis.size() != fr.u_coords.size()) throw std::logic_error("adapted basis does not span U");
    std::vector<std::int64_t> weights(n, 0);
    for (std::size_t c = 0; c < fr.u_coords.size(); ++c) {
        for (std::size_t r = 0; r < n; ++r) g(r, fr.u_coords[c]) = basis[c][r];
        if (c < lead.dim()) weights[fr.u_coords[c]] = w;
    }
    std::optional<Matrix<F>> conj;
    if (!g.is_identity()) conj = g;
    return make_cocharacter<F>(h, std::move(weights), std::move(conj));
}

} // namespace detail

enum class DestabilizerPreference { ConditionIFirst, ConditionIIFirst };

/// An explicit destabilizing λ when the module criterion fails.
///
/// Condition (i) witnesses: σ(U) itself when σ ∩ ι ≠ 0, and soc(σ(U)) when
/// σ(U) is not semisimple; λ has weight 1 on W. Condition (ii) witness:
/// ι(Ũ) when σ + ι ≠ V; λ has weight -1 on a complement of W ∩ U in U.
/// Among witnesses of the preferred condition the smallest (canonical
/// order) is used.
template <ExactField F>
std::optional<Destabilizer<F>> module_destabilizer(const GeneratorTuple<F>& t, const HSpec& h,
                                                   DestabilizerPreference pref = DestabilizerPreference::ConditionIFirst)
{
    const auto& k = t.field();
    const auto fr = detail::glu_frame(h, k);
    const auto s = sigma(t, fr.u);
    const auto i = iota(t, fr.ubar);

    std::vector<Subspace<F>> cond_i;
    if (!intersect(s, i).is_zero()) cond_i.push_back(s);
    if (!s.is_zero() && !detail::semisimple_on(t, s).first) {
        auto soc = socle(restrict_to(t, s));
        std::vector<Vec<F>> vecs;
        for (std::size_t r = 0; r < soc.dim(); ++r) {
            Vec<F> v(t.dim(), k.zero());
            for (std::size_t c = 0; c < s.dim(); ++c)
                for (std::size_t j = 0; j < t.dim(); ++j) v[j] = v[j] + soc.basis()(r, c) * s.basis()(c, j);
            vecs.push_back(std::move(v));
        }
        cond_i.push_back(Subspace<F>::span(k, t.dim(), vecs));
    }
    std::sort(cond_i.begin(), cond_i.end(), [](const auto& a, const auto& b) { return canonical_compare(a, b) < 0; });
    std::vector<Subspace<F>> cond_ii;
    if (!sum(s, i).is_full()) cond_ii.push_back(i);

    auto build_i = [&](const Subspace<F>& w) {
        auto rest = complement_within(w, fr.u);
        return Destabilizer<F>{detail::adapted_cocharacter(h, fr, w, rest, 1), w, FailedCondition::SubmoduleInU,
                               "submodule inside U with no complement containing the fixed complement"};
    };
    auto build_ii = [&](const Subspace<F>& w) {
        auto wu = intersect(w, fr.u);
        auto comp = complement_within(wu, fr.u);
        return Destabilizer<F>{detail::adapted_cocharacter(h, fr, comp, wu, -1), w, FailedCondition::SubmoduleOverUbar,
                               "submodule containing the fixed complement with no complement inside U"};
    };
    std::optional<Destabilizer<F>> d;
    if (pref == DestabilizerPreference::ConditionIFirst) {
        if (!cond_i.empty()) d = build_i(cond_i.front());
        else if (!cond_ii.empty()) d = build_ii(cond_ii.front());
    } else {
        if (!cond_ii.empty()) d = build_ii(cond_ii.front());
        else if (!cond_i.empty()) d = build_i(cond_i.front());
    }
    if (d && (!tuple_in_parabolic(d->lambda, t) || exists_restoring_mu(d->lambda, t, h)))
        throw std::logic_error("module-derived cocharacter does not destabilize the tuple");
    return d;
}

template <ExactField F>
RelCrReport<F> check_relcr_module(const GeneratorTuple<F>& t, const HSpec& h)
{
    if (h.dim() != t.dim()) throw AmbientMismatch("HSpec and tuple dimensions differ");
    const auto fr = detail::glu_frame(h, t.field());
    RelCrReport<F> rep;
    rep.mode = CheckMode::ModuleCriterion;
    rep.sigma = sigma(t, fr.u);
    rep.iota = iota(t, fr.ubar);
    rep.direct_sum = is_direct_complement(*rep.sigma, *rep.iota);
    try {
        auto [ss, method] = detail::semisimple_on(t, *rep.sigma);
        rep.sigma_semisimple = ss;
        if (!rep.sigma->is_zero()) rep.radical_method = method;
    } catch (const RadicalUndecided& e) {
        rep.verdict = *rep.direct_sum ? Verdict::Inconclusive : Verdict::NotRelCR;
        rep.note = e.what();
        if (rep.verdict == Verdict::Inconclusive) return rep;
    }
    if (rep.sigma_semisimple) rep.verdict = (*rep.sigma_semisimple && *rep.direct_sum) ? Verdict::RelCR : Verdict::NotRelCR;
    rep.search_exhausted = true;
    if (rep.verdict == Verdict::NotRelCR) {
        try {
            rep.destabilizer = module_destabilizer(t, h);
        } catch (const RadicalUndecided& e) {
            rep.note = e.what();
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cocharacter search
// ---------------------------------------------------------------------------

/// Search over candidate cocharacters (pool conjugates of diagonal ones).
///
/// NotRelCR is always sound. RelCR is complete (search_exhausted) when the
/// module criterion applies to H (GL(U) cases, where it also supplies any
/// non-diagonal destabilizer) or when H normalizes the span of the tuple,
/// in which case every cocharacter of H may be taken diagonal.
template <ExactField F>
RelCrReport<F> check_relcr_search(const GeneratorTuple<F>& t, const HSpec& h, const std::vector<Matrix<F>>& pool = {})
{
    if (h.dim() != t.dim()) throw AmbientMismatch("HSpec and tuple dimensions differ");
    RelCrReport<F> rep;
    rep.mode = CheckMode::CocharSearch;
    for (const auto& lambda : enumerate_destabilizer_candidates<F>(h, pool)) {
        ++rep.candidates_checked;
        if (!tuple_in_parabolic(lambda, t)) continue;
        if (!exists_restoring_mu(lambda, t, h)) {
            rep.verdict = Verdict::NotRelCR;
            rep.destabilizer = Destabilizer<F>{lambda, std::nullopt, std::nullopt, "first destabilizing candidate"};
            return rep;
        }
    }
    if (h.glu_coords()) {
        try {
            auto mod = check_relcr_module(t, h);
            rep.sigma = mod.sigma;
            rep.iota = mod.iota;
            rep.sigma_semisimple = mod.sigma_semisimple;
            rep.radical_method = mod.radical_method;
            rep.direct_sum = mod.direct_sum;
            rep.verdict = mod.verdict;
            rep.note = mod.note;
            if (mod.verdict == Verdict::NotRelCR) {
                rep.destabilizer = mod.destabilizer;
                if (rep.destabilizer) rep.destabilizer->note = "non-diagonal destabilizer from the module criterion";
            }
            rep.search_exhausted = mod.verdict != Verdict::Inconclusive;
        } catch (const RadicalUndecided& e) {
            rep.verdict = Verdict::Inconclusive;
            rep.note = e.what();
        }
        return rep;
    }
    rep.normalized_by_h = normalized_by_h(h, t);
    rep.verdict = Verdict::RelCR;
    rep.search_exhausted = *rep.normalized_by_h;
    if (!rep.search_exhausted) rep.note = "no destabilizer among the candidates; the pool may be incomplete";
    return rep;
}

template <ExactField F>
RelCrReport<F> check_relcr(const GeneratorTuple<F>& t, const HSpec& h, CheckMode mode,
                           const std::vector<Matrix<F>>& pool = {})
{
    return mode == CheckMode::ModuleCriterion ? check_relcr_module(t, h) : check_relcr_search(t, h, pool);
}

// ---------------------------------------------------------------------------
// The complement form of the module criterion
// ---------------------------------------------------------------------------

/// Every submodule W ⊆ U has a complement containing Ũ, and every submodule
/// W ⊇ Ũ has a complement inside U. Submodules are generated from cyclic
/// spins, so this needs a finite field within the enumeration bound.
inline bool relcr_by_complements(const GeneratorTuple<PrimeField>& t, const HSpec& h)
{
    using S = Subspace<PrimeField>;
    const auto& k = t.field();
    const auto fr = detail::glu_frame(h, k);
    const auto v = S::full(k, t.dim());
    const auto zero = S(k, t.dim());
    for (const auto& w : submodules_from_spins(t)) {
        if (fr.u.contains(w) && !equivariant_complement(t, w, fr.ubar, v)) return false;
        if (w.contains(fr.ubar) && !equivariant_complement(t, w, zero, fr.u)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Relative irreducibility and the Levi necessary condition
// ---------------------------------------------------------------------------

/// No proper P_λ (λ ∈ Y(GL(U))) contains the tuple: σ(U) = 0 and ι(Ũ) = V.
template <ExactField F>
bool is_rel_irreducible(const GeneratorTuple<F>& t, const HSpec& h)
{
    const auto fr = detail::glu_frame(h, t.field());
    const bool irr = sigma(t, fr.u).is_zero() && iota(t, fr.ubar).is_full();
    // stable point: finite stabilizer in H
    if (irr && !fr.ubar.is_zero() && centralizer_dim(h, t) != 0)
        throw std::logic_error("relatively irreducible tuple with a positive-dimensional centralizer in H");
    return irr;
}

/// For each block U_i, the module criterion with U = U_i and Ũ the other
/// blocks. A false conjunct certifies failure with respect to the full Levi.
template <ExactField F>
bool levi_necessary_condition(const GeneratorTuple<F>& t, const std::vector<std::vector<std::size_t>>& blocks)
{
    for (const auto& b : blocks) {
        auto rep = check_relcr_module(t, HSpec::glu(t.dim(), b));
        if (rep.verdict == Verdict::Inconclusive) throw RadicalUndecided(rep.note);
        if (rep.verdict == Verdict::NotRelCR) return false;
    }
    return true;
}

} // namespace relcr
