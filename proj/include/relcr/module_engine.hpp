#pragma once

// Module-theoretic computations for a generator tuple acting on V = F^n.
//
// Semisimplicity is decided through the Jacobson radical of the unital
// associative algebra A generated by the tuple: V is semisimple iff J(A) = 0.
// GF(p) and Q are perfect, so this also decides semisimplicity after
// extending scalars to the algebraic closure. Likewise σ and ι are cut out
// by linear conditions defined over the base field and commute with base
// change.

#include <optional>
#include <type_traits>

#include "relcr/affine.hpp"
#include "relcr/enumerate.hpp"
#include "relcr/hspec.hpp"

namespace relcr {

enum class ClosureKind { Associative, Lie };

/// A subspace of Mat_n (flattened row-major) closed under a product.
template <ExactField F>
struct AlgebraBasis {
    std::size_t n;
    ClosureKind product;
    Subspace<F> span;
    bool contains_identity;

    std::size_t dim() const noexcept { return span.dim(); }
    Matrix<F> element(std::size_t i) const { return Matrix<F>::unflatten(span.field(), n, span.basis().row(i)); }
    std::vector<Matrix<F>> elements() const
    {
        std::vector<Matrix<F>> out;
        for (std::size_t i = 0; i < dim(); ++i) out.push_back(element(i));
        return out;
    }
    bool contains(const Matrix<F>& x) const { return span.contains(x.flatten()); }
};

namespace detail {

template <ExactField F>
Matrix<F> product(ClosureKind kind, const Matrix<F>& x, const Matrix<F>& y)
{
    return kind == ClosureKind::Associative ? x * y : commutator(x, y);
}

/// Smallest subspace containing `seeds` closed under left products by the
/// generators. For the associative product with I among the seeds this is
/// the span of all words; for the bracket it is the span of right-normed
/// iterated brackets, which spans the generated Lie algebra.
template <ExactField F>
Subspace<F> close_under(ClosureKind kind, const std::vector<Matrix<F>>& gens, const std::vector<Matrix<F>>& seeds,
                        std::size_t n)
{
    const auto& k = gens.front().field();
    std::vector<Vec<F>> flat;
    for (const auto& s : seeds) flat.push_back(s.flatten());
    Subspace<F> span = Subspace<F>::span(k, n * n, flat);
    std::size_t processed = 0;
    std::vector<Matrix<F>> queue;
    for (std::size_t i = 0; i < span.dim(); ++i) queue.push_back(Matrix<F>::unflatten(k, n, span.basis().row(i)));
    while (processed < queue.size()) {
        auto b = queue[processed++];
        for (const auto& g : gens) {
            auto p = product(kind, g, b);
            auto v = p.flatten();
            if (span.contains(v)) continue;
            span = sum(span, Subspace<F>::span(k, n * n, {v}));
            queue.push_back(std::move(p));
        }
    }
    return span;
}

template <ExactField F>
bool closed_under_product(ClosureKind kind, const Subspace<F>& span, std::size_t n)
{
    std::vector<Matrix<F>> el;
    for (std::size_t i = 0; i < span.dim(); ++i) el.push_back(Matrix<F>::unflatten(span.field(), n, span.basis().row(i)));
    for (const auto& x : el)
        for (const auto& y : el)
            if (!span.contains(product(kind, x, y).flatten())) return false;
    return true;
}

} // namespace detail

/// Unital associative subalgebra of Mat_n generated by the entries.
template <ExactField F>
AlgebraBasis<F> associative_closure(const GeneratorTuple<F>& t)
{
    auto seeds = t.entries();
    seeds.push_back(Matrix<F>::identity(t.field(), t.dim()));
    auto span = detail::close_under(ClosureKind::Associative, t.entries(), seeds, t.dim());
    if (!detail::closed_under_product(ClosureKind::Associative, span, t.dim()))
        throw std::logic_error("associative closure is not multiplication-closed");
    return {t.dim(), ClosureKind::Associative, std::move(span), true};
}

/// Lie subalgebra of gl_n generated by the entries.
template <ExactField F>
AlgebraBasis<F> lie_closure(const GeneratorTuple<F>& t)
{
    auto span = detail::close_under(ClosureKind::Lie, t.entries(), t.entries(), t.dim());
    if (!detail::closed_under_product(ClosureKind::Lie, span, t.dim()))
        throw std::logic_error("Lie closure is not bracket-closed");
    const bool has_id = span.contains(Matrix<F>::identity(t.field(), t.dim()).flatten());
    return {t.dim(), ClosureKind::Lie, std::move(span), has_id};
}

/// The algebra a generic tuple carries: unital associative span for kinds
/// group and assoc, the generated Lie algebra for kind lie.
template <ExactField F>
AlgebraBasis<F> algebra_closure(const GeneratorTuple<F>& t)
{
    return t.kind() == TupleKind::Lie ? lie_closure(t) : associative_closure(t);
}

enum class RadicalMethod {
    Auto,
    TraceForm,         ///< {x : tr(xy) = 0 for all y}; valid in characteristic 0 or p > n
    CompositionSeries, ///< annihilator of the composition factors of V; GF(p) with p^n <= 2^16
};

inline std::string to_string(RadicalMethod m)
{
    switch (m) {
    case RadicalMethod::Auto: return "auto";
    case RadicalMethod::TraceForm: return "trace-form";
    case RadicalMethod::CompositionSeries: return "composition-series";
    }
    return "?";
}

template <ExactField F>
struct RadicalResult {
    Subspace<F> radical; ///< inside Mat_n, flattened
    RadicalMethod method;
};

template <ExactField F>
bool trace_form_valid(const F& field, std::size_t n)
{
    const auto p = field.characteristic();
    return p == 0 || p > n;
}

namespace detail {

template <ExactField F>
Subspace<F> coefficient_image(const AlgebraBasis<F>& a, const std::vector<Vec<F>>& coeffs)
{
    const auto& k = a.span.field();
    std::vector<Vec<F>> out;
    for (const auto& c : coeffs) {
        Vec<F> v(a.n * a.n, k.zero());
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (k.is_zero(c[i])) continue;
            auto row = a.span.basis().row(i);
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] + c[i] * row[j];
        }
        out.push_back(std::move(v));
    }
    return Subspace<F>::span(k, a.n * a.n, out);
}

template <ExactField F>
Subspace<F> radical_trace_form(const AlgebraBasis<F>& a)
{
    const auto& k = a.span.field();
    const auto el = a.elements();
    Matrix<F> gram(k, el.size(), el.size());
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = 0; j < el.size(); ++j) gram(i, j) = (el[i] * el[j]).trace();
    return coefficient_image(a, nullspace(gram));
}

inline Subspace<PrimeField> radical_composition_series(const AlgebraBasis<PrimeField>& a)
{
    const auto& k = a.span.field();
    const auto el = a.elements();
    GeneratorTuple<PrimeField> action(k, a.n, TupleKind::Assoc, el);
    auto series = composition_series(action);
    // x = sum c_l el_l must map V_i into V_{i-1}
    LinearSystem<PrimeField> sys(k, el.size());
    for (std::size_t i = 1; i < series.size(); ++i) {
        auto ann = series[i - 1].annihilator();
        for (std::size_t b = 0; b < series[i].dim(); ++b) {
            auto v = series[i].basis().row(b);
            std::vector<Vec<PrimeField>> images;
            for (const auto& x : el) images.push_back(x.apply(v));
            for (std::size_t r = 0; r < ann.dim(); ++r) {
                Vec<PrimeField> coeffs(el.size(), k.zero());
                for (std::size_t l = 0; l < el.size(); ++l)
                    for (std::size_t j = 0; j < a.n; ++j) coeffs[l] = coeffs[l] + ann.basis()(r, j) * images[l][j];
                sys.add(std::move(coeffs), k.zero());
            }
        }
    }
    auto sol = sys.solve();
    std::vector<Vec<PrimeField>> basis;
    for (std::size_t i = 0; i < sol->direction.dim(); ++i) basis.push_back(sol->direction.basis_vector(i));
    return coefficient_image(a, basis);
}

} // namespace detail

/// Jacobson radical of a unital associative subalgebra of Mat_n.
///
/// Auto picks the trace form when characteristic is 0 or p > n, and the
/// composition-series method otherwise (GF(p) only, p^n <= 2^16);
/// RadicalUndecided beyond that bound.
template <ExactField F>
RadicalResult<F> radical(const AlgebraBasis<F>& a, RadicalMethod method = RadicalMethod::Auto)
{
    if (a.product != ClosureKind::Associative || !a.contains_identity)
        throw InvalidInput("radical: expects a unital associative algebra");
    const auto& k = a.span.field();
    if (method == RadicalMethod::Auto)
        method = trace_form_valid(k, a.n) ? RadicalMethod::TraceForm : RadicalMethod::CompositionSeries;
    if (method == RadicalMethod::TraceForm) {
        if (!trace_form_valid(k, a.n))
            throw RadicalUndecided("trace form does not compute the radical when p <= n");
        return {detail::radical_trace_form(a), method};
    }
    if constexpr (std::is_same_v<F, PrimeField>) {
        if (!within_enumeration_bound(k.characteristic(), a.n))
            throw RadicalUndecided("radical undecided: p <= n and " + k.spec().name() + "^" + std::to_string(a.n) +
                                   " exceeds the brute-force bound");
        return {detail::radical_composition_series(a), method};
    } else {
        throw RadicalUndecided("composition-series radical needs a finite field");
    }
}

template <ExactField F>
bool is_semisimple_module(const GeneratorTuple<F>& t, RadicalMethod method = RadicalMethod::Auto)
{
    return radical(associative_closure(t), method).radical.is_zero();
}

/// soc(V) = {v : J(A) v = 0}.
template <ExactField F>
Subspace<F> socle(const GeneratorTuple<F>& t)
{
    auto a = associative_closure(t);
    auto j = radical(a).radical;
    const auto& k = t.field();
    if (j.is_zero()) return Subspace<F>::full(k, t.dim());
    Matrix<F> stacked(k, 0, t.dim());
    for (std::size_t i = 0; i < j.dim(); ++i)
        stacked = stacked.stacked(Matrix<F>::unflatten(k, t.dim(), j.basis().row(i)));
    return Subspace<F>::span(k, t.dim(), nullspace(stacked));
}

namespace detail {

/// Positions (i, j) a Lie(H)-block matrix may occupy.
inline std::vector<std::pair<std::size_t, std::size_t>> block_positions(const HSpec& h)
{
    std::vector<std::pair<std::size_t, std::size_t>> pos;
    for (std::size_t i = 0; i < h.dim(); ++i)
        for (std::size_t j = 0; j < h.dim(); ++j)
            if (h.same_block(i, j)) pos.emplace_back(i, j);
    return pos;
}

} // namespace detail

/// {z supported on the blocks of H : z x = x z for every entry}, flattened in Mat_n.
///
/// C_H(t) is I plus the invertible part of this space when H fixes the
/// complement pointwise, so both have the same dimension.
template <ExactField F>
Subspace<F> centralizer_space(const HSpec& h, const GeneratorTuple<F>& t)
{
    if (h.dim() != t.dim()) throw AmbientMismatch("centralizer: HSpec and tuple dimensions differ");
    const auto& k = t.field();
    const auto n = t.dim();
    const auto pos = detail::block_positions(h);
    LinearSystem<F> sys(k, pos.size());
    for (const auto& x : t.entries()) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                // (z x - x z)(a, b)
                Vec<F> c(pos.size(), k.zero());
                bool any = false;
                for (std::size_t v = 0; v < pos.size(); ++v) {
                    auto [i, j] = pos[v];
                    if (i == a && !k.is_zero(x(j, b))) c[v] = c[v] + x(j, b), any = true;
                    if (j == b && !k.is_zero(x(a, i))) c[v] = c[v] - x(a, i), any = true;
                }
                if (any) sys.add(std::move(c), k.zero());
            }
    }
    auto sol = sys.solve();
    std::vector<Vec<F>> basis;
    for (std::size_t d = 0; d < sol->direction.dim(); ++d) {
        Vec<F> z(n * n, k.zero());
        auto coeff = sol->direction.basis().row(d);
        for (std::size_t v = 0; v < pos.size(); ++v) z[pos[v].first * n + pos[v].second] = coeff[v];
        basis.push_back(std::move(z));
    }
    return Subspace<F>::span(k, n * n, basis);
}

/// dim C_H(t). Determinant-one blocks are rejected: in characteristic p the
/// Lie centralizer can be strictly larger than the group centralizer.
template <ExactField F>
std::size_t centralizer_dim(const HSpec& h, const GeneratorTuple<F>& t)
{
    if (h.has_det_one()) throw UnsupportedHSpec("centralizer_dim: determinant-one blocks are not supported");
    return centralizer_space(h, t).dim();
}

/// A t-stable W' with V = w ⊕ W', must_contain ⊆ W' ⊆ within, or nullopt.
///
/// Solved as a t-equivariant projection π onto w: π x_i = x_i π, π|_w = id,
/// im π ⊆ w, π(must_contain) = 0, im(id - π) ⊆ within. Then W' = ker π.
template <ExactField F>
std::optional<Subspace<F>> equivariant_complement(const GeneratorTuple<F>& t, const Subspace<F>& w,
                                                  const Subspace<F>& must_contain, const Subspace<F>& within)
{
    const auto n = t.dim();
    if (w.ambient_dim() != n || must_contain.ambient_dim() != n || within.ambient_dim() != n)
        throw AmbientMismatch("equivariant_complement: ambient dimension mismatch");
    if (!is_stable(t, w)) throw NotStable("equivariant_complement: w is not stable under the tuple");
    const auto& k = t.field();
    LinearSystem<F> sys(k, n * n);
    auto var = [n](std::size_t i, std::size_t j) { return i * n + j; };
    for (const auto& x : t.entries())
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Vec<F> c(n * n, k.zero());
                for (std::size_t m = 0; m < n; ++m) {
                    c[var(a, m)] = c[var(a, m)] + x(m, b);
                    c[var(m, b)] = c[var(m, b)] - x(a, m);
                }
                sys.add(std::move(c), k.zero());
            }
    for (std::size_t r = 0; r < w.dim(); ++r) {
        auto v = w.basis().row(r);
        for (std::size_t a = 0; a < n; ++a) {
            Vec<F> c(n * n, k.zero());
            for (std::size_t j = 0; j < n; ++j) c[var(a, j)] = v[j];
            sys.add(std::move(c), v[a]);
        }
    }
    auto ann_w = w.annihilator();
    for (std::size_t r = 0; r < ann_w.dim(); ++r)
        for (std::size_t b = 0; b < n; ++b) {
            Vec<F> c(n * n, k.zero());
            for (std::size_t a = 0; a < n; ++a) c[var(a, b)] = ann_w.basis()(r, a);
            sys.add(std::move(c), k.zero());
        }
    for (std::size_t r = 0; r < must_contain.dim(); ++r) {
        auto v = must_contain.basis().row(r);
        for (std::size_t a = 0; a < n; ++a) {
            Vec<F> c(n * n, k.zero());
            for (std::size_t j = 0; j < n; ++j) c[var(a, j)] = v[j];
            sys.add(std::move(c), k.zero());
        }
    }
    auto ann_within = within.annihilator();
    for (std::size_t r = 0; r < ann_within.dim(); ++r)
        for (std::size_t b = 0; b < n; ++b) {
            Vec<F> c(n * n, k.zero());
            for (std::size_t a = 0; a < n; ++a) c[var(a, b)] = ann_within.basis()(r, a);
            sys.add(std::move(c), ann_within.basis()(r, b));
        }
    auto sol = sys.solve();
    if (!sol) return std::nullopt;
    auto pi = Matrix<F>::unflatten(k, n, sol->witness);
    return Subspace<F>::span(k, n, nullspace(pi));
}

} // namespace relcr
