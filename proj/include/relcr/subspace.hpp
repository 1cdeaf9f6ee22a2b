#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "relcr/matrix.hpp"

namespace relcr {

/// A subspace of F^n, stored as its reduced row-echelon basis.
///
/// The representation is canonical: two equal subspaces have identical
/// basis matrices, so equality is representation equality.
template <ExactField F>
class Subspace {
public:
    using value_type = typename F::value_type;

    /// The zero subspace of F^n.
    Subspace(F field, std::size_t n) : basis_(std::move(field), 0, n) {}

    /// Row space of `generators` (any spanning set, dependent rows allowed).
    explicit Subspace(const Matrix<F>& generators) : basis_(generators.field(), 0, generators.cols())
    {
        auto [r, rk, piv] = rref_rank(generators);
        Matrix<F> b(generators.field(), rk, generators.cols());
        for (std::size_t i = 0; i < rk; ++i)
            for (std::size_t j = 0; j < generators.cols(); ++j) b(i, j) = r(i, j);
        basis_ = std::move(b);
        pivots_ = std::move(piv);
    }

    static Subspace full(const F& field, std::size_t n) { return Subspace(Matrix<F>::identity(field, n)); }

    static Subspace span(const F& field, std::size_t n, const std::vector<Vec<F>>& vectors)
    {
        return Subspace(Matrix<F>::from_rows(field, n, vectors));
    }

    /// Span of the standard basis vectors e_i, i in `coords` (zero-based).
    static Subspace coordinate(const F& field, std::size_t n, const std::vector<std::size_t>& coords)
    {
        Matrix<F> m(field, coords.size(), n);
        for (std::size_t i = 0; i < coords.size(); ++i) m(i, coords[i]) = field.one();
        return Subspace(m);
    }

    const F& field() const noexcept { return basis_.field(); }
    std::size_t ambient_dim() const noexcept { return basis_.cols(); }
    std::size_t dim() const noexcept { return basis_.rows(); }
    bool is_zero() const noexcept { return dim() == 0; }
    bool is_full() const noexcept { return dim() == ambient_dim(); }
    const Matrix<F>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    Vec<F> basis_vector(std::size_t i) const { return basis_.row_vec(i); }

    /// Coordinates of v in the echelon basis, or nullopt if v is not in the subspace.
    std::optional<Vec<F>> coordinates(std::span<const value_type> v) const
    {
        require_ambient(v.size());
        Vec<F> c(dim(), field().zero());
        Vec<F> rest(v.begin(), v.end());
        for (std::size_t i = 0; i < dim(); ++i) {
            c[i] = rest[pivots_[i]];
            if (field().is_zero(c[i])) continue;
            for (std::size_t j = 0; j < ambient_dim(); ++j) rest[j] = rest[j] - c[i] * basis_(i, j);
        }
        for (const auto& x : rest)
            if (!field().is_zero(x)) return std::nullopt;
        return c;
    }

    bool contains(std::span<const value_type> v) const { return coordinates(v).has_value(); }

    bool contains(const Subspace& other) const
    {
        require_ambient(other.ambient_dim());
        if (other.dim() > dim()) return false;
        for (std::size_t i = 0; i < other.dim(); ++i)
            if (!contains(other.basis_.row(i))) return false;
        return true;
    }

    /// {c : <c, w> = 0 for all w}, as a subspace of the dual (same coordinates).
    Subspace annihilator() const
    {
        auto ker = nullspace(basis_);
        return span(field(), ambient_dim(), ker);
    }

    /// Image under a linear map acting on column vectors.
    Subspace image(const Matrix<F>& x) const
    {
        if (x.cols() != ambient_dim()) throw AmbientMismatch("image: map does not act on this space");
        return Subspace(basis_ * x.transpose());
    }

    /// {v : x v in this subspace}.
    Subspace preimage(const Matrix<F>& x) const
    {
        if (x.rows() != ambient_dim()) throw AmbientMismatch("preimage: map does not land in this space");
        auto ann = annihilator();
        if (ann.dim() == 0) return full(field(), x.cols());
        return span(field(), x.cols(), nullspace(ann.basis() * x));
    }

    /// Stable under every matrix in `ops` (x W subset of W).
    template <class Range>
    bool is_stable_under(const Range& ops) const
    {
        for (const auto& x : ops)
            for (std::size_t i = 0; i < dim(); ++i)
                if (!contains(x.apply(basis_.row(i)))) return false;
        return true;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

    /// Canonical order: by dimension, then lexicographically on the echelon basis.
    friend std::strong_ordering canonical_compare(const Subspace& a, const Subspace& b)
    {
        if (auto c = a.dim() <=> b.dim(); c != 0) return c;
        if (auto c = a.ambient_dim() <=> b.ambient_dim(); c != 0) return c;
        const auto& ea = a.basis_.entries();
        const auto& eb = b.basis_.entries();
        for (std::size_t k = 0; k < ea.size(); ++k)
            if (auto c = a.field().compare(ea[k], eb[k]); c != 0) return c;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return basis_.to_string(); }

private:
    void require_ambient(std::size_t n) const
    {
        if (n != ambient_dim())
            throw AmbientMismatch("ambient dimension " + std::to_string(n) + " vs " + std::to_string(ambient_dim()));
    }

    Matrix<F> basis_;
    std::vector<std::size_t> pivots_;
};

template <ExactField F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("sum of subspaces in different ambient spaces");
    return Subspace<F>(a.basis().stacked(b.basis()));
}

/// Intersection as the kernel of the stacked annihilator system.
template <ExactField F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim())
        throw AmbientMismatch("intersection of subspaces in different ambient spaces");
    auto constraints = a.annihilator().basis().stacked(b.annihilator().basis());
    if (constraints.rows() == 0) return Subspace<F>::full(a.field(), a.ambient_dim());
    return Subspace<F>::span(a.field(), a.ambient_dim(), nullspace(constraints));
}

template <ExactField F>
bool contains(const Subspace<F>& a, const Subspace<F>& b)
{
    return a.contains(b);
}

/// a + b = V and a ∩ b = 0.
template <ExactField F>
bool is_direct_complement(const Subspace<F>& a, const Subspace<F>& b)
{
    if (a.ambient_dim() != b.ambient_dim()) throw AmbientMismatch("complement test across ambient spaces");
    return a.dim() + b.dim() == a.ambient_dim() && sum(a, b).is_full();
}

/// A vector-space complement of `inner` inside `outer`, built from basis
/// vectors of `outer` in echelon order. Requires inner ⊆ outer.
template <ExactField F>
Subspace<F> complement_within(const Subspace<F>& inner, const Subspace<F>& outer)
{
    if (!outer.contains(inner)) throw InvalidInput("complement_within: inner is not contained in outer");
    Subspace<F> acc = inner;
    std::vector<Vec<F>> picked;
    for (std::size_t i = 0; i < outer.dim() && acc.dim() < outer.dim(); ++i) {
        auto v = outer.basis_vector(i);
        if (acc.contains(v)) continue;
        picked.push_back(v);
        acc = sum(acc, Subspace<F>::span(outer.field(), outer.ambient_dim(), {v}));
    }
    return Subspace<F>::span(outer.field(), outer.ambient_dim(), picked);
}

} // namespace relcr
