#pragma once

#include <optional>

#include "relcr/subspace.hpp"

namespace relcr {

/// Solution set of a linear system: witness + direction space.
template <ExactField F>
struct AffineSolution {
    Vec<F> witness;
    Subspace<F> direction;

    std::size_t dim() const noexcept { return direction.dim(); }
};

/// Solve A z = b over the whole space. nullopt means the system is infeasible.
/// The witness sets every free variable to zero, so it is deterministic.
template <ExactField F>
std::optional<AffineSolution<F>> affine_solve(const Matrix<F>& a, const Vec<F>& b)
{
    if (b.size() != a.rows()) throw AmbientMismatch("affine_solve: right-hand side length mismatch");
    const auto& k = a.field();
    const std::size_t n = a.cols();
    Matrix<F> aug(k, a.rows(), n + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    auto [r, rk, piv] = rref_rank(std::move(aug));
    if (rk > 0 && piv[rk - 1] == n) return std::nullopt;
    Vec<F> witness(n, k.zero());
    for (std::size_t i = 0; i < rk; ++i) witness[piv[i]] = r(i, n);
    return AffineSolution<F>{std::move(witness), Subspace<F>::span(k, n, nullspace(a))};
}

/// Solve A z = b for z restricted to the affine subspace offset + linear.
template <ExactField F>
std::optional<AffineSolution<F>> affine_solve(const Matrix<F>& a, const Vec<F>& b, const Vec<F>& offset,
                                              const Subspace<F>& linear)
{
    if (offset.size() != a.cols() || linear.ambient_dim() != a.cols())
        throw AmbientMismatch("affine_solve: ambient affine subspace has the wrong dimension");
    const auto& k = a.field();
    // z = offset + L^T y
    auto lt = linear.basis().transpose();
    auto reduced = a * lt;
    auto ao = a.apply(offset);
    Vec<F> rhs(b.size(), k.zero());
    for (std::size_t i = 0; i < b.size(); ++i) rhs[i] = b[i] - ao[i];
    Matrix<F> sys = reduced.cols() ? reduced : Matrix<F>(k, a.rows(), 0);
    std::optional<AffineSolution<F>> inner;
    if (sys.cols() == 0) {
        for (const auto& v : rhs)
            if (!k.is_zero(v)) return std::nullopt;
        inner = AffineSolution<F>{Vec<F>{}, Subspace<F>(k, 0)};
    } else {
        inner = affine_solve(sys, rhs);
        if (!inner) return std::nullopt;
    }
    Vec<F> witness = offset;
    auto shift = lt.cols() ? lt.apply(inner->witness) : Vec<F>(a.cols(), k.zero());
    for (std::size_t j = 0; j < witness.size(); ++j) witness[j] = witness[j] + shift[j];
    std::vector<Vec<F>> dir;
    for (std::size_t i = 0; i < inner->direction.dim(); ++i) dir.push_back(lt.apply(inner->direction.basis().row(i)));
    return AffineSolution<F>{std::move(witness), Subspace<F>::span(k, a.cols(), dir)};
}

/// Accumulates linear equations sum_j c_j z_j = rhs in a fixed number of unknowns.
template <ExactField F>
class LinearSystem {
public:
    LinearSystem(F field, std::size_t unknowns) : field_(std::move(field)), n_(unknowns) {}

    std::size_t unknowns() const noexcept { return n_; }
    std::size_t equations() const noexcept { return rows_.size(); }

    void add(Vec<F> coeffs, typename F::value_type rhs)
    {
        if (coeffs.size() != n_) throw AmbientMismatch("LinearSystem: coefficient length mismatch");
        rows_.push_back(std::move(coeffs));
        rhs_.push_back(std::move(rhs));
    }

    std::optional<AffineSolution<F>> solve() const
    {
        if (rows_.empty())
            return AffineSolution<F>{Vec<F>(n_, field_.zero()), Subspace<F>::full(field_, n_)};
        return affine_solve(Matrix<F>::from_rows(field_, n_, rows_), rhs_);
    }

private:
    F field_;
    std::size_t n_;
    std::vector<Vec<F>> rows_;
    Vec<F> rhs_;
};

} // namespace relcr
