#pragma once

// Cocharacters λ of H written as g·diag(a^{d_1}, ..., a^{d_n})·g^{-1}, with
// the parabolic P_λ, Levi L_λ, unipotent radical R_u(P_λ) and the limit map
// c_λ they induce on GL_n, gl_n and Mat_n.
//
// In the diagonal frame, conjugation by λ(a) scales entry (i, j) by
// a^{d_i - d_j}. So x ∈ P_λ iff every nonzero entry has d_i >= d_j, and c_λ
// keeps the weight-zero entries.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "relcr/generator_tuple.hpp"
#include "relcr/hspec.hpp"
#include "relcr/min_norm.hpp"

namespace relcr {

enum class MembershipClass { InRu, InLevi, InPOnly, NotInP };

inline std::string to_string(MembershipClass c)
{
    switch (c) {
    case MembershipClass::InRu: return "InRu";
    case MembershipClass::InLevi: return "InLevi";
    case MembershipClass::InPOnly: return "InPOnly";
    case MembershipClass::NotInP: return "NotInP";
    }
    return "?";
}

template <ExactField F>
class WeightedCocharacter {
public:
    /// Unvalidated; use make_cocharacter to check membership in Y(H).
    explicit WeightedCocharacter(std::vector<std::int64_t> weights, std::optional<Matrix<F>> conjugator = std::nullopt)
        : weights_(std::move(weights)), conj_(std::move(conjugator))
    {
        if (conj_) {
            auto inv = inverse(*conj_);
            if (!inv) throw NotInH("conjugator is not invertible");
            conj_inv_ = std::move(*inv);
        }
    }

    const std::vector<std::int64_t>& weights() const noexcept { return weights_; }
    const std::optional<Matrix<F>>& conjugator() const noexcept { return conj_; }
    std::size_t dim() const noexcept { return weights_.size(); }

    /// d_i - d_j: the exponent of a scaling entry (i, j) in the diagonal frame.
    std::int64_t weight(std::size_t i, std::size_t j) const { return weights_[i] - weights_[j]; }

    bool is_zero() const
    {
        return std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 0; });
    }

    /// g^{-1} x g.
    Matrix<F> to_frame(const Matrix<F>& x) const { return conj_ ? (*conj_inv_) * x * (*conj_) : x; }
    /// g y g^{-1}.
    Matrix<F> from_frame(const Matrix<F>& y) const { return conj_ ? (*conj_) * y * (*conj_inv_) : y; }

    /// Coordinate classes ordered from the highest weight down; this preorder
    /// determines P_λ.
    std::vector<std::vector<std::size_t>> preorder() const
    {
        std::vector<std::int64_t> levels(weights_);
        std::sort(levels.begin(), levels.end(), std::greater<>());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        std::vector<std::vector<std::size_t>> classes(levels.size());
        for (std::size_t i = 0; i < weights_.size(); ++i) {
            auto pos = std::find(levels.begin(), levels.end(), weights_[i]) - levels.begin();
            classes[static_cast<std::size_t>(pos)].push_back(i);
        }
        return classes;
    }

    std::string describe() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
        s += ")";
        if (conj_) s += " conjugator " + conj_->to_string();
        return s;
    }

    friend bool operator==(const WeightedCocharacter& a, const WeightedCocharacter& b)
    {
        return a.weights_ == b.weights_ && a.conj_ == b.conj_;
    }

private:
    std::vector<std::int64_t> weights_;
    std::optional<Matrix<F>> conj_;
    std::optional<Matrix<F>> conj_inv_;
};

/// Throws NotInH unless g lies in H: block pattern of H, identity on the
/// fixed complement, determinant one on det-one blocks.
template <ExactField F>
void require_in_h(const HSpec& h, const Matrix<F>& g)
{
    const auto n = h.dim();
    const auto& k = g.field();
    if (g.rows() != n || g.cols() != n) throw NotInH("conjugator has the wrong size");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (h.same_block(i, j)) continue;
            const auto expected = (i == j) ? k.one() : k.zero();
            if (g(i, j) != expected)
                throw NotInH("conjugator entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                             ") violates the block pattern of H");
        }
    if (!inverse(g)) throw NotInH("conjugator is not invertible");
    for (const auto& b : h.blocks()) {
        if (!b.det_one) continue;
        Matrix<F> sub(k, b.coords.size(), b.coords.size());
        for (std::size_t i = 0; i < b.coords.size(); ++i)
            for (std::size_t j = 0; j < b.coords.size(); ++j) sub(i, j) = g(b.coords[i], b.coords[j]);
        if (determinant(sub) != k.one()) throw NotInH("conjugator has determinant != 1 on a det-one block");
    }
}

/// Validated cocharacter of H. NotInH names the violated constraint.
template <ExactField F>
WeightedCocharacter<F> make_cocharacter(const HSpec& h, std::vector<std::int64_t> weights,
                                        std::optional<Matrix<F>> conjugator = std::nullopt)
{
    if (weights.size() != h.dim())
        throw NotInH("weight vector has length " + std::to_string(weights.size()) + ", expected " +
                     std::to_string(h.dim()));
    for (auto i : h.complement())
        if (weights[i] != 0)
            throw NotInH("coordinate " + std::to_string(i + 1) + " is fixed by H but has weight " +
                         std::to_string(weights[i]));
    for (const auto& b : h.blocks()) {
        if (!b.det_one) continue;
        std::int64_t s = 0;
        for (auto i : b.coords) s += weights[i];
        if (s != 0) throw NotInH("weights on a det-one block sum to " + std::to_string(s) + ", expected 0");
    }
    if (conjugator) require_in_h(h, *conjugator);
    return WeightedCocharacter<F>(std::move(weights), std::move(conjugator));
}

template <ExactField F>
MembershipClass classify_membership(const WeightedCocharacter<F>& lambda, const Matrix<F>& x, TupleKind kind)
{
    const auto y = lambda.to_frame(x);
    const auto& k = y.field();
    const auto n = y.rows();
    bool levi = true, ru = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto w = lambda.weight(i, j);
            const bool nz = !k.is_zero(y(i, j));
            if (nz && w < 0) return MembershipClass::NotInP;
            if (nz && w != 0) levi = false;
            // R_u: x - I (group) or x itself is supported on positive weights
            auto centered = (kind == TupleKind::Group && i == j) ? y(i, j) - k.one() : y(i, j);
            if (w <= 0 && !k.is_zero(centered)) ru = false;
        }
    if (levi) return MembershipClass::InLevi;
    if (ru) return MembershipClass::InRu;
    return MembershipClass::InPOnly;
}

/// c_λ on one matrix already known to lie in P_λ.
template <ExactField F>
Matrix<F> limit_of(const WeightedCocharacter<F>& lambda, const Matrix<F>& x)
{
    auto y = lambda.to_frame(x);
    const auto& k = y.field();
    for (std::size_t i = 0; i < y.rows(); ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (lambda.weight(i, j) > 0) y(i, j) = k.zero();
    return lambda.from_frame(y);
}

/// c_λ(t), entrywise. NotInP names the first entry outside P_λ.
template <ExactField F>
GeneratorTuple<F> apply_limit(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t)
{
    std::vector<Matrix<F>> out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (classify_membership(lambda, t[i], t.kind()) == MembershipClass::NotInP)
            throw NotInP("entry " + std::to_string(i) + " is not in P_lambda for lambda = " + lambda.describe());
        out.push_back(limit_of(lambda, t[i]));
    }
    return t.with_entries(std::move(out));
}

template <ExactField F>
bool tuple_in_parabolic(const WeightedCocharacter<F>& lambda, const GeneratorTuple<F>& t)
{
    return std::all_of(t.entries().begin(), t.entries().end(), [&](const Matrix<F>& x) {
        return classify_membership(lambda, x, t.kind()) != MembershipClass::NotInP;
    });
}

namespace detail {

/// One integer weight vector realising the given ranking of "units" (ranks
/// 0 = highest), subject to the HSpec constraints; nullopt if none exists.
/// Prefers consecutive levels; falls back to the exact minimum-norm point.
inline std::optional<std::vector<std::int64_t>> realise_ranking(const HSpec& h,
                                                                const std::vector<std::vector<std::size_t>>& classes,
                                                                std::optional<std::size_t> pinned_class)
{
    const auto n = h.dim();
    const auto k = static_cast<std::int64_t>(classes.size());
    std::vector<std::int64_t> base(n);
    for (std::size_t r = 0; r < classes.size(); ++r)
        for (auto i : classes[r]) base[i] = k - 1 - static_cast<std::int64_t>(r);
    auto satisfies = [&](const std::vector<std::int64_t>& w) {
        for (auto i : h.complement())
            if (w[i] != 0) return false;
        for (const auto& b : h.blocks()) {
            if (!b.det_one) continue;
            std::int64_t s = 0;
            for (auto i : b.coords) s += w[i];
            if (s != 0) return false;
        }
        return true;
    };
    std::optional<std::int64_t> offset;
    if (pinned_class) {
        offset = -(k - 1 - static_cast<std::int64_t>(*pinned_class));
    } else if (h.has_det_one()) {
        for (const auto& b : h.blocks()) {
            if (!b.det_one) continue;
            std::int64_t s = 0;
            for (auto i : b.coords) s += base[i];
            const auto sz = static_cast<std::int64_t>(b.coords.size());
            if (s % sz == 0) offset = -s / sz;
            break;
        }
    } else {
        offset = 0;
    }
    if (offset) {
        auto w = base;
        for (auto& x : w) x += *offset;
        if (satisfies(w)) return w;
    }
    WeightConstraints c;
    c.n = n;
    auto unit_row = [n](std::size_t i, std::size_t j) {
        std::vector<std::int64_t> r(n, 0);
        r[i] += 1;
        r[j] -= 1;
        return r;
    };
    for (std::size_t r = 0; r + 1 < classes.size(); ++r) c.at_least_one.push_back(unit_row(classes[r][0], classes[r + 1][0]));
    for (const auto& cls : classes)
        for (std::size_t m = 1; m < cls.size(); ++m) c.equal_zero.push_back(unit_row(cls[m], cls[0]));
    for (auto i : h.complement()) {
        std::vector<std::int64_t> r(n, 0);
        r[i] = 1;
        c.equal_zero.push_back(r);
    }
    for (const auto& b : h.blocks()) {
        if (!b.det_one) continue;
        std::vector<std::int64_t> r(n, 0);
        for (auto i : b.coords) r[i] = 1;
        c.equal_zero.push_back(r);
    }
    auto d = min_norm_point(c);
    if (!d) return std::nullopt;
    return primitive_integer_vector(*d);
}

} // namespace detail

/// One representative cocharacter per proper parabolic P_λ of G = GL_n with
/// λ diagonal in H, for each conjugator in the pool (default {identity}).
///
/// Fixed coordinates form one unit pinned at level 0; every other coordinate
/// is a unit. Each weak ordering of the units with at least two classes is
/// realised by consecutive integer levels when the det-one sums allow,
/// otherwise by the primitive minimum-norm solution; orderings with no
/// solution are skipped. Within one conjugator the output is sorted
/// lexicographically by weight vector.
template <ExactField F>
std::vector<WeightedCocharacter<F>> enumerate_destabilizer_candidates(const HSpec& h,
                                                                      const std::vector<Matrix<F>>& pool)
{
    const auto n = h.dim();
    // units: free coordinates, then (optionally) the pinned complement
    std::vector<std::vector<std::size_t>> units;
    for (std::size_t i = 0; i < n; ++i)
        if (h.block_of(i)) units.push_back({i});
    std::optional<std::size_t> pinned_unit;
    if (auto comp = h.complement(); !comp.empty()) {
        pinned_unit = units.size();
        units.push_back(comp);
    }
    const std::size_t m = units.size();
    std::vector<std::vector<std::int64_t>> reps;
    std::vector<std::size_t> rank(m, 0);
    for (;;) {
        const std::size_t k = m ? *std::max_element(rank.begin(), rank.end()) + 1 : 0;
        std::vector<bool> used(k, false);
        for (auto r : rank) used[r] = true;
        const bool surjective = std::all_of(used.begin(), used.end(), [](bool b) { return b; });
        if (surjective && k >= 2) {
            std::vector<std::vector<std::size_t>> classes(k);
            for (std::size_t u = 0; u < m; ++u)
                for (auto i : units[u]) classes[rank[u]].push_back(i);
            for (auto& c : classes) std::sort(c.begin(), c.end());
            std::optional<std::size_t> pinned_class;
            if (pinned_unit) pinned_class = rank[*pinned_unit];
            if (auto w = detail::realise_ranking(h, classes, pinned_class)) reps.push_back(std::move(*w));
        }
        std::size_t u = 0;
        while (u < m && ++rank[u] == m) rank[u++] = 0;
        if (u == m) break;
    }
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());

    std::vector<WeightedCocharacter<F>> out;
    std::vector<std::optional<Matrix<F>>> conjugators;
    if (pool.empty()) conjugators.push_back(std::nullopt);
    for (const auto& g : pool) conjugators.push_back(g.is_identity() ? std::nullopt : std::optional<Matrix<F>>(g));
    for (const auto& g : conjugators)
        for (const auto& w : reps) out.push_back(make_cocharacter<F>(h, w, g));
    return out;
}

} // namespace relcr
