#pragma once

#include <string>
#include <vector>

#include "relcr/matrix.hpp"

namespace relcr {

/// What the tuple generates: a subgroup of GL_n, a Lie subalgebra of gl_n, or
/// an associative subalgebra of Mat_n.
enum class TupleKind { Group, Lie, Assoc };

inline std::string to_string(TupleKind k)
{
    switch (k) {
    case TupleKind::Group: return "group";
    case TupleKind::Lie: return "lie";
    case TupleKind::Assoc: return "assoc";
    }
    return "?";
}

/// A nonempty tuple of n×n matrices over one field.
template <ExactField F>
class GeneratorTuple {
public:
    GeneratorTuple(F field, std::size_t n, TupleKind kind, std::vector<Matrix<F>> entries)
        : field_(std::move(field)), n_(n), kind_(kind), entries_(std::move(entries))
    {
        if (n_ == 0) throw InvalidInput("generator tuple: dimension must be positive");
        if (entries_.empty()) throw InvalidInput("generator tuple: at least one entry is required");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& x = entries_[i];
            if (x.rows() != n_ || x.cols() != n_)
                throw InvalidInput("generator " + std::to_string(i) + " is not " + std::to_string(n_) + "x" +
                                   std::to_string(n_));
            if (kind_ == TupleKind::Group && !inverse(x))
                throw InvalidInput("generator " + std::to_string(i) + " is not invertible");
        }
    }

    const F& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return n_; }
    TupleKind kind() const noexcept { return kind_; }
    const std::vector<Matrix<F>>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const Matrix<F>& operator[](std::size_t i) const { return entries_[i]; }

    /// Same kind and field, new entries.
    GeneratorTuple with_entries(std::vector<Matrix<F>> e) const { return GeneratorTuple(field_, n_, kind_, std::move(e)); }

    /// Every entry is the identity (group) or zero (lie/assoc).
    bool is_trivial() const
    {
        for (const auto& x : entries_)
            if (kind_ == TupleKind::Group ? !x.is_identity() : !x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const GeneratorTuple& a, const GeneratorTuple& b)
    {
        return a.n_ == b.n_ && a.kind_ == b.kind_ && a.entries_ == b.entries_;
    }

private:
    F field_;
    std::size_t n_;
    TupleKind kind_;
    std::vector<Matrix<F>> entries_;
};

} // namespace relcr
