#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "relcr/errors.hpp"

namespace relcr {

enum class HKind { FullGL, GLU, StandardLevi };

struct HBlock {
    std::vector<std::size_t> coords; // zero-based, sorted
    bool det_one = false;
};

/// The reductive subgroup H of GL_n, described by coordinate blocks.
///
/// H acts on each block as GL (or SL when det_one is set) and as the
/// identity on every coordinate outside all blocks (the fixed complement).
/// FullGL is one block covering everything; GLU is one GL block U with the
/// remaining coordinates as the complement.
class HSpec {
public:
    static HSpec full_gl(std::size_t n)
    {
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i) all[i] = i;
        return HSpec(n, HKind::FullGL, {HBlock{all, false}});
    }

    static HSpec glu(std::size_t n, std::vector<std::size_t> u_coords)
    {
        return HSpec(n, HKind::GLU, {HBlock{std::move(u_coords), false}});
    }

    static HSpec standard_levi(std::size_t n, std::vector<HBlock> blocks)
    {
        return HSpec(n, HKind::StandardLevi, std::move(blocks));
    }

    std::size_t dim() const noexcept { return n_; }
    HKind kind() const noexcept { return kind_; }
    const std::vector<HBlock>& blocks() const noexcept { return blocks_; }

    /// Coordinates fixed pointwise by H.
    std::vector<std::size_t> complement() const
    {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < n_; ++i)
            if (!block_of_[i]) out.push_back(i);
        return out;
    }

    std::optional<std::size_t> block_of(std::size_t coord) const { return block_of_.at(coord); }
    bool same_block(std::size_t i, std::size_t j) const
    {
        return block_of_.at(i) && block_of_.at(i) == block_of_.at(j);
    }

    bool has_det_one() const noexcept
    {
        return std::any_of(blocks_.begin(), blocks_.end(), [](const HBlock& b) { return b.det_one; });
    }

    /// U coordinates when H = GL(U) with U a coordinate subspace (FullGL, GLU,
    /// or a StandardLevi with a single non-det-one block).
    std::optional<std::vector<std::size_t>> glu_coords() const
    {
        if (blocks_.size() == 1 && !blocks_[0].det_one) return blocks_[0].coords;
        return std::nullopt;
    }

    /// Same blocks with every det-one flag dropped (a GL-block superset of H
    /// sharing its maximal torus directions and unipotent radicals).
    HSpec gl_superset() const
    {
        auto b = blocks_;
        for (auto& x : b) x.det_one = false;
        return HSpec(n_, kind_, std::move(b));
    }

    /// dim Lie(H).
    std::size_t lie_dim() const noexcept
    {
        std::size_t d = 0;
        for (const auto& b : blocks_) d += b.coords.size() * b.coords.size() - (b.det_one ? 1 : 0);
        return d;
    }

    std::string describe() const
    {
        auto list = [](const std::vector<std::size_t>& c) {
            std::string s = "{";
            for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i] + 1);
            return s + "}";
        };
        switch (kind_) {
        case HKind::FullGL: return "FullGL(" + std::to_string(n_) + ")";
        case HKind::GLU: return "GLU U=" + list(blocks_[0].coords) + " complement=" + list(complement());
        case HKind::StandardLevi: {
            std::string s = "StandardLevi";
            for (const auto& b : blocks_) s += " " + std::string(b.det_one ? "SL" : "GL") + list(b.coords);
            if (!complement().empty()) s += " fixed=" + list(complement());
            return s;
        }
        }
        return {};
    }

    friend bool operator==(const HSpec& a, const HSpec& b)
    {
        if (a.n_ != b.n_ || a.kind_ != b.kind_ || a.blocks_.size() != b.blocks_.size()) return false;
        for (std::size_t i = 0; i < a.blocks_.size(); ++i)
            if (a.blocks_[i].coords != b.blocks_[i].coords || a.blocks_[i].det_one != b.blocks_[i].det_one)
                return false;
        return true;
    }

private:
    HSpec(std::size_t n, HKind kind, std::vector<HBlock> blocks)
        : n_(n), kind_(kind), blocks_(std::move(blocks)), block_of_(n)
    {
        if (n == 0) throw InvalidInput("HSpec: dimension must be positive");
        if (blocks_.empty()) throw InvalidInput("HSpec: at least one block is required");
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            auto& c = blocks_[b].coords;
            if (c.empty()) throw InvalidInput("HSpec: empty block");
            std::sort(c.begin(), c.end());
            for (auto i : c) {
                if (i >= n) throw InvalidInput("HSpec: coordinate " + std::to_string(i + 1) + " out of range");
                if (block_of_[i]) throw InvalidInput("HSpec: coordinate " + std::to_string(i + 1) + " in two blocks");
                block_of_[i] = b;
            }
        }
    }

    std::size_t n_;
    HKind kind_;
    std::vector<HBlock> blocks_;
    std::vector<std::optional<std::size_t>> block_of_;
};

} // namespace relcr
