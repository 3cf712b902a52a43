// The three fixed-point-free involutions on the 24 triangle labels induced
// by the billiard dynamics: sigma (reflection in the longer perpendicular,
// natural to the parallelogram block 1..12), delta (reflection in the
// shorter perpendicular, natural to the hexagon block 13..24), and kappa
// (the block-exchanging correspondence between the two decompositions).
// They are fixed tables, consumed as data.

#pragma once

#include <array>
#include <cstdint>

#include "golay24/report.hpp"

namespace golay24 {

/// A bijection of the label set {1,...,24}.
class Permutation24 {
public:
    constexpr explicit Permutation24(const std::array<std::uint8_t, 24>& images)
        : images_(images) {}

    /// Image of a 1-based label; throws std::out_of_range outside 1..24.
    int operator()(int label) const;

    constexpr const std::array<std::uint8_t, 24>& images() const { return images_; }

    /// Composition this∘other (apply other first).
    Permutation24 after(const Permutation24& other) const;

    constexpr bool is_bijection() const {
        std::array<bool, 24> seen{};
        for (auto v : images_) {
            if (v < 1 || v > 24 || seen[v - 1]) return false;
            seen[v - 1] = true;
        }
        return true;
    }

    constexpr bool is_involution() const {
        for (int i = 0; i < 24; ++i)
            if (images_[images_[i] - 1] != i + 1) return false;
        return true;
    }

    constexpr bool has_fixed_point() const {
        for (int i = 0; i < 24; ++i)
            if (images_[i] == i + 1) return true;
        return false;
    }

    /// True iff each block {1..12}, {13..24} maps into itself.
    constexpr bool preserves_blocks() const {
        for (int i = 0; i < 24; ++i)
            if ((i < 12) != (images_[i] <= 12)) return false;
        return true;
    }

    /// True iff the two blocks are exchanged.
    constexpr bool swaps_blocks() const {
        for (int i = 0; i < 24; ++i)
            if ((i < 12) == (images_[i] <= 12)) return false;
        return true;
    }

    friend constexpr bool operator==(const Permutation24&, const Permutation24&) = default;

private:
    std::array<std::uint8_t, 24> images_;  // images_[k-1] = image of label k
};

/// Reflection of the euclidean composite triangles in their longer
/// perpendicular; preserves both blocks and exchanges sign classes.
const Permutation24& sigma();

/// Reflection in the shorter perpendicular; preserves both blocks and
/// exchanges sign classes.
const Permutation24& delta();

/// The parallelogram <-> hexagon correspondence; swaps the blocks and
/// preserves sign classes.
const Permutation24& kappa();

/// Structural checks on the three tables: involutive without fixed points,
/// block behavior, commutation kappa∘sigma = sigma∘kappa and
/// kappa∘delta = delta∘kappa, and sign-class behavior on all 24 labels.
Report verify_billiard_maps();

}  // namespace golay24
