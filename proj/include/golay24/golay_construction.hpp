// Builds the natural subsets of the 24-label set: to each parallelogram
// label the 8-element subset reached by multiplication by 3, sigma, kappa,
// and multiplication by 4; to each hexagon label the analogue through
// multiplication by 4, delta, and kappa; plus the two 12-element subsets
// R6 and R12 coming from the ideal-triangle split of the parallelogram.
// Stacking twelve of these bit strings in a fixed order yields the 12x24
// generator matrix of the binary Golay code.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "golay24/bitstring24.hpp"

namespace golay24 {

/// Provenance tag of a subset: one of the S_i, or R6, or R12.
struct SubsetTag {
    enum class Kind : std::uint8_t { S, R6, R12 };
    Kind kind = Kind::S;
    int index = 0;  // the label i for S_i; unused for R6/R12

    std::string to_string() const;

    friend bool operator==(const SubsetTag&, const SubsetTag&) = default;
};

/// A subset of the label set {1..24} with its provenance. S-subsets have 8
/// members, R6 and R12 have 12.
struct TriangleSubset {
    std::vector<int> members;  // sorted ascending
    SubsetTag source;

    BitString24 bits() const;

    friend bool operator==(const TriangleSubset&, const TriangleSubset&) = default;
};

/// Subset attached to a parallelogram label i in 1..12:
/// { i, 3i, sigma(i), 3 sigma(i), kappa(i), 4∘kappa(i), sigma(kappa(i)),
///   4∘sigma(kappa(i)) } where 3 acts by mult3 and 4∘ by mult4.
/// Throws std::out_of_range outside 1..12.
TriangleSubset subset_for_quad(int i);

/// Subset attached to a hexagon label j in 13..24:
/// { j, 4∘j, delta(j), 4∘delta(j), kappa(j), 3 kappa(j), delta(kappa(j)),
///   3 delta(kappa(j)) }. Throws std::out_of_range outside 13..24.
TriangleSubset subset_for_hex(int j);

/// R6 = C1 ∪ kappa(C4) ∪ kappa(C2) ∪ C7: the composite triangles of one
/// ideal half of the parallelogram together with the kappa-images of the
/// other half.
TriangleSubset r6();

/// R12 = kappa(C1) ∪ C4 ∪ C2 ∪ kappa(C7): the complementary choice.
TriangleSubset r12();

/// The 12 generator rows in their fixed order:
/// S1, S2, S3, S4, S5, R6, S13, S15, S16, S17, S19, R12.
class GeneratorMatrix {
public:
    explicit GeneratorMatrix(const std::array<BitString24, 12>& rows) : rows_(rows) {}

    /// Row i in 1..12; throws std::out_of_range otherwise.
    const BitString24& row(int i) const;

    const std::array<BitString24, 12>& rows() const { return rows_; }

    friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

private:
    std::array<BitString24, 12> rows_;
};

GeneratorMatrix generating_family();

}  // namespace golay24
