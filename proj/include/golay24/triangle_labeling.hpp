// Labeled triangle decompositions of the two fundamental domains of the
// commutator subgroup: the quadrilateral (-1,0,1,infinity), whose 12
// triangles carry multiplication by 3 mod 13, and the hexagonal domain,
// whose 12 triangles (labels 13..24) carry multiplication by 4 mod 13.
// Labels are 1-based throughout; residues mod 13 do the bookkeeping.

#pragma once

#include <array>

#include "golay24/modular_group.hpp"
#include "golay24/report.hpp"

namespace golay24 {

/// Which of the two base triangles of the standard modular fundamental
/// domain a triangle is a translate of.
enum class BaseParity : std::uint8_t { Delta1, Delta2 };

/// Positive = quadratic residue mod 13 {1,3,4,9,10,12}; the positive
/// labels are exactly the triangles mapped to the upper half-plane by the
/// modular J-invariant.
enum class SignClass : std::uint8_t { Positive, Negative };

/// One labeled triangle of the quadrilateral decomposition: the group
/// element carrying the base triangle onto it, the base parity, and the
/// 1-based label. Equal iff rep and parity are equal.
struct Triangle {
    GroupElement rep;
    BaseParity parity = BaseParity::Delta1;
    int label = 0;
};

// Cyclotomic cosets mod 13 over F3 (orbits of multiplication by 3), in the
// conventional listing order: C1 and C4 partition the residues, C2 and C7
// the nonresidues.
inline constexpr std::array<int, 3> kCosetC1{1, 3, 9};
inline constexpr std::array<int, 3> kCosetC4{4, 12, 10};
inline constexpr std::array<int, 3> kCosetC2{2, 6, 5};
inline constexpr std::array<int, 3> kCosetC7{8, 11, 7};

/// The six nonzero quadratic residues mod 13.
inline constexpr std::array<int, 6> kResiduesMod13{1, 3, 4, 9, 10, 12};

bool is_quadratic_residue_mod13(int r);

/// (3*i) mod 13 on quadrilateral labels 1..12. Throws std::out_of_range
/// outside that range.
int mult3(int i);

/// [4*(j-12) mod 13] + 12 on hexagon labels 13..24. Throws
/// std::out_of_range outside that range.
int mult4(int j);

/// Sign class of any label in 1..24 (hexagon labels are reduced by 12).
SignClass sign_class(int k);

/// The 12 labeled triangles of the quadrilateral domain.
class QuadrilateralLabeling {
public:
    const Triangle& at(int label) const;  // label in 1..12
    const std::array<Triangle, 12>& triangles() const { return triangles_; }

private:
    friend QuadrilateralLabeling build_quadrilateral_labeling();
    std::array<Triangle, 12> triangles_{};
};

/// Builds the labeling by walking the two alternating T/S sequences:
///   labels 1 -> 4 -> 3 -> 12 -> 9 -> 10 from the Delta1 base (residues),
///   labels 2 -> 8 -> 6 -> 11 -> 5 -> 7 from the Delta2 base (nonresidues).
/// Both cycles must close via (ST)^3 = (TS)^3 = I; a closure failure throws
/// std::logic_error since it can only mean broken matrix arithmetic.
QuadrilateralLabeling build_quadrilateral_labeling();

/// The hexagon triangles are abstract slots: no group element is attached,
/// only the T-action (multiplication by 4) and the induced two 6-orbits.
class HexagonLabeling {
public:
    int t_image(int label) const;                 // = mult4(label)
    std::array<int, 6> orbit_of(int label) const;  // T-orbit starting at label

    const std::array<int, 6>& positive_orbit() const { return positive_orbit_; }
    const std::array<int, 6>& negative_orbit() const { return negative_orbit_; }

private:
    friend HexagonLabeling build_hexagon_labeling();
    std::array<int, 6> positive_orbit_{};  // orbit of 13
    std::array<int, 6> negative_orbit_{};  // orbit of 14
};

HexagonLabeling build_hexagon_labeling();

/// Checks the labeling against the two coset-representative sets: the
/// Delta1-base reps must equal {I, T, ST, TST, (ST)^2, T(ST)^2} and the
/// Delta2-base reps {I, S, TS, STS, (TS)^2, S(TS)^2} as sets in PSL(2,Z),
/// with all 12 (rep, parity) pairs distinct.
Report verify_coset_representatives(const QuadrilateralLabeling& labeling);

}  // namespace golay24
