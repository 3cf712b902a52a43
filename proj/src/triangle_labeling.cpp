#include "golay24/triangle_labeling.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace golay24 {

bool is_quadratic_residue_mod13(int r) {
    return std::find(kResiduesMod13.begin(), kResiduesMod13.end(), r) != kResiduesMod13.end();
}

int mult3(int i) {
    if (i < 1 || i > 12)
        throw std::out_of_range("mult3: label " + std::to_string(i) + " outside 1..12");
    return (3 * i) % 13;
}

int mult4(int j) {
    if (j < 13 || j > 24)
        throw std::out_of_range("mult4: label " + std::to_string(j) + " outside 13..24");
    return (4 * (j - 12)) % 13 + 12;
}

SignClass sign_class(int k) {
    if (k < 1 || k > 24)
        throw std::out_of_range("sign_class: label " + std::to_string(k) + " outside 1..24");
    int base = k <= 12 ? k : k - 12;
    return is_quadratic_residue_mod13(base) ? SignClass::Positive : SignClass::Negative;
}

const Triangle& QuadrilateralLabeling::at(int label) const {
    if (label < 1 || label > 12)
        throw std::out_of_range("QuadrilateralLabeling::at: label " + std::to_string(label) +
                                " outside 1..12");
    return triangles_[static_cast<std::size_t>(label - 1)];
}

namespace {

// Walks one alternating sequence: starting triangle `start` with rep I,
// applying `first` then `second` alternately through the label cycle, and
// requires the next step after the last label to return to the start.
void walk_sequence(std::array<Triangle, 12>& out, const std::array<int, 6>& labels,
                   BaseParity parity, const GroupElement& first, const GroupElement& second) {
    GroupElement rep;  // identity
    for (std::size_t k = 0; k < labels.size(); ++k) {
        out[static_cast<std::size_t>(labels[k] - 1)] = Triangle{rep, parity, labels[k]};
        const GroupElement& step = (k % 2 == 0) ? first : second;
        rep = compose(step, rep);
    }
    if (!rep.is_identity())
        throw std::logic_error("build_quadrilateral_labeling: sequence failed to close");
}

}  // namespace

QuadrilateralLabeling build_quadrilateral_labeling() {
    QuadrilateralLabeling labeling;
    const auto S = GroupElement::S();
    const auto T = GroupElement::T();
    // Residue cycle 1 -> 4 -> 3 -> 12 -> 9 -> 10 via T,S,T,S,T; closes with S
    // because (ST)^3 = I. Nonresidue cycle 2 -> 8 -> 6 -> 11 -> 5 -> 7 via
    // S,T,S,T,S; closes with T because (TS)^3 = I.
    walk_sequence(labeling.triangles_, {1, 4, 3, 12, 9, 10}, BaseParity::Delta1, T, S);
    walk_sequence(labeling.triangles_, {2, 8, 6, 11, 5, 7}, BaseParity::Delta2, S, T);
    return labeling;
}

int HexagonLabeling::t_image(int label) const { return mult4(label); }

std::array<int, 6> HexagonLabeling::orbit_of(int label) const {
    std::array<int, 6> orbit{};
    int cur = label;
    for (auto& slot : orbit) {
        slot = cur;
        cur = mult4(cur);
    }
    if (cur != label) throw std::logic_error("HexagonLabeling: T-orbit has length != 6");
    return orbit;
}

HexagonLabeling build_hexagon_labeling() {
    HexagonLabeling labeling;
    labeling.positive_orbit_ = labeling.orbit_of(13);
    labeling.negative_orbit_ = labeling.orbit_of(14);
    return labeling;
}

Report verify_coset_representatives(const QuadrilateralLabeling& labeling) {
    Report report;
    const auto S = GroupElement::S();
    const auto T = GroupElement::T();
    const auto ST = compose(S, T);
    const auto TS = compose(T, S);

    const std::set<GroupElement> expected_delta1 = {
        GroupElement::identity(), T, ST, compose(T, ST), compose(ST, ST),
        compose(T, compose(ST, ST))};
    const std::set<GroupElement> expected_delta2 = {
        GroupElement::identity(), S, TS, compose(S, TS), compose(TS, TS),
        compose(S, compose(TS, TS))};

    std::set<GroupElement> delta1_reps, delta2_reps;
    std::set<std::pair<GroupElement, BaseParity>> pairs;
    for (int label = 1; label <= 12; ++label) {
        const Triangle& t = labeling.at(label);
        (t.parity == BaseParity::Delta1 ? delta1_reps : delta2_reps).insert(t.rep);
        pairs.insert({t.rep, t.parity});
    }

    report.add("delta1-reps", "Delta1-base reps = {I, T, ST, TST, (ST)^2, T(ST)^2}",
               delta1_reps == expected_delta1);
    report.add("delta2-reps", "Delta2-base reps = {I, S, TS, STS, (TS)^2, S(TS)^2}",
               delta2_reps == expected_delta2);
    report.add("reps-distinct", "all 12 (rep, parity) pairs are distinct", pairs.size() == 12,
               "distinct pairs: " + std::to_string(pairs.size()));
    report.add("parity-matches-sign",
               "a label is Delta1-based iff it is a quadratic residue mod 13", [&] {
                   for (int label = 1; label <= 12; ++label) {
                       bool residue = sign_class(label) == SignClass::Positive;
                       bool delta1 = labeling.at(label).parity == BaseParity::Delta1;
                       if (residue != delta1) return false;
                   }
                   return true;
               }());
    return report;
}

}  // namespace golay24
