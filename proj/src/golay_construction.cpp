#include "golay24/golay_construction.hpp"

#include <algorithm>
#include <stdexcept>

#include "golay24/billiard_maps.hpp"
#include "golay24/triangle_labeling.hpp"

namespace golay24 {

std::string SubsetTag::to_string() const {
    switch (kind) {
        case Kind::S: return "S" + std::to_string(index);
        case Kind::R6: return "R6";
        case Kind::R12: return "R12";
    }
    return "?";
}

BitString24 TriangleSubset::bits() const {
    std::uint32_t mask = 0;
    for (int label : members) mask |= 1u << (label - 1);
    return BitString24::from_mask(mask);
}

namespace {

TriangleSubset make_subset(std::vector<int> members, SubsetTag tag) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    return TriangleSubset{std::move(members), tag};
}

}  // namespace

TriangleSubset subset_for_quad(int i) {
    if (i < 1 || i > 12)
        throw std::out_of_range("subset_for_quad: label " + std::to_string(i) +
                                " outside 1..12");
    const auto& s = sigma();
    const auto& k = kappa();
    std::vector<int> members = {i,       mult3(i),       s(i),       mult3(s(i)),
                                k(i),    mult4(k(i)),    s(k(i)),    mult4(s(k(i)))};
    return make_subset(std::move(members), SubsetTag{SubsetTag::Kind::S, i});
}

TriangleSubset subset_for_hex(int j) {
    if (j < 13 || j > 24)
        throw std::out_of_range("subset_for_hex: label " + std::to_string(j) +
                                " outside 13..24");
    const auto& d = delta();
    const auto& k = kappa();
    std::vector<int> members = {j,       mult4(j),       d(j),       mult4(d(j)),
                                k(j),    mult3(k(j)),    d(k(j)),    mult3(d(k(j)))};
    return make_subset(std::move(members), SubsetTag{SubsetTag::Kind::S, j});
}

namespace {

void append_coset(std::vector<int>& out, const std::array<int, 3>& coset, bool kappa_image) {
    const auto& k = kappa();
    for (int label : coset) out.push_back(kappa_image ? k(label) : label);
}

}  // namespace

TriangleSubset r6() {
    std::vector<int> members;
    append_coset(members, kCosetC1, false);
    append_coset(members, kCosetC4, true);
    append_coset(members, kCosetC2, true);
    append_coset(members, kCosetC7, false);
    return make_subset(std::move(members), SubsetTag{SubsetTag::Kind::R6, 0});
}

TriangleSubset r12() {
    std::vector<int> members;
    append_coset(members, kCosetC1, true);
    append_coset(members, kCosetC4, false);
    append_coset(members, kCosetC2, false);
    append_coset(members, kCosetC7, true);
    return make_subset(std::move(members), SubsetTag{SubsetTag::Kind::R12, 0});
}

const BitString24& GeneratorMatrix::row(int i) const {
    if (i < 1 || i > 12)
        throw std::out_of_range("GeneratorMatrix::row: index " + std::to_string(i) +
                                " outside 1..12");
    return rows_[static_cast<std::size_t>(i - 1)];
}

GeneratorMatrix generating_family() {
    std::array<BitString24, 12> rows = {
        subset_for_quad(1).bits(),  subset_for_quad(2).bits(), subset_for_quad(3).bits(),
        subset_for_quad(4).bits(),  subset_for_quad(5).bits(), r6().bits(),
        subset_for_hex(13).bits(),  subset_for_hex(15).bits(), subset_for_hex(16).bits(),
        subset_for_hex(17).bits(),  subset_for_hex(19).bits(), r12().bits()};
    return GeneratorMatrix(rows);
}

}  // namespace golay24
