#include "golay24/verification.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "golay24/billiard_maps.hpp"
#include "golay24/f2_code.hpp"
#include "golay24/golay_construction.hpp"
#include "golay24/modular_group.hpp"
#include "golay24/triangle_labeling.hpp"

namespace golay24 {

namespace {

constexpr std::array<std::string_view, 12> kReferenceRows = {
    "101000010010011000100001",  // S1
    "010101000100100001000110",  // S2
    "001000101010100110000010",  // S3
    "000111000001010000011001",  // S4
    "010010000101001110100000",  // S5
    "101000111010010111000101",  // R6
    "001011001000110100010000",  // S13
    "111001000000001001000011",  // S15
    "000000110101001101010000",  // S16
    "110010001000000010101100",  // S17
    "000100010110110000100100",  // S19
    "010111000101101000111010",  // R12
};

constexpr std::array<std::uint64_t, 25> kReferenceWeights = [] {
    std::array<std::uint64_t, 25> w{};
    w[0] = 1;
    w[8] = 759;
    w[12] = 2576;
    w[16] = 759;
    w[24] = 1;
    return w;
}();

// The twelve distinct subsets ever produced by the label-to-subset maps,
// keyed by their smallest producing label, with the partner label that
// must yield the same subset.
struct ReferenceSubset {
    int label;
    int partner;
    std::array<int, 8> members;
};

constexpr std::array<ReferenceSubset, 12> kReferenceSubsets = {{
    {1, 8, {1, 3, 8, 11, 14, 15, 19, 24}},
    {2, 10, {2, 4, 6, 10, 13, 18, 22, 23}},
    {3, 11, {3, 7, 9, 11, 13, 16, 17, 23}},
    {4, 6, {4, 5, 6, 12, 14, 20, 21, 24}},
    {5, 12, {2, 5, 10, 12, 15, 16, 17, 19}},
    {7, 9, {1, 7, 8, 9, 18, 20, 21, 22}},
    {13, 14, {3, 5, 6, 9, 13, 14, 16, 20}},
    {15, 18, {1, 2, 3, 6, 15, 18, 23, 24}},
    {16, 20, {7, 8, 10, 12, 15, 16, 18, 20}},
    {17, 21, {1, 2, 5, 9, 17, 19, 21, 22}},
    {19, 22, {4, 8, 10, 11, 13, 14, 19, 22}},
    {23, 24, {4, 7, 11, 12, 17, 21, 23, 24}},
}};

std::string format_cycles(const std::vector<int>& cycles) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < cycles.size(); ++i) os << (i ? "," : "") << cycles[i];
    os << "}";
    return os.str();
}

TriangleSubset subset_for(int label) {
    return label <= 12 ? subset_for_quad(label) : subset_for_hex(label);
}

// Deterministic xorshift generator for the sampled decoder checks.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

std::uint32_t random_pattern_of_weight(SplitMix64& rng, int weight) {
    std::uint32_t pattern = 0;
    while (std::popcount(pattern) < weight)
        pattern |= 1u << (rng.next() % 24);
    return pattern;
}

void check_group_layer(Report& report) {
    for (auto& c : verify_group_identities().checks) report.checks.push_back(std::move(c));

    const auto S = GroupElement::S();
    const auto T = GroupElement::T();
    const auto ST = compose(S, T);

    auto type_of = [](const GroupElement& g, Subgroup sub) {
        return cycle_type(coset_permutation(g, sub));
    };
    auto add_type = [&](std::string name, std::string claim, const GroupElement& g, Subgroup sub,
                        std::vector<int> expected) {
        auto got = type_of(g, sub);
        report.add(std::move(name), std::move(claim), got == expected,
                   "cycle type " + format_cycles(got));
    };

    add_type("commutator-t-action", "T acts on the 6 commutator-subgroup cosets as a 6-cycle",
             T, Subgroup::Commutator, {6});
    add_type("commutator-s-action", "S acts on the commutator-subgroup cosets with type {2,2,2}",
             S, Subgroup::Commutator, {2, 2, 2});
    add_type("commutator-st-action", "ST acts on the commutator-subgroup cosets with type {3,3}",
             ST, Subgroup::Commutator, {3, 3});
    add_type("congruence2-s-action", "S acts on the level-2 cosets with type {2,2,2}", S,
             Subgroup::PrincipalCongruence2, {2, 2, 2});
    add_type("congruence2-st-action", "ST acts on the level-2 cosets with type {3,3}", ST,
             Subgroup::PrincipalCongruence2, {3, 3});

    // Product of the two generator images = image of S*ST = image of T.
    auto product2 = compose(coset_permutation(S, Subgroup::PrincipalCongruence2),
                            coset_permutation(ST, Subgroup::PrincipalCongruence2));
    report.add("congruence2-product-action",
               "the product of the S and ST images on the level-2 cosets has type {2,2,2}",
               cycle_type(product2) == std::vector<int>{2, 2, 2},
               "cycle type " + format_cycles(cycle_type(product2)));
    auto product_comm = compose(coset_permutation(S, Subgroup::Commutator),
                                coset_permutation(ST, Subgroup::Commutator));
    report.add("commutator-product-action",
               "the product of the S and ST images on the commutator cosets is a 6-cycle",
               cycle_type(product_comm) == std::vector<int>{6},
               "cycle type " + format_cycles(cycle_type(product_comm)));
}

void check_labelings(Report& report) {
    bool built = false;
    try {
        auto labeling = build_quadrilateral_labeling();
        built = true;
        for (auto& c : verify_coset_representatives(labeling).checks)
            report.checks.push_back(std::move(c));
    } catch (const std::exception& e) {
        report.add("quadrilateral-closure",
                   "the alternating T/S label cycles close via (ST)^3 = (TS)^3 = I", false,
                   e.what());
    }
    if (built)
        report.add("quadrilateral-closure",
                   "the alternating T/S label cycles close via (ST)^3 = (TS)^3 = I", true);

    // Orbits of mult3 must be exactly the four cyclotomic cosets.
    auto orbit3 = [](int start) {
        std::set<int> orbit;
        for (int x = start; orbit.insert(x).second;) x = mult3(x);
        return orbit;
    };
    auto as_set = [](const std::array<int, 3>& c) { return std::set<int>(c.begin(), c.end()); };
    report.add("mult3-cosets",
               "multiplication by 3 has orbits {1,3,9}, {4,12,10}, {2,6,5}, {8,11,7}",
               orbit3(1) == as_set(kCosetC1) && orbit3(4) == as_set(kCosetC4) &&
                   orbit3(2) == as_set(kCosetC2) && orbit3(8) == as_set(kCosetC7));
    report.add("residue-split",
               "the residues are C1 ∪ C4 and the nonresidues C2 ∪ C7",
               [&] {
                   std::set<int> q, n;
                   for (int x : kCosetC1) q.insert(x);
                   for (int x : kCosetC4) q.insert(x);
                   for (int x : kCosetC2) n.insert(x);
                   for (int x : kCosetC7) n.insert(x);
                   for (int x = 1; x <= 12; ++x) {
                       bool residue = is_quadratic_residue_mod13(x);
                       if (residue != (q.count(x) > 0)) return false;
                       if (residue == (n.count(x) > 0)) return false;
                   }
                   return true;
               }());

    auto hexagon = build_hexagon_labeling();
    auto orbit_set = [](const std::array<int, 6>& orbit) {
        return std::set<int>(orbit.begin(), orbit.end());
    };
    std::set<int> expected_pos, expected_neg;
    for (int x = 13; x <= 24; ++x)
        (sign_class(x) == SignClass::Positive ? expected_pos : expected_neg).insert(x);
    report.add("mult4-orbits",
               "multiplication by 4 has exactly two 6-cycles, the positive and negative labels",
               orbit_set(hexagon.positive_orbit()) == expected_pos &&
                   orbit_set(hexagon.negative_orbit()) == expected_neg);
    report.add("mult4-order", "the T-orbit of 13 returns after exactly 6 steps", [&] {
        int x = 13;
        for (int i = 0; i < 6; ++i) x = mult4(x);
        if (x != 13) return false;
        x = 13;
        for (int i = 1; i < 6; ++i) {
            x = mult4(x);
            if (x == 13) return false;
        }
        return true;
    }());
}

void check_subsets(Report& report) {
    bool lists_ok = true, partners_ok = true, shape_ok = true;
    std::string detail;
    for (const auto& ref : kReferenceSubsets) {
        auto subset = subset_for(ref.label);
        std::vector<int> expected(ref.members.begin(), ref.members.end());
        if (subset.members != expected) {
            lists_ok = false;
            detail = "subset of label " + std::to_string(ref.label) + " differs";
        }
        if (!(subset == subset_for(ref.partner))) partners_ok = false;
    }
    // Partner equalities over all labels, not only the reference pairs.
    for (int i = 1; i <= 12; ++i)
        if (!(subset_for_quad(i) == subset_for_quad(sigma()(i)))) partners_ok = false;
    for (int j = 13; j <= 24; ++j)
        if (!(subset_for_hex(j) == subset_for_hex(delta()(j)))) partners_ok = false;
    for (int k = 1; k <= 24; ++k) {
        auto subset = subset_for(k);
        if (subset.members.size() != 8) shape_ok = false;
        int low = 0;
        for (int m : subset.members)
            if (m <= 12) ++low;
        if (low != 4) shape_ok = false;
    }
    report.add("subset-lists", "all twelve distinct subsets match the reference lists", lists_ok,
               detail);
    report.add("subset-partners", "S_i = S_sigma(i) and S_j = S_delta(j) for every label",
               partners_ok);
    report.add("subset-shape", "every S-subset has 8 members, 4 in each block", shape_ok);

    auto xor_family = [](std::initializer_list<int> labels) {
        BitString24 acc;
        for (int l : labels) acc = acc ^ subset_for(l).bits();
        return acc;
    };
    report.add("xor-s7", "S7 = S1 ⊕ S2 ⊕ S3 ⊕ S4 ⊕ S5",
               xor_family({1, 2, 3, 4, 5}) == subset_for_quad(7).bits());
    report.add("xor-s23", "S23 = S13 ⊕ S15 ⊕ S16 ⊕ S17 ⊕ S19",
               xor_family({13, 15, 16, 17, 19}) == subset_for_hex(23).bits());

    auto R6 = r6(), R12 = r12();
    report.add("r6-r12-partition", "R6 and R12 are disjoint 12-element sets covering all labels",
               R6.members.size() == 12 && R12.members.size() == 12 &&
                   (R6.bits() ^ R12.bits()) == BitString24::from_mask(0xFFFFFF) &&
                   (R6.bits().mask() & R12.bits().mask()) == 0);
}

void check_matrix_and_code(Report& report) {
    auto matrix = generating_family();
    bool rows_ok = true;
    std::string detail;
    for (int i = 1; i <= 12; ++i) {
        if (matrix.row(i).to_binary_string() != kReferenceRows[static_cast<std::size_t>(i - 1)]) {
            rows_ok = false;
            detail += "row " + std::to_string(i) + " differs; ";
        }
    }
    report.add("generator-matrix", "the derived 12x24 matrix equals the reference bit-for-bit",
               rows_ok, detail);

    LinearCode code = LinearCode::from_generator(matrix);
    report.add("rank", "the twelve rows span a 12-dimensional subspace of F2^24",
               code.rank() == 12, "rank " + std::to_string(code.rank()));

    auto we = code.weight_enumerator();
    report.add("weight-distribution",
               "the weight distribution is 1 + 759 q^8 + 2576 q^12 + 759 q^16 + q^24",
               we.counts == reference_weight_counts());
    report.add("golay-certificate",
               "rank 12, self-dual, doubly even, minimum distance 8: the binary Golay code",
               code.is_self_dual() && code.is_doubly_even() && code.min_distance() == 8 &&
                   code.is_golay24());
    report.add("macwilliams", "the weight enumerator is its own MacWilliams transform",
               macwilliams_self_consistent(we, 24, 12));

    // Decoder: a fixed batch of codewords against every pattern of weight
    // <= 3, then deterministic weight-4 samples, which must all be flagged.
    bool decode_ok = code.is_golay24();
    if (decode_ok) {
        const std::array<std::uint16_t, 6> infos = {0x000, 0xFFF, 0xA5A, 0x123, 0x800, 0x001};
        for (std::uint16_t info : infos) {
            const BitString24 sent = code.encode(info);
            for (std::uint32_t s : code.syndrome_table()) {
                if (s == LinearCode::kNoLeader) continue;
                auto received = sent ^ BitString24::from_mask(s);
                auto result = code.decode(received);
                bool expect_clean = s == 0;
                if (result.codeword != sent || result.info != info) decode_ok = false;
                if (expect_clean != (result.status == DecodeStatus::Clean)) decode_ok = false;
                if (!expect_clean && result.status != DecodeStatus::Corrected) decode_ok = false;
            }
        }
    }
    report.add("decode-up-to-3",
               "every error pattern of weight <= 3 is corrected exactly on a codeword batch",
               decode_ok);

    bool detect_ok = code.is_golay24();
    if (detect_ok) {
        SplitMix64 rng{0x6F1D34B2C55A90E7ull};
        const BitString24 sent = code.encode(0x5C3);
        for (int trial = 0; trial < 200; ++trial) {
            auto pattern = random_pattern_of_weight(rng, 4);
            auto result = code.decode(sent ^ BitString24::from_mask(pattern));
            if (result.status != DecodeStatus::DetectedUncorrectable) detect_ok = false;
        }
    }
    report.add("detect-weight-4", "weight-4 error patterns are reported as uncorrectable",
               detect_ok);
}

}  // namespace

const std::array<std::string_view, 12>& reference_generator_rows() { return kReferenceRows; }

const std::array<std::uint64_t, 25>& reference_weight_counts() { return kReferenceWeights; }

Report run_full_verification() {
    Report report;
    check_group_layer(report);
    check_labelings(report);
    for (auto& c : verify_billiard_maps().checks) report.checks.push_back(std::move(c));
    check_subsets(report);
    check_matrix_and_code(report);
    return report;
}

}  // namespace golay24
