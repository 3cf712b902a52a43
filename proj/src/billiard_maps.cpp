#include "golay24/billiard_maps.hpp"

#include <stdexcept>
#include <string>

#include "golay24/triangle_labeling.hpp"

namespace golay24 {

namespace {

// sigma pairs: (1 8)(2 10)(3 11)(4 6)(5 12)(7 9) on the parallelogram block,
// (13 23)(14 24)(16 17)(20 21)(15 19)(18 22) on the hexagon block.
//
// Note on (4 6)(5 12): pairing both 4 and 5 with 12 would not be a bijection
// and would leave 6 unpaired. (4 6)(5 12) is the unique fixed-point-free
// involutive completion of the remaining pairs that exchanges residue
// classes and commutes with kappa; it is also the only choice consistent
// with the subset identities built on top of these tables (see
// golay_construction and its regression tests).
constexpr std::array<std::uint8_t, 24> kSigmaImages = {
    8, 10, 11, 6, 12, 4, 9, 1, 7, 2, 3, 5,  //
    23, 24, 19, 17, 16, 22, 15, 21, 20, 18, 13, 14};

// delta pairs: (1 2)(3 6)(4 11)(5 9)(7 12)(8 10) and
// (13 14)(15 18)(16 20)(17 21)(19 22)(23 24).
constexpr std::array<std::uint8_t, 24> kDeltaImages = {
    2, 1, 6, 11, 9, 3, 12, 10, 5, 8, 4, 7,  //
    14, 13, 18, 20, 21, 15, 22, 16, 17, 19, 24, 23};

// kappa pairs: (1 15)(2 18)(3 13)(4 24)(5 17)(6 14)(7 20)(8 19)(9 21)
// (10 22)(11 23)(12 16).
constexpr std::array<std::uint8_t, 24> kKappaImages = {
    15, 18, 13, 24, 17, 14, 20, 19, 21, 22, 23, 16,  //
    3, 6, 1, 12, 5, 2, 8, 7, 9, 10, 11, 4};

constexpr Permutation24 kSigma{kSigmaImages};
constexpr Permutation24 kDelta{kDeltaImages};
constexpr Permutation24 kKappa{kKappaImages};

static_assert(kSigma.is_bijection() && kSigma.is_involution() && !kSigma.has_fixed_point());
static_assert(kDelta.is_bijection() && kDelta.is_involution() && !kDelta.has_fixed_point());
static_assert(kKappa.is_bijection() && kKappa.is_involution() && !kKappa.has_fixed_point());
static_assert(kSigma.preserves_blocks());
static_assert(kDelta.preserves_blocks());
static_assert(kKappa.swaps_blocks());

constexpr bool commutes_with_kappa(const Permutation24& p) {
    for (int i = 0; i < 24; ++i) {
        int ks = kKappa.images()[p.images()[i] - 1];
        int sk = p.images()[kKappa.images()[i] - 1];
        if (ks != sk) return false;
    }
    return true;
}

static_assert(commutes_with_kappa(kSigma));
static_assert(commutes_with_kappa(kDelta));

}  // namespace

int Permutation24::operator()(int label) const {
    if (label < 1 || label > 24)
        throw std::out_of_range("Permutation24: label " + std::to_string(label) +
                                " outside 1..24");
    return images_[static_cast<std::size_t>(label - 1)];
}

Permutation24 Permutation24::after(const Permutation24& other) const {
    std::array<std::uint8_t, 24> images{};
    for (int i = 0; i < 24; ++i)
        images[static_cast<std::size_t>(i)] =
            images_[static_cast<std::size_t>(other.images_[static_cast<std::size_t>(i)] - 1)];
    return Permutation24{images};
}

const Permutation24& sigma() { return kSigma; }
const Permutation24& delta() { return kDelta; }
const Permutation24& kappa() { return kKappa; }

Report verify_billiard_maps() {
    Report report;

    auto structural = [&](const char* name, const Permutation24& p, bool block_preserving) {
        std::string base(name);
        report.add(base + "-involution", base + " is a fixed-point-free involution",
                   p.is_bijection() && p.is_involution() && !p.has_fixed_point());
        if (block_preserving)
            report.add(base + "-blocks", base + " preserves the blocks {1..12}, {13..24}",
                       p.preserves_blocks());
        else
            report.add(base + "-blocks", base + " exchanges the blocks {1..12}, {13..24}",
                       p.swaps_blocks());
    };
    structural("sigma", kSigma, true);
    structural("delta", kDelta, true);
    structural("kappa", kKappa, false);

    report.add("kappa-sigma-commute", "kappa∘sigma = sigma∘kappa pointwise",
               kKappa.after(kSigma) == kSigma.after(kKappa));
    report.add("kappa-delta-commute", "kappa∘delta = delta∘kappa pointwise",
               kKappa.after(kDelta) == kDelta.after(kKappa));

    auto exchanges_sign = [](const Permutation24& p) {
        for (int k = 1; k <= 24; ++k)
            if (sign_class(p(k)) == sign_class(k)) return false;
        return true;
    };
    auto preserves_sign = [](const Permutation24& p) {
        for (int k = 1; k <= 24; ++k)
            if (sign_class(p(k)) != sign_class(k)) return false;
        return true;
    };
    report.add("sigma-sign", "sigma exchanges the sign classes", exchanges_sign(kSigma));
    report.add("delta-sign", "delta exchanges the sign classes", exchanges_sign(kDelta));
    report.add("kappa-sign", "kappa preserves the sign classes", preserves_sign(kKappa));
    return report;
}

}  // namespace golay24
