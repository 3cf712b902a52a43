// Length-24 bit vectors over the label set {1,...,24}. Position k of the
// printed string (leftmost first) is the membership bit of label k; the
// same convention drives the hex form (first label = most significant bit).

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace golay24 {

class BitString24 {
public:
    constexpr BitString24() : mask_(0) {}

    /// Low 24 bits of `mask`; bit k-1 is the membership of label k.
    static constexpr BitString24 from_mask(std::uint32_t mask) {
        return BitString24(mask & 0xFFFFFFu);
    }

    /// Parses 24 characters of '0'/'1', leftmost = label 1. Throws
    /// std::invalid_argument on anything else.
    static BitString24 from_binary_string(std::string_view s);

    /// Parses exactly 6 hex digits (either case). Throws
    /// std::invalid_argument on malformed input.
    static BitString24 from_hex(std::string_view s);

    constexpr std::uint32_t mask() const { return mask_; }

    /// Membership of label k (1..24); throws std::out_of_range otherwise.
    bool test(int label) const;

    /// Number of set bits.
    int weight() const;

    std::string to_binary_string() const;
    std::string to_hex() const;

    friend constexpr BitString24 operator^(BitString24 x, BitString24 y) {
        return BitString24(x.mask_ ^ y.mask_);
    }

    friend constexpr bool operator==(const BitString24&, const BitString24&) = default;
    friend constexpr std::strong_ordering operator<=>(const BitString24&,
                                                      const BitString24&) = default;

private:
    constexpr explicit BitString24(std::uint32_t mask) : mask_(mask) {}

    std::uint32_t mask_;
};

}  // namespace golay24
