#include "golay24/bitstring24.hpp"

#include <bit>
#include <stdexcept>

namespace golay24 {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

BitString24 BitString24::from_binary_string(std::string_view s) {
    if (s.size() != 24)
        throw std::invalid_argument("BitString24: expected 24 binary characters, got " +
                                    std::to_string(s.size()));
    std::uint32_t mask = 0;
    for (int k = 0; k < 24; ++k) {
        char c = s[static_cast<std::size_t>(k)];
        if (c == '1')
            mask |= 1u << k;
        else if (c != '0')
            throw std::invalid_argument("BitString24: invalid character in binary string");
    }
    return BitString24(mask);
}

BitString24 BitString24::from_hex(std::string_view s) {
    if (s.size() != 6)
        throw std::invalid_argument("BitString24: expected 6 hex digits, got " +
                                    std::to_string(s.size()));
    std::uint32_t value = 0;
    for (char c : s) {
        int d = hex_digit(c);
        if (d < 0) throw std::invalid_argument("BitString24: invalid hex digit");
        value = value << 4 | static_cast<std::uint32_t>(d);
    }
    // The hex value reads label 1 as the most significant bit.
    std::uint32_t mask = 0;
    for (int k = 0; k < 24; ++k)
        if (value >> (23 - k) & 1u) mask |= 1u << k;
    return BitString24(mask);
}

bool BitString24::test(int label) const {
    if (label < 1 || label > 24)
        throw std::out_of_range("BitString24: label " + std::to_string(label) +
                                " outside 1..24");
    return mask_ >> (label - 1) & 1u;
}

int BitString24::weight() const { return std::popcount(mask_); }

std::string BitString24::to_binary_string() const {
    std::string s(24, '0');
    for (int k = 0; k < 24; ++k)
        if (mask_ >> k & 1u) s[static_cast<std::size_t>(k)] = '1';
    return s;
}

std::string BitString24::to_hex() const {
    std::uint32_t value = 0;
    for (int k = 0; k < 24; ++k)
        if (mask_ >> k & 1u) value |= 1u << (23 - k);
    static const char* digits = "0123456789abcdef";
    std::string s(6, '0');
    for (int i = 0; i < 6; ++i) s[static_cast<std::size_t>(i)] = digits[value >> (20 - 4 * i) & 0xF];
    return s;
}

}  // namespace golay24
