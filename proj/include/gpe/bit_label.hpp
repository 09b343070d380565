#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "gpe/errors.hpp"

namespace gpe {

/// Fixed-length binary string attached to a vertex. Coordinate 1 is the
/// leftmost character; internally the string is stored as an integer whose
/// most significant used bit is coordinate 1, so sorting labels by `bits`
/// sorts the strings as binary numbers.
struct BitLabel {
    int length = 0;
    std::uint64_t bits = 0;

    BitLabel() = default;
    BitLabel(int len, std::uint64_t value) : length(len), bits(value) {}

    static BitLabel from_string(const std::string& s) {
        if (s.empty() || s.size() > 64)
            throw precondition_error("BitLabel: length must be in [1, 64]");
        BitLabel l(static_cast<int>(s.size()), 0);
        for (char c : s) {
            if (c != '0' && c != '1')
                throw precondition_error("BitLabel: characters must be 0 or 1");
            l.bits = (l.bits << 1) | static_cast<std::uint64_t>(c == '1');
        }
        return l;
    }

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(length), '0');
        for (int p = 0; p < length; ++p)
            if (bit(p)) s[static_cast<std::size_t>(p)] = '1';
        return s;
    }

    /// Coordinate p+1 in 1-based terms; p counts from the left.
    bool bit(int p) const { return (bits >> (length - 1 - p)) & 1u; }

    BitLabel with_flipped(int p) const {
        return BitLabel(length, bits ^ (std::uint64_t{1} << (length - 1 - p)));
    }

    /// No two consecutive 1s.
    bool fibonacci_valid() const { return (bits & (bits >> 1)) == 0; }

    /// fibonacci_valid and not both endpoints 1 (for length 1: not "1").
    bool lucas_valid() const {
        if (!fibonacci_valid()) return false;
        return !(bit(0) && bit(length - 1));
    }

    friend int hamming(const BitLabel& a, const BitLabel& b) {
        if (a.length != b.length)
            throw precondition_error("hamming: labels have different lengths");
        return std::popcount(a.bits ^ b.bits);
    }

    /// 1-based coordinate where the two labels differ, provided they differ
    /// in exactly one position; 0 otherwise.
    friend int differing_coordinate(const BitLabel& a, const BitLabel& b) {
        std::uint64_t x = a.bits ^ b.bits;
        if (a.length != b.length || std::popcount(x) != 1) return 0;
        return a.length - std::countr_zero(x);
    }

    friend bool operator==(const BitLabel& a, const BitLabel& b) = default;
    friend bool operator<(const BitLabel& a, const BitLabel& b) {
        return a.bits < b.bits;
    }
};

} // namespace gpe
