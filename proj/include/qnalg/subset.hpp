#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace qnalg {

// Generators are indexed by nonempty subsets of {1..n}.  A subset is a bitmask
// with bit i-1 encoding membership of i, so masks compare like integers and
// subset tests are single AND instructions.  n is capped so every mask fits
// comfortably in 32 bits and enumeration loops stay bounded.
inline constexpr int max_ambient = 16;

class subset_mask {
public:
    constexpr subset_mask() = default;
    constexpr explicit subset_mask(std::uint32_t bits) : bits_(bits) {}

    static subset_mask of(std::initializer_list<int> elements) {
        std::uint32_t b = 0;
        for (int e : elements) {
            if (e < 1 || e > max_ambient) throw std::invalid_argument("subset_mask: element out of range");
            b |= (1u << (e - 1));
        }
        return subset_mask(b);
    }

    static constexpr subset_mask empty_set() { return subset_mask(0); }

    static subset_mask full(int n) {
        if (n < 0 || n > max_ambient) throw std::invalid_argument("subset_mask: ambient size out of range");
        return subset_mask(n == 0 ? 0u : ((1u << n) - 1u));
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int e) const { return e >= 1 && e <= 32 && (bits_ & (1u << (e - 1))) != 0; }
    constexpr bool subset_of(subset_mask other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool fits(int n) const { return n >= 0 && n <= max_ambient && (n == 32 || (bits_ >> n) == 0); }

    subset_mask with(int e) const { return subset_mask(bits_ | (1u << (e - 1))); }
    subset_mask without(int e) const { return subset_mask(bits_ & ~(1u << (e - 1))); }
    constexpr subset_mask set_minus(subset_mask other) const { return subset_mask(bits_ & ~other.bits_); }
    constexpr subset_mask set_union(subset_mask other) const { return subset_mask(bits_ | other.bits_); }

    int min_element() const {
        if (bits_ == 0) throw std::invalid_argument("subset_mask: min of empty set");
        return std::countr_zero(bits_) + 1;
    }

    int max_element() const {
        if (bits_ == 0) throw std::invalid_argument("subset_mask: max of empty set");
        return 32 - std::countl_zero(bits_);
    }

    // Elements in increasing order.
    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int e : elements()) {
            if (!first) s += ",";
            s += std::to_string(e);
            first = false;
        }
        return s + "}";
    }

    auto operator<=>(const subset_mask&) const = default;

private:
    std::uint32_t bits_ = 0;
};

// All nonempty subsets of {1..n} in increasing mask order: the canonical
// generator enumeration used everywhere.
inline std::vector<subset_mask> nonempty_subsets(int n) {
    if (n < 0 || n > max_ambient) throw std::invalid_argument("nonempty_subsets: ambient size out of range");
    std::vector<subset_mask> out;
    const std::uint32_t univ = n == 0 ? 0u : ((1u << n) - 1u);
    out.reserve(univ);
    for (std::uint32_t b = 1; b <= univ && univ != 0; ++b) out.emplace_back(b);
    return out;
}

}  // namespace qnalg
