#pragma once

#include <cassert>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdcalc {

/// Extended natural number: -inf < 0 < 1 < ... < inf.
///
/// Codomain of every degree computation. -inf is the degree of the zero
/// map, inf marks maps with no finite degree and non-nilpotent ideals.
class ExtNat {
public:
    constexpr ExtNat() : tag_(Tag::Finite), value_(0) {}

    static constexpr ExtNat neg_infinity() { return ExtNat(Tag::NegInf, 0); }
    static constexpr ExtNat infinity() { return ExtNat(Tag::Inf, 0); }
    static constexpr ExtNat finite(std::uint64_t n) { return ExtNat(Tag::Finite, n); }

    constexpr bool is_neg_infinity() const { return tag_ == Tag::NegInf; }
    constexpr bool is_finite() const { return tag_ == Tag::Finite; }
    constexpr bool is_infinity() const { return tag_ == Tag::Inf; }

    constexpr std::uint64_t finite_value() const {
        if (tag_ != Tag::Finite) throw std::logic_error("ExtNat: not a finite value");
        return value_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.tag_ == b.tag_ && (a.tag_ != Tag::Finite || a.value_ == b.value_);
    }

    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (auto c = rank(a.tag_) <=> rank(b.tag_); c != 0) return c;
        if (a.tag_ == Tag::Finite) return a.value_ <=> b.value_;
        return std::strong_ordering::equal;
    }

    static constexpr ExtNat max(ExtNat a, ExtNat b) { return a < b ? b : a; }
    static constexpr ExtNat min(ExtNat a, ExtNat b) { return b < a ? b : a; }

    /// Adds a non-negative shift; infinities absorb.
    constexpr ExtNat plus(std::uint64_t n) const {
        return tag_ == Tag::Finite ? finite(value_ + n) : *this;
    }

    std::string str() const {
        switch (tag_) {
        case Tag::NegInf: return "-inf";
        case Tag::Inf: return "inf";
        default: return std::to_string(value_);
        }
    }

    static std::optional<ExtNat> parse(std::string_view s) {
        if (s == "-inf") return neg_infinity();
        if (s == "inf") return infinity();
        if (s.empty()) return std::nullopt;
        std::uint64_t v = 0;
        for (char c : s) {
            if (c < '0' || c > '9') return std::nullopt;
            if (v > (UINT64_MAX - static_cast<std::uint64_t>(c - '0')) / 10) return std::nullopt;
            v = v * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return finite(v);
    }

private:
    enum class Tag : std::uint8_t { NegInf, Finite, Inf };

    constexpr ExtNat(Tag tag, std::uint64_t value) : tag_(tag), value_(value) {}

    static constexpr int rank(Tag t) {
        return t == Tag::NegInf ? 0 : (t == Tag::Finite ? 1 : 2);
    }

    Tag tag_;
    std::uint64_t value_;
};

} // namespace fdcalc
