#include "fdcalc/descriptor.hpp"

#include <algorithm>
#include <cctype>

#include "fdcalc/arith.hpp"
#include "fdcalc/errors.hpp"

namespace fdcalc {

namespace {

constexpr std::uint64_t kMaxCyclicOrder = std::uint64_t{1} << 32;

std::optional<std::uint64_t> add_mult(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
    if (!a || !b) return std::nullopt;
    return checked_add(*a, *b);
}

} // namespace

bool PrimaryPart::finite_set() const {
    if (unbounded) return false;
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimaryFactor& f) { return f.multiplicity.has_value(); });
}

std::uint32_t PrimaryPart::max_exponent() const {
    std::uint32_t m = 0;
    for (const PrimaryFactor& f : factors) m = std::max(m, f.exponent);
    return m;
}

ExtNat PrimaryPart::cyclic_count() const {
    if (unbounded) return ExtNat::infinity();
    std::uint64_t n = 0;
    for (const PrimaryFactor& f : factors) {
        if (!f.multiplicity) return ExtNat::infinity();
        n = checked_add(n, *f.multiplicity);
    }
    return ExtNat::finite(n);
}

GroupDescriptor::GroupDescriptor(std::uint64_t free_rank, std::map<std::uint64_t, PrimaryPart> parts)
    : free_rank_(free_rank) {
    for (auto& [p, part] : parts) {
        if (!is_prime_u64(p)) throw std::invalid_argument("primary part key must be prime");
        // Merge blocks with equal exponent, sort descending, drop empty parts.
        std::map<std::uint32_t, std::optional<std::uint64_t>> merged;
        for (const PrimaryFactor& f : part.factors) {
            if (f.exponent == 0) throw std::invalid_argument("primary factor exponent must be >= 1");
            if (f.multiplicity && *f.multiplicity == 0) continue;
            auto it = merged.find(f.exponent);
            if (it == merged.end())
                merged.emplace(f.exponent, f.multiplicity);
            else
                it->second = add_mult(it->second, f.multiplicity);
        }
        PrimaryPart norm;
        norm.unbounded = part.unbounded;
        for (auto it = merged.rbegin(); it != merged.rend(); ++it)
            norm.factors.push_back(PrimaryFactor{it->first, it->second});
        if (!norm.trivial()) primary_.emplace(p, std::move(norm));
    }
}

const PrimaryPart* GroupDescriptor::part(std::uint64_t p) const {
    auto it = primary_.find(p);
    return it == primary_.end() ? nullptr : &it->second;
}

bool GroupDescriptor::is_finite() const {
    if (free_rank_ > 0) return false;
    return std::all_of(primary_.begin(), primary_.end(),
                       [](const auto& kv) { return kv.second.finite_set(); });
}

StructureStats GroupDescriptor::stats() const {
    StructureStats s;
    s.is_trivial = is_trivial();
    s.is_torsion = is_torsion();
    s.is_finite = is_finite();

    if (free_rank_ > 0 ||
        std::any_of(primary_.begin(), primary_.end(),
                    [](const auto& kv) { return kv.second.unbounded; })) {
        s.exponent = ExtNat::infinity();
        s.e_value = 0;
    } else {
        std::uint64_t e = 1;
        for (const auto& [p, part] : primary_)
            e = checked_mul(e, checked_pow(p, part.max_exponent()));
        s.exponent = ExtNat::finite(e);
        s.e_value = e;
    }

    ExtNat torsion_rank = ExtNat::finite(0);
    for (const auto& [p, part] : primary_) torsion_rank = ExtNat::max(torsion_rank, part.cyclic_count());
    s.rank = torsion_rank.is_finite() ? ExtNat::finite(torsion_rank.finite_value() + free_rank_)
                                      : torsion_rank;

    if (free_rank_ == 0 && primary_.size() == 1) s.is_p_group = primary_.begin()->first;
    return s;
}

GroupDescriptor GroupDescriptor::primary_component(std::uint64_t p) const {
    std::map<std::uint64_t, PrimaryPart> parts;
    if (const PrimaryPart* pp = part(p)) parts.emplace(p, *pp);
    return GroupDescriptor(0, std::move(parts));
}

FiniteAbelianGroup GroupDescriptor::to_finite_group() const {
    if (free_rank_ > 0) throw NotFiniteError("group has a free part");
    std::vector<std::uint64_t> factors;
    for (const auto& [p, part] : primary_) {
        if (part.unbounded) throw NotFiniteError("group has a primary part of unbounded exponent");
        for (const PrimaryFactor& f : part.factors) {
            if (!f.multiplicity) throw NotFiniteError("group has a factor of infinite multiplicity");
            std::uint64_t q = checked_pow(p, f.exponent);
            for (std::uint64_t i = 0; i < *f.multiplicity; ++i) factors.push_back(q);
        }
    }
    return FiniteAbelianGroup(std::move(factors));
}

GroupDescriptor GroupDescriptor::of(const FiniteAbelianGroup& g) {
    std::map<std::uint64_t, PrimaryPart> parts;
    for (std::uint64_t n : g.factors())
        for (auto [p, e] : factorize(n))
            parts[p].factors.push_back(PrimaryFactor{e, 1});
    return GroupDescriptor(0, std::move(parts));
}

GroupDescriptor GroupDescriptor::cyclic(std::uint64_t n) {
    if (n == 0) return GroupDescriptor(1, {});
    if (n == 1) return GroupDescriptor();
    std::map<std::uint64_t, PrimaryPart> parts;
    for (auto [p, e] : factorize(n)) parts[p].factors.push_back(PrimaryFactor{e, 1});
    return GroupDescriptor(0, std::move(parts));
}

std::string GroupDescriptor::str() const {
    if (is_trivial()) return "1";
    std::vector<std::string> terms;
    for (std::uint64_t i = 0; i < free_rank_; ++i) terms.push_back("Z");
    for (const auto& [p, part] : primary_) {
        if (part.unbounded) terms.push_back("U" + std::to_string(p));
        for (const PrimaryFactor& f : part.factors) {
            std::string t = "Z" + std::to_string(checked_pow(p, f.exponent));
            if (!f.multiplicity)
                t += "*inf";
            else if (*f.multiplicity > 1)
                t += "*" + std::to_string(*f.multiplicity);
            terms.push_back(std::move(t));
        }
    }
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i > 0) out += "x";
        out += terms[i];
    }
    return out;
}

bool hom_is_trivial(const GroupDescriptor& a, const GroupDescriptor& b) {
    if (b.is_trivial()) return true;
    if (a.free_rank() > 0) return false;
    for (const auto& [p, part] : a.primary_parts())
        if (b.part(p) != nullptr) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Spec-string parser

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) {
        // Whitespace is ignored everywhere; keep original positions for errors.
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (!std::isspace(static_cast<unsigned char>(text[i]))) {
                chars_.push_back(text[i]);
                origin_.push_back(i);
            }
        }
        end_pos_ = text.size();
    }

    GroupDescriptor run() {
        if (at_end()) throw ParseError("empty group spec", here());
        if (peek() == '1') {
            ++pos_;
            if (!at_end()) throw ParseError("unexpected input after trivial group '1'", here());
            return GroupDescriptor();
        }
        term();
        while (!at_end()) {
            if (peek() != 'x') throw ParseError("expected 'x' between terms", here());
            ++pos_;
            term();
        }
        return GroupDescriptor(free_rank_, std::move(parts_));
    }

private:
    void term() {
        if (at_end()) throw ParseError("expected a group term", here());
        char c = peek();
        if (c == 'Z') {
            ++pos_;
            if (!at_digit()) {
                // Bare Z: the infinite cyclic group. The grammar allows a
                // multiplicity only after a finite cyclic order.
                if (!at_end() && peek() == '*')
                    throw ParseError("multiplicity is only allowed after a finite cyclic order", here());
                ++free_rank_;
                return;
            }
            std::size_t at = here();
            std::uint64_t n = integer();
            if (n == 0) throw ParseError("order 0 is spelled as the bare term 'Z'", at);
            if (n == 1) throw ParseError("'Z1' is invalid; spell the trivial group as '1'", at);
            std::optional<std::uint64_t> mult = 1;
            if (!at_end() && peek() == '*') {
                ++pos_;
                if (match_word("inf")) {
                    mult = std::nullopt;
                } else if (at_digit()) {
                    std::size_t mat = here();
                    std::uint64_t m = integer();
                    if (m < 2) throw ParseError("multiplicity must be >= 2 or 'inf'", mat);
                    mult = m;
                } else {
                    throw ParseError("expected an integer or 'inf' after '*'", here());
                }
            }
            for (auto [p, e] : factorize(n))
                parts_[p].factors.push_back(PrimaryFactor{e, mult});
            return;
        }
        if (c == 'U') {
            ++pos_;
            if (!at_digit()) throw ParseError("expected a prime after 'U'", here());
            std::size_t at = here();
            std::uint64_t p = integer();
            if (!is_prime_u64(p)) throw ParseError("'U' requires a prime", at);
            parts_[p].unbounded = true;
            return;
        }
        throw ParseError("expected 'Z', 'U', or '1'", here());
    }

    std::uint64_t integer() {
        std::size_t at = here();
        std::uint64_t v = 0;
        while (at_digit()) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > kMaxCyclicOrder) throw ParseError("cyclic order too large", at);
            ++pos_;
        }
        return v;
    }

    bool match_word(std::string_view w) {
        std::size_t save = pos_;
        for (char c : w) {
            if (at_end() || peek() != c) {
                pos_ = save;
                return false;
            }
            ++pos_;
        }
        return true;
    }

    std::size_t here() const { return pos_ < origin_.size() ? origin_[pos_] : end_pos_; }
    bool at_end() const { return pos_ >= chars_.size(); }
    bool at_digit() const { return !at_end() && peek() >= '0' && peek() <= '9'; }
    char peek() const { return chars_[pos_]; }

    std::vector<char> chars_;
    std::vector<std::size_t> origin_;
    std::size_t end_pos_ = 0;
    std::size_t pos_ = 0;
    std::uint64_t free_rank_ = 0;
    std::map<std::uint64_t, PrimaryPart> parts_;
};

} // namespace

GroupDescriptor GroupDescriptor::parse(std::string_view text) {
    return SpecParser(text).run();
}

} // namespace fdcalc
