#pragma once

// Collections of residue classes and exact solution counting for
//
//     x = a (mod m),  x = b (mod n),   (a, b) ranging over A x B.
//
// With g = gcd(m, n), a pair (a, b) contributes exactly one solution modulo
// mn/g when a = b (mod g) and none otherwise, so the count is the inner
// product of the two collections' class counts modulo g.

#include <algorithm>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "dcrt/checked.hpp"
#include "dcrt/congruence.hpp"
#include "dcrt/errors.hpp"

namespace dcrt {

/// An arbitrary subset of the residues modulo `modulus`, kept strictly sorted.
class ResidueSet {
public:
    /// Members must be distinct and lie in [0, modulus).
    ResidueSet(integer modulus, std::vector<integer> members) : modulus_(modulus), members_(std::move(members)) {
        if (modulus_ < 1) {
            throw invalid_input("residue set modulus must be positive, got " + std::to_string(modulus_));
        }
        for (integer r : members_) {
            if (r < 0 || r >= modulus_) {
                throw invalid_input("residue " + std::to_string(r) + " is outside [0, " + std::to_string(modulus_) +
                                    ")");
            }
        }
        std::sort(members_.begin(), members_.end());
        auto dup = std::adjacent_find(members_.begin(), members_.end());
        if (dup != members_.end()) {
            throw invalid_input("duplicate residue " + std::to_string(*dup));
        }
    }

    /// Reduces every value modulo `modulus` first; duplicates after reduction are still rejected.
    static ResidueSet normalized(integer modulus, std::vector<integer> values) {
        if (modulus < 1) {
            throw invalid_input("residue set modulus must be positive, got " + std::to_string(modulus));
        }
        for (integer& v : values) {
            v = floor_mod(v, modulus);
        }
        return ResidueSet(modulus, std::move(values));
    }

    integer modulus() const noexcept { return modulus_; }
    integer size() const noexcept { return static_cast<integer>(members_.size()); }
    const std::vector<integer>& members() const noexcept { return members_; }

    bool contains(integer residue) const {
        return std::binary_search(members_.begin(), members_.end(), floor_mod(residue, modulus_));
    }

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

private:
    integer modulus_;
    std::vector<integer> members_;
};

/// One contiguous arc {start, start+1, ..., start+length-1} taken modulo `modulus`.
class CyclicInterval {
public:
    CyclicInterval(integer modulus, integer start, integer length) : modulus_(modulus), length_(length) {
        if (modulus_ < 1) {
            throw invalid_input("interval modulus must be positive, got " + std::to_string(modulus_));
        }
        if (length_ < 0 || length_ > modulus_) {
            throw invalid_input("interval length " + std::to_string(length_) + " is outside [0, " +
                                std::to_string(modulus_) + "]");
        }
        start_ = floor_mod(start, modulus_);
    }

    integer modulus() const noexcept { return modulus_; }
    integer start() const noexcept { return start_; }
    integer length() const noexcept { return length_; }
    integer size() const noexcept { return length_; }

    bool contains(integer residue) const noexcept {
        return floor_mod(residue - start_, modulus_) < length_;
    }

    /// Smallest y >= x whose residue lies in the interval (x >= 0, interval non-empty).
    integer first_member_at_or_after(integer x) const {
        if (length_ == 0) {
            throw infeasible_error("empty interval has no members");
        }
        const integer offset = floor_mod(x - start_, modulus_);
        return offset < length_ ? x : checked_add(x, modulus_ - offset);
    }

    friend bool operator==(const CyclicInterval&, const CyclicInterval&) = default;

private:
    integer modulus_;
    integer start_{};
    integer length_;
};

using ResidueCollection = std::variant<ResidueSet, CyclicInterval>;

inline integer modulus_of(const ResidueCollection& c) {
    return std::visit([](const auto& v) { return v.modulus(); }, c);
}

inline integer size_of(const ResidueCollection& c) {
    return std::visit([](const auto& v) { return v.size(); }, c);
}

inline bool contains(const ResidueCollection& c, integer residue) {
    return std::visit([residue](const auto& v) { return v.contains(residue); }, c);
}

/// Materializes an interval as an explicit set with the same members.
inline ResidueSet interval_members(const CyclicInterval& iv) {
    std::vector<integer> members;
    members.reserve(static_cast<std::size_t>(iv.length()));
    for (integer i = 0; i < iv.length(); ++i) {
        members.push_back((iv.start() + i) % iv.modulus());
    }
    return ResidueSet(iv.modulus(), std::move(members));
}

/// counts[i] = number of members congruent to i modulo `divisor`.
struct ResiduePartitionCount {
    integer divisor{1};
    std::vector<integer> counts;

    integer total() const { return std::accumulate(counts.begin(), counts.end(), integer{0}); }
};

/// Class counts of a collection modulo `divisor`, which must divide the collection's modulus.
inline ResiduePartitionCount partition_counts(const ResidueCollection& collection, integer divisor) {
    const integer m = modulus_of(collection);
    if (divisor < 1 || m % divisor != 0) {
        throw invalid_input("partition divisor " + std::to_string(divisor) + " does not divide modulus " +
                            std::to_string(m));
    }
    ResiduePartitionCount out{divisor, std::vector<integer>(static_cast<std::size_t>(divisor), 0)};
    if (const auto* set = std::get_if<ResidueSet>(&collection)) {
        for (integer r : set->members()) {
            ++out.counts[static_cast<std::size_t>(r % divisor)];
        }
    } else {
        // Full laps of `divisor` consecutive residues hit every class once; the tail
        // covers `extra` consecutive classes starting at start mod divisor.
        const auto& iv = std::get<CyclicInterval>(collection);
        const integer laps = iv.length() / divisor;
        const integer extra = iv.length() % divisor;
        const integer first = iv.start() % divisor;
        for (integer i = 0; i < divisor; ++i) {
            out.counts[static_cast<std::size_t>(i)] = laps + (floor_mod(i - first, divisor) < extra ? 1 : 0);
        }
    }
    return out;
}

/// Number of solutions modulo mn/g over all admissible pairs: sum_i f(i, A) f(i, B).
inline integer exact_count(const ResidueCollection& a, const ResidueCollection& b) {
    const integer m = modulus_of(a);
    const integer n = modulus_of(b);
    (void)checked_lcm(m, n);
    const integer g = std::gcd(m, n);
    const ResiduePartitionCount fa = partition_counts(a, g);
    const ResiduePartitionCount fb = partition_counts(b, g);
    integer h = 0;
    for (std::size_t i = 0; i < fa.counts.size(); ++i) {
        h = checked_add(h, checked_mul(fa.counts[i], fb.counts[i]));
    }
    return h;
}

inline constexpr integer default_enumeration_cap = 10'000'000;

/// Brute-force scan of [0, mn/g): every x with (x mod m) in A and (x mod n) in B.
inline std::vector<SolutionClass> enumerate_solutions(const ResidueCollection& a, const ResidueCollection& b,
                                                      integer cap = default_enumeration_cap) {
    const integer m = modulus_of(a);
    const integer n = modulus_of(b);
    const integer l = checked_lcm(m, n);
    if (l > cap) {
        throw enumeration_cap_exceeded(l, cap);
    }
    auto mask = [](const ResidueCollection& c, integer modulus) {
        std::vector<bool> bits(static_cast<std::size_t>(modulus));
        for (integer r = 0; r < modulus; ++r) {
            bits[static_cast<std::size_t>(r)] = contains(c, r);
        }
        return bits;
    };
    const std::vector<bool> in_a = mask(a, m);
    const std::vector<bool> in_b = mask(b, n);
    std::vector<SolutionClass> out;
    for (integer x = 0; x < l; ++x) {
        if (in_a[static_cast<std::size_t>(x % m)] && in_b[static_cast<std::size_t>(x % n)]) {
            out.push_back({x, l});
        }
    }
    return out;
}

}  // namespace dcrt
