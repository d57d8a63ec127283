#pragma once

// Classical Chinese Remainder Theorem over fixed-width integers.
//
// A system x = a_i (mod m_i), i = 1..k, is solvable iff a_i = a_j modulo
// gcd(m_i, m_j) for every pair. Solutions are merged pairwise with the
// extended Euclidean algorithm; every product that could exceed the integer
// range is checked and reported as dcrt::overflow_error.

#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "dcrt/checked.hpp"
#include "dcrt/errors.hpp"

namespace dcrt {

/// Greatest common divisor of two non-negative integers, with gcd(0, 0) = 0.
[[nodiscard]] constexpr integer gcd(integer u, integer v) {
    if (u < 0 || v < 0) {
        throw invalid_input("gcd: arguments must be non-negative");
    }
    return std::gcd(u, v);
}

/// lcm(u, v) for positive arguments; throws overflow_error if it does not fit.
[[nodiscard]] constexpr integer checked_lcm(integer u, integer v) {
    if (u < 1 || v < 1) {
        throw invalid_input("lcm: arguments must be positive");
    }
    return checked_mul(u / std::gcd(u, v), v);
}

/// x = residue (mod modulus), stored with residue normalized into [0, modulus).
class Congruence {
public:
    constexpr Congruence(integer residue, integer modulus) : modulus_(modulus) {
        if (modulus < 1) {
            throw invalid_input("congruence modulus must be positive, got " + std::to_string(modulus));
        }
        residue_ = floor_mod(residue, modulus);
    }

    constexpr integer residue() const noexcept { return residue_; }
    constexpr integer modulus() const noexcept { return modulus_; }

    /// True when `x` lies in this residue class.
    constexpr bool holds(integer x) const noexcept { return floor_mod(x, modulus_) == residue_; }

    friend constexpr bool operator==(const Congruence&, const Congruence&) = default;

private:
    integer residue_{};
    integer modulus_{1};
};

using CongruenceSystem = std::vector<Congruence>;

/// The unique solution class of a compatible system, modulo the lcm of its moduli.
struct SolutionClass {
    integer residue{};
    integer modulus{1};

    friend constexpr bool operator==(const SolutionClass&, const SolutionClass&) = default;
    friend constexpr auto operator<=>(const SolutionClass&, const SolutionClass&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SolutionClass& s) {
    return os << s.residue << " (mod " << s.modulus << ")";
}

namespace detail {

// Inverse of `value` modulo `modulus`, given gcd(value, modulus) = 1.
constexpr integer inverse_mod(integer value, integer modulus) {
    integer old_r = floor_mod(value, modulus), r = modulus;
    integer old_s = 1, s = 0;
    while (r != 0) {
        integer q = old_r / r;
        integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return floor_mod(old_s, modulus);
}

constexpr integer mul_mod(integer a, integer b, integer modulus) {
    return static_cast<integer>(static_cast<__int128>(a) * b % modulus);
}

// Merge two congruences known to be compatible.
constexpr SolutionClass merge(const SolutionClass& lhs, const Congruence& rhs) {
    const integer g = std::gcd(lhs.modulus, rhs.modulus());
    const integer lcm = checked_mul(lhs.modulus / g, rhs.modulus());
    const integer reduced = rhs.modulus() / g;
    // lhs.residue + lhs.modulus * t = rhs.residue (mod rhs.modulus)
    const integer diff = (rhs.residue() - lhs.residue) / g;
    const integer t = mul_mod(floor_mod(diff, reduced), inverse_mod(lhs.modulus / g, reduced), reduced);
    // t < reduced, so lhs.modulus * t <= lcm - lhs.modulus and the sum stays below lcm.
    return {lhs.residue + lhs.modulus * t, lcm};
}

}  // namespace detail

/// Pairwise gcd test: a_i = a_j (mod gcd(m_i, m_j)) for all i < j.
[[nodiscard]] constexpr bool is_compatible(std::span<const Congruence> system) {
    if (system.empty()) {
        throw invalid_input("congruence system must contain at least one congruence");
    }
    for (std::size_t i = 0; i < system.size(); ++i) {
        for (std::size_t j = i + 1; j < system.size(); ++j) {
            const integer g = std::gcd(system[i].modulus(), system[j].modulus());
            if (floor_mod(system[i].residue() - system[j].residue(), g) != 0) {
                return false;
            }
        }
    }
    return true;
}

/// Solves the system, or returns std::nullopt when it is incompatible.
/// Throws overflow_error if the lcm of the moduli does not fit in `integer`.
[[nodiscard]] constexpr std::optional<SolutionClass> solve(std::span<const Congruence> system) {
    if (!is_compatible(system)) {
        return std::nullopt;
    }
    SolutionClass acc{system.front().residue(), system.front().modulus()};
    for (const Congruence& c : system.subspan(1)) {
        acc = detail::merge(acc, c);
    }
    return acc;
}

}  // namespace dcrt
