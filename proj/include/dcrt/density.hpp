#pragma once

// Lower bounds on the number of solutions of the two-congruence system over
// collections of residue classes, and the extremal machinery behind them.
//
// Arbitrary collections: the class counts f(i, A) are bounded by m/g and sum
// to |A|. Pairing them against f(i, B) is minimised by the reversed sorted
// pairing, and that in turn is minimised by the step-shaped extremal profiles,
// whose reversed dot product has a closed form.
//
// Cyclic intervals: an interval splits into full laps of length g, each of
// which meets every class modulo g once, plus a short tail.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dcrt/checked.hpp"
#include "dcrt/collections.hpp"
#include "dcrt/errors.hpp"

namespace dcrt {

/// size = quotient * divisor + remainder, 0 <= remainder < divisor.
struct SizeDecomposition {
    integer size{};
    integer divisor{1};
    integer quotient{};
    integer remainder{};

    friend constexpr bool operator==(const SizeDecomposition&, const SizeDecomposition&) = default;
};

[[nodiscard]] constexpr SizeDecomposition decompose(integer size, integer divisor) {
    if (divisor < 1) {
        throw invalid_input("decomposition divisor must be positive");
    }
    if (size < 0) {
        throw invalid_input("decomposed size must be non-negative");
    }
    return {size, divisor, size / divisor, size % divisor};
}

/// The three sums of the rearrangement inequality for sorted a, b and a permutation sigma.
struct RearrangementSums {
    double lower{};     ///< sum a_k b_{n-k+1}
    double permuted{};  ///< sum a_k b_{sigma(k)}
    double upper{};     ///< sum a_k b_k
};

/// `sigma` is 0-based: sigma[k] is the index of b paired with a[k].
inline RearrangementSums rearrangement_bounds(std::span<const double> a, std::span<const double> b,
                                              std::span<const std::size_t> sigma) {
    if (a.size() != b.size() || a.size() != sigma.size()) {
        throw invalid_input("rearrangement sequences and permutation must have equal lengths");
    }
    if (!std::is_sorted(a.begin(), a.end()) || !std::is_sorted(b.begin(), b.end())) {
        throw invalid_input("rearrangement sequences must be sorted non-decreasing");
    }
    std::vector<bool> seen(sigma.size(), false);
    for (std::size_t s : sigma) {
        if (s >= sigma.size() || seen[s]) {
            throw invalid_input("sigma is not a permutation of 0.." + std::to_string(sigma.size()) + "-1");
        }
        seen[s] = true;
    }
    const std::size_t n = a.size();
    RearrangementSums out;
    for (std::size_t k = 0; k < n; ++k) {
        out.lower += a[k] * b[n - 1 - k];
        out.permuted += a[k] * b[sigma[k]];
        out.upper += a[k] * b[k];
    }
    return out;
}

/// Step sequence with the given sum and per-term cap that minimises reversed pairings:
/// zeros, then one partial term, then copies of the cap.
struct ExtremalProfile {
    integer length{};
    integer cap{};
    std::vector<integer> values;
};

[[nodiscard]] inline ExtremalProfile extremal_profile(integer size, integer cap, integer length) {
    if (cap < 1 || length < 1 || size < 0) {
        throw invalid_input("extremal profile needs cap >= 1, length >= 1 and size >= 0");
    }
    if (static_cast<__int128>(size) > static_cast<__int128>(cap) * length) {
        throw infeasible_error("size " + std::to_string(size) + " exceeds cap * length = " +
                               std::to_string(cap) + " * " + std::to_string(length));
    }
    const integer full = size / cap;
    const integer partial = size - cap * full;
    // 1-based position n - full holds the partial term; everything after it is saturated.
    const integer pivot = length - full;
    ExtremalProfile out{length, cap, std::vector<integer>(static_cast<std::size_t>(length), 0)};
    for (integer k = 1; k <= length; ++k) {
        integer& v = out.values[static_cast<std::size_t>(k - 1)];
        v = k < pivot ? 0 : (k == pivot ? partial : cap);
    }
    return out;
}

enum class BoundCase {
    empty,     ///< s < n: the reversed extremal profiles never overlap
    boundary,  ///< s = n: a single overlapping term r_A r_B
    overlap,   ///< s > n
};

constexpr std::string_view to_string(BoundCase c) noexcept {
    switch (c) {
        case BoundCase::empty:
            return "empty";
        case BoundCase::boundary:
            return "boundary";
        case BoundCase::overlap:
            return "overlap";
    }
    return "unknown";
}

struct BoundResult {
    integer lower_bound{};
    BoundCase case_tag{BoundCase::empty};

    friend constexpr bool operator==(const BoundResult&, const BoundResult&) = default;
};

/// Closed form of sum_k a*_k b*_{n-k+1} for the two extremal profiles of common length n.
[[nodiscard]] inline BoundResult extremal_sum(integer size_a, integer cap_a, integer size_b, integer cap_b,
                                              integer length) {
    if (cap_a < 1 || cap_b < 1 || length < 1 || size_a < 0 || size_b < 0) {
        throw invalid_input("extremal sum needs positive caps and length and non-negative sizes");
    }
    if (static_cast<__int128>(size_a) > static_cast<__int128>(cap_a) * length ||
        static_cast<__int128>(size_b) > static_cast<__int128>(cap_b) * length) {
        throw infeasible_error("extremal sum sizes exceed cap * length");
    }
    const SizeDecomposition da = decompose(size_a, cap_a);
    const SizeDecomposition db = decompose(size_b, cap_b);
    const integer s = da.quotient + db.quotient + 1;
    if (s < length) {
        return {0, BoundCase::empty};
    }
    if (s == length) {
        return {checked_mul(da.remainder, db.remainder), BoundCase::boundary};
    }
    const integer middle = checked_mul(checked_mul(s - length - 1, cap_a), cap_b);
    const integer ends = checked_add(checked_mul(da.remainder, cap_b), checked_mul(db.remainder, cap_a));
    return {checked_add(middle, ends), BoundCase::overlap};
}

namespace detail {

inline void check_sizes(integer m, integer n, integer size_a, integer size_b) {
    if (m < 1 || n < 1) {
        throw invalid_input("moduli must be positive");
    }
    if (size_a < 0 || size_a > m) {
        throw invalid_input("size " + std::to_string(size_a) + " is outside [0, " + std::to_string(m) + "]");
    }
    if (size_b < 0 || size_b > n) {
        throw invalid_input("size " + std::to_string(size_b) + " is outside [0, " + std::to_string(n) + "]");
    }
}

}  // namespace detail

/// Lower bound on the solution count for arbitrary collections of the given sizes.
/// Sizes are decomposed by m/g and n/g.
[[nodiscard]] inline BoundResult bound_arbitrary(integer m, integer n, integer size_a, integer size_b) {
    detail::check_sizes(m, n, size_a, size_b);
    const integer g = std::gcd(m, n);
    const integer ma = m / g;
    const integer nb = n / g;
    const SizeDecomposition da = decompose(size_a, ma);
    const SizeDecomposition db = decompose(size_b, nb);
    const integer sum = da.quotient + db.quotient;
    if (sum < g - 1) {
        return {0, BoundCase::empty};
    }
    if (sum == g - 1) {
        return {checked_mul(da.remainder, db.remainder), BoundCase::boundary};
    }
    // (A + B - g) mn/g^2 + r_A n/g + r_B m/g
    const integer bulk = checked_mul(checked_mul(sum - g, ma), nb);
    return {checked_add(bulk, checked_add(checked_mul(da.remainder, nb), checked_mul(db.remainder, ma))),
            BoundCase::overlap};
}

/// Lower bound on the solution count when both collections are cyclic intervals.
/// Sizes are decomposed by g itself.
[[nodiscard]] inline integer bound_intervals(integer m, integer n, integer size_a, integer size_b) {
    detail::check_sizes(m, n, size_a, size_b);
    const integer g = std::gcd(m, n);
    const SizeDecomposition da = decompose(size_a, g);
    const SizeDecomposition db = decompose(size_b, g);
    integer h = checked_mul(checked_mul(da.quotient, db.quotient), g);
    h = checked_add(h, checked_mul(da.quotient, db.remainder));
    h = checked_add(h, checked_mul(db.quotient, da.remainder));
    return checked_add(h, std::max<integer>(0, da.remainder + db.remainder - g));
}

/// Whether distinct moduli and densities strictly above 1/3 hold; these force a solution for intervals.
[[nodiscard]] constexpr bool density_guarantee(integer m, integer n, integer size_a, integer size_b) noexcept {
    using wide = __int128;
    return m != n && 3 * static_cast<wide>(size_a) > m && 3 * static_cast<wide>(size_b) > n;
}

/// sum_k a_k b_{n-k+1} after sorting both class-count vectors ascending; the smallest
/// value any pairing of the two count vectors can take.
[[nodiscard]] inline integer reversed_pairing_sum(const ResiduePartitionCount& fa, const ResiduePartitionCount& fb) {
    if (fa.divisor != fb.divisor) {
        throw invalid_input("partition counts must share a divisor");
    }
    std::vector<integer> a = fa.counts;
    std::vector<integer> b = fb.counts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end(), std::greater<>{});
    integer total = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        total = checked_add(total, checked_mul(a[k], b[k]));
    }
    return total;
}

/// Density exactly 1/3 on both sides and no solutions: A = {0..M-1} mod 3M, B = {M..3M-1} mod 6M.
struct TightnessInstance {
    integer scale{};
    CyclicInterval a;
    CyclicInterval b;
};

[[nodiscard]] inline TightnessInstance tightness_instance(integer scale) {
    if (scale < 1) {
        throw invalid_input("tightness scale M must be positive");
    }
    const integer m = checked_mul<integer>(3, scale);
    const integer n = checked_mul<integer>(6, scale);
    (void)checked_mul(m, n);
    return {scale, CyclicInterval(m, 0, scale), CyclicInterval(n, scale, 2 * scale)};
}

}  // namespace dcrt
