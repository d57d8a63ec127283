#pragma once

// Two-runner lonely runner witnesses.
//
// A runner of speed m at time t = a/Q is at distance ||m a / Q|| from the
// start. When (k+1) m divides Q, that distance depends only on a modulo
// q = Q/m, and the residues where it is at least 1/(k+1) form one cyclic
// interval. For two runners with Q = 3mn the intervals live modulo 3n and
// 3m, each has density above 1/3, and a common residue gives a time at
// which both runners are distant.

#include <algorithm>
#include <optional>
#include <string>

#include "dcrt/checked.hpp"
#include "dcrt/collections.hpp"
#include "dcrt/density.hpp"
#include "dcrt/errors.hpp"
#include "dcrt/rational.hpp"

namespace dcrt {

class RunnerPair {
public:
    RunnerPair(integer speed_m, integer speed_n) : m_(speed_m), n_(speed_n) {
        if (speed_m < 1 || speed_n < 1) {
            throw invalid_input("runner speeds must be positive");
        }
        if (speed_m == speed_n) {
            throw invalid_input("runner speeds must be distinct, both are " + std::to_string(speed_m));
        }
    }

    integer speed_m() const noexcept { return m_; }
    integer speed_n() const noexcept { return n_; }

private:
    integer m_;
    integer n_;
};

/// A time in [0, 1), stored in lowest terms.
class RationalTime {
public:
    RationalTime(integer numerator, integer denominator) : value_(numerator, denominator) {
        if (value_ < Rational(0) || !(value_ < Rational(1))) {
            throw invalid_input("runner time must lie in [0, 1), got " + value_.str());
        }
    }

    integer numerator() const noexcept { return value_.numerator(); }
    integer denominator() const noexcept { return value_.denominator(); }
    const Rational& value() const noexcept { return value_; }

private:
    Rational value_;
};

/// Distance of a runner with the given speed from the start at time t.
[[nodiscard]] inline Rational runner_distance(integer speed, const RationalTime& t) {
    return circle_distance(Rational(checked_mul(speed, t.numerator()), t.denominator()));
}

/// Residues r mod Q/speed at which ||r / (Q/speed)|| >= 1/(k+1).
[[nodiscard]] inline CyclicInterval distant_interval(integer speed, integer period, integer runners) {
    if (speed < 1 || period < 1) {
        throw invalid_input("speed and Q must be positive");
    }
    if (runners < 2) {
        throw invalid_input("runner count k must be at least 2");
    }
    const integer factor = checked_mul(runners + 1, speed);
    if (period % factor != 0) {
        throw invalid_input("Q = " + std::to_string(period) + " must be divisible by (k+1)*speed = " +
                            std::to_string(factor));
    }
    const integer q = period / speed;
    const integer step = q / (runners + 1);
    return CyclicInterval(q, step, (runners - 1) * step + 1);
}

struct DistantWitness {
    RationalTime time;
    Rational distance_m;
    Rational distance_n;
    integer numerator{};  ///< x before reduction, t = x / period
    integer period{};     ///< Q = 3mn
};

/// Smallest x in [0, lcm(3n, 3m)) whose time x/(3mn) leaves both runners at distance >= 1/3.
[[nodiscard]] inline DistantWitness two_runner_witness(const RunnerPair& pair) {
    const integer m = pair.speed_m();
    const integer n = pair.speed_n();
    const integer period = checked_mul(checked_mul<integer>(3, m), n);
    const CyclicInterval a = distant_interval(m, period, 2);  // modulo 3n
    const CyclicInterval b = distant_interval(n, period, 2);  // modulo 3m
    const integer window = checked_lcm(a.modulus(), b.modulus());
    if (!density_guarantee(a.modulus(), b.modulus(), a.size(), b.size())) {
        throw infeasible_error("density hypotheses fail for speeds " + std::to_string(m) + ", " + std::to_string(n));
    }

    // Walk the laps of the interval with the larger modulus in increasing order;
    // within a lap the candidates are consecutive, so the first member of the
    // other interval at or after the lap start is the lap's best candidate.
    const CyclicInterval& outer = a.modulus() >= b.modulus() ? a : b;
    const CyclicInterval& inner = a.modulus() >= b.modulus() ? b : a;
    std::optional<integer> found;
    for (integer lap = outer.start() - outer.modulus(); lap < window && !found; lap += outer.modulus()) {
        const integer lo = std::max<integer>(lap, 0);
        const integer hi = lap + outer.length();
        if (lo < hi) {
            if (const integer x = inner.first_member_at_or_after(lo); x < hi) {
                found = x;
            }
        }
    }
    if (!found) {
        throw infeasible_error("no common distant time found");
    }
    const integer x = *found;
    RationalTime t(x, period);
    return {t, runner_distance(m, t), runner_distance(n, t), x, period};
}

}  // namespace dcrt
