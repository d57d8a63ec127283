#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dcrt {

/// Machine integer used for every residue, modulus and count.
using integer = std::int64_t;

/// A fixed-width product or sum did not fit in `integer`.
class overflow_error : public std::overflow_error {
public:
    explicit overflow_error(const std::string& what) : std::overflow_error(what) {}
};

/// Arguments violate a documented precondition (empty system, modulus < 1, ...).
class invalid_input : public std::invalid_argument {
public:
    explicit invalid_input(const std::string& what) : std::invalid_argument(what) {}
};

/// No object satisfying the requested constraints exists.
class infeasible_error : public std::domain_error {
public:
    explicit infeasible_error(const std::string& what) : std::domain_error(what) {}
};

/// A brute-force enumeration was refused because it exceeds its size cap.
class enumeration_cap_exceeded : public std::length_error {
public:
    enumeration_cap_exceeded(integer requested, integer cap)
        : std::length_error("enumeration of " + std::to_string(requested) +
                            " candidates exceeds the cap of " + std::to_string(cap)),
          requested_(requested),
          cap_(cap) {}

    integer requested() const noexcept { return requested_; }
    integer cap() const noexcept { return cap_; }

private:
    integer requested_;
    integer cap_;
};

}  // namespace dcrt
