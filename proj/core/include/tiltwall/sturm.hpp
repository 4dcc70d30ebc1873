#pragma once

#include "tiltwall/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

// Real interval with optional infinite ends; an absent bound means infinity.
struct Interval {
    std::optional<Rat> lo, hi;
    bool lo_closed = true, hi_closed = true;

    static Interval closed(const Rat& a, const Rat& b) { return {a, b, true, true}; }
    static Interval open(const Rat& a, const Rat& b) { return {a, b, false, false}; }
    static Interval at_least(const Rat& a) { return {a, std::nullopt, true, false}; }
    static Interval greater_than(const Rat& a) { return {a, std::nullopt, false, false}; }
    static Interval at_most(const Rat& b) { return {std::nullopt, b, false, true}; }
    static Interval less_than(const Rat& b) { return {std::nullopt, b, false, false}; }
    static Interval real_line() { return {std::nullopt, std::nullopt, false, false}; }

    bool contains(const Rat& x) const;
    bool is_point() const { return lo && hi && *lo == *hi; }
    std::string str() const;
};

enum class SignClass {
    StrictlyPositive,
    StrictlyNegative,
    NonNegativeWithRoots,
    NonPositiveWithRoots,
    Mixed,
    IdenticallyZero,
};

const char* to_string(SignClass s);
std::optional<SignClass> sign_class_from_string(const std::string& s);

// Isolating interval of one real root; lo == hi when the root is rational and hit exactly.
struct RootBracket {
    Rat lo, hi;
    bool exact() const { return lo == hi; }
};

struct SignReport {
    SignClass kind;
    std::vector<RootBracket> roots;  // distinct roots of p lying in the interval, ascending
};

SignReport sturm_sign(const Poly& p, const Interval& iv);

// Distinct real roots of p in iv.
std::size_t count_roots(const Poly& p, const Interval& iv);

// Sturm chain of the squarefree part of p.
std::vector<Poly> sturm_chain(const Poly& p);

}  // namespace tiltwall
