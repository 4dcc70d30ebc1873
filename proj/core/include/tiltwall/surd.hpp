#pragma once

#include "tiltwall/rat.hpp"

#include <compare>
#include <string>

namespace tiltwall {

// a + b*sqrt(c), c >= 0. Canonical form pulls square factors out of c (trial
// division up to a fixed bound, so very large radicands may stay unreduced;
// comparisons never rely on canonical form).
class Surd {
public:
    Surd() = default;
    Surd(const Rat& a) : a_(a) {}
    Surd(int a) : a_(a) {}
    Surd(const Rat& a, const Rat& b, const Rat& c);

    static Surd sqrt(const Rat& c) { return Surd(Rat(0), Rat(1), c); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Rat& c() const { return c_; }
    bool is_rational() const { return b_.is_zero(); }

    int sign() const;
    Int floor() const;
    Int ceil() const;
    double to_double() const;
    std::string str() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& x, const Rat& q);
    friend Surd operator-(const Surd& x, const Rat& q) { return x + (-q); }
    friend Surd operator*(const Rat& q, const Surd& x);
    // Only defined when the irrational parts share a radicand.
    friend Surd operator+(const Surd& x, const Surd& y);
    friend Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

    friend bool operator==(const Surd& x, const Surd& y);
    friend std::strong_ordering operator<=>(const Surd& x, const Surd& y);

private:
    Rat a_, b_, c_;
};

enum class Ordering { LT, EQ, GT };

Ordering surd_cmp(const Surd& x, const Surd& y);
const char* to_string(Ordering o);

// Sign of a + b*sqrt(m) + c*sqrt(n) with m, n >= 0.
int sign_two_radicals(const Rat& a, const Rat& b, const Rat& m, const Rat& c, const Rat& n);

// floor(sqrt(x)) for x >= 0.
Int isqrt_floor(const Rat& x);

}  // namespace tiltwall
