#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace tiltwall {

using Int = mpz_class;

// Exact rational in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(int v) : q_(v) {}
    Rat(long v) : q_(v) {}
    Rat(long long v) : q_(Int(std::to_string(v))) {}
    Rat(const Int& v) : q_(v) {}
    Rat(const Int& num, const Int& den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    // Accepts "p", "-p/q" and "p.q" decimal literals.
    static Rat parse(std::string_view text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_half_integer() const;  // in (1/2)Z

    Int floor() const;
    Int ceil() const;
    Rat abs() const;
    double to_double() const { return q_.get_d(); }
    // "p" for integers, "p/q" otherwise.
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

Rat pow(const Rat& base, unsigned exp);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

// Non-negative representative of a modulo m, m > 0.
Rat mod(const Rat& a, const Rat& m);

std::ostream& operator<<(std::ostream& os, const Rat& r);

std::size_t hash_value(const Rat& r);

}  // namespace tiltwall

template <>
struct std::hash<tiltwall::Rat> {
    std::size_t operator()(const tiltwall::Rat& r) const { return tiltwall::hash_value(r); }
};
