#include "tiltwall/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace tiltwall {

namespace {

constexpr unsigned long kTrialDivisionLimit = 20000;

// Writes n = s^2 * m and returns {s, m}; m may keep large square factors.
std::pair<Int, Int> split_square(Int n) {
    Int s = 1;
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        return {s, Int(1)};
    }
    for (unsigned long p = 2; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
        Int pp = Int(p) * p;
        if (pp > n) break;
        while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
            n /= pp;
            s *= p;
        }
    }
    if (n > 1 && mpz_perfect_square_p(n.get_mpz_t())) {
        Int r;
        mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
        return {s * r, Int(1)};
    }
    return {s, n};
}

int sign_one_radical(const Rat& a, const Rat& b, const Rat& c) {
    int sb = c.is_zero() ? 0 : b.sign();
    int sa = a.sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Rat lhs = a * a, rhs = b * b * c;
    if (lhs > rhs) return sa;
    if (lhs < rhs) return sb;
    return 0;
}

}  // namespace

Surd::Surd(const Rat& a, const Rat& b, const Rat& c) : a_(a) {
    if (c.sign() < 0) throw std::domain_error("negative radicand " + c.str());
    if (b.is_zero() || c.is_zero()) return;
    // sqrt(p/q) = sqrt(p*q)/q
    Int n = c.num() * c.den();
    auto [s, m] = split_square(n);
    Rat coeff = b * Rat(s, c.den());
    if (m == 1) {
        a_ += coeff;
        return;
    }
    b_ = coeff;
    c_ = Rat(m);
}

int Surd::sign() const { return sign_one_radical(a_, b_, c_); }

double Surd::to_double() const {
    return a_.to_double() + b_.to_double() * std::sqrt(c_.to_double());
}

std::string Surd::str() const {
    if (b_.is_zero()) return a_.str();
    std::ostringstream os;
    if (!a_.is_zero()) os << a_ << (b_.sign() > 0 ? " + " : " - ");
    else if (b_.sign() < 0) os << "-";
    Rat mag = b_.abs();
    if (mag != Rat(1)) os << mag << "*";
    os << "sqrt(" << c_ << ")";
    return os.str();
}

Int isqrt_floor(const Rat& x) {
    if (x.sign() < 0) throw std::domain_error("square root of negative " + x.str());
    Int f = x.floor(), r;
    mpz_sqrt(r.get_mpz_t(), f.get_mpz_t());
    return r;
}

Int Surd::floor() const {
    Int guess = a_.floor();
    if (!b_.is_zero()) {
        Int t = isqrt_floor(b_ * b_ * c_);
        guess += (b_.sign() > 0 ? t : Int(-t - 1));
    }
    while (Surd(Rat(guess)) > *this) guess -= 1;
    while (Surd(Rat(Int(guess + 1))) <= *this) guess += 1;
    return guess;
}

Int Surd::ceil() const {
    Int f = floor();
    return (Surd(Rat(f)) == *this) ? f : Int(f + 1);
}

Surd Surd::operator-() const {
    Surd out = *this;
    out.a_ = -a_;
    out.b_ = -b_;
    return out;
}

Surd operator+(const Surd& x, const Rat& q) {
    Surd out = x;
    out.a_ += q;
    return out;
}

Surd operator*(const Rat& q, const Surd& x) {
    if (q.is_zero()) return Surd();
    Surd out = x;
    out.a_ *= q;
    out.b_ *= q;
    return out;
}

Surd operator+(const Surd& x, const Surd& y) {
    if (y.b_.is_zero()) return x + y.a_;
    if (x.b_.is_zero()) return y + x.a_;
    if (x.c_ != y.c_) throw std::domain_error("adding surds with different radicands");
    return Surd(x.a_ + y.a_, x.b_ + y.b_, x.c_);
}

int sign_two_radicals(const Rat& a, const Rat& b, const Rat& m, const Rat& c, const Rat& n) {
    if (m.sign() < 0 || n.sign() < 0) throw std::domain_error("negative radicand");
    if (c.is_zero() || n.is_zero()) return sign_one_radical(a, b, m);
    if (b.is_zero() || m.is_zero()) return sign_one_radical(a, c, n);
    if (m == n) return sign_one_radical(a, b + c, m);
    // X = a + b*sqrt(m) against Y = -c*sqrt(n)
    int sx = sign_one_radical(a, b, m);
    int sy = -c.sign();
    if (sx != sy) return sx > sy ? 1 : -1;
    // same nonzero sign: compare X^2 with Y^2
    int sq = sign_one_radical(a * a + b * b * m - c * c * n, Rat(2) * a * b, m);
    return sx * sq;
}

bool operator==(const Surd& x, const Surd& y) {
    if (x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_) return true;
    return surd_cmp(x, y) == Ordering::EQ;
}

std::strong_ordering operator<=>(const Surd& x, const Surd& y) {
    switch (surd_cmp(x, y)) {
        case Ordering::LT: return std::strong_ordering::less;
        case Ordering::GT: return std::strong_ordering::greater;
        default: return std::strong_ordering::equal;
    }
}

Ordering surd_cmp(const Surd& x, const Surd& y) {
    int s = sign_two_radicals(x.a() - y.a(), x.b(), x.c(), -y.b(), y.c());
    return s < 0 ? Ordering::LT : s > 0 ? Ordering::GT : Ordering::EQ;
}

const char* to_string(Ordering o) {
    switch (o) {
        case Ordering::LT: return "LT";
        case Ordering::EQ: return "EQ";
        case Ordering::GT: return "GT";
    }
    return "?";
}

}  // namespace tiltwall
