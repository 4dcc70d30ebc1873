#pragma once

#include "tiltwall/rat.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace tiltwall {

// Dense univariate polynomial, coefficients in ascending degree.
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(const Rat& v) { return Poly({v}); }
    static Poly x() { return Poly({Rat(0), Rat(1)}); }
    // prod (x - r_i)
    static Poly from_roots(const std::vector<Rat>& roots);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(int i) const;
    Rat leading() const;

    Rat eval(const Rat& x) const;
    int sign_at(const Rat& x) const { return eval(x).sign(); }
    Poly derivative() const;
    // p(x) -> p(a*x + b)
    Poly compose_affine(const Rat& a, const Rat& b) const;
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q) { return p + (-q); }
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Rat& s, const Poly& p);
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rat> c_;
};

struct DivMod {
    Poly quot, rem;
};
DivMod divmod(const Poly& num, const Poly& den);
Poly gcd(Poly a, Poly b);  // monic, or zero

}  // namespace tiltwall
