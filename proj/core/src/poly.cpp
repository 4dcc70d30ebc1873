#include "tiltwall/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace tiltwall {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::from_roots(const std::vector<Rat>& roots) {
    Poly out = constant(1);
    for (const Rat& r : roots) out = out * Poly({-r, Rat(1)});
    return out;
}

Rat Poly::coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rat(0);
}

Rat Poly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat Poly::eval(const Rat& x) const {
    Rat acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * c_[i]);
    return Poly(std::move(d));
}

Poly Poly::compose_affine(const Rat& a, const Rat& b) const {
    Poly lin({b, a}), out, power = constant(1);
    for (const Rat& ci : c_) {
        out = out + ci * power;
        power = power * lin;
    }
    return out;
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return (Rat(1) / leading()) * *this;
}

Poly Poly::operator-() const { return Rat(-1) * *this; }

Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rat> out(std::max(p.c_.size(), q.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = p.coeff(int(i)) + q.coeff(int(i));
    return Poly(std::move(out));
}

Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rat> out(p.c_.size() + q.c_.size() - 1);
    for (std::size_t i = 0; i < p.c_.size(); ++i)
        for (std::size_t j = 0; j < q.c_.size(); ++j) out[i + j] += p.c_[i] * q.c_[j];
    return Poly(std::move(out));
}

Poly operator*(const Rat& s, const Poly& p) {
    std::vector<Rat> out = p.c_;
    for (Rat& c : out) c *= s;
    return Poly(std::move(out));
}

std::string Poly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[i];
        if (c.is_zero()) continue;
        Rat mag = c.abs();
        if (first) os << (c.sign() < 0 ? "-" : "");
        else os << (c.sign() < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || mag != Rat(1)) os << mag;
        if (i > 0) os << (mag != Rat(1) ? "*" : "") << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

DivMod divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rat> rem = num.coeffs();
    int dd = den.degree();
    if (num.degree() < dd) return {Poly(), num};
    std::vector<Rat> quot(num.degree() - dd + 1);
    Rat lead = den.leading();
    for (int i = num.degree(); i >= dd; --i) {
        Rat f = rem[i] / lead;
        quot[i - dd] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).rem;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace tiltwall
