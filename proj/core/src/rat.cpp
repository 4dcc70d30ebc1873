#include "tiltwall/rat.hpp"

#include <functional>
#include <ostream>
#include <stdexcept>

namespace tiltwall {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t' && ch != '+') s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto parse_int = [&](const std::string& t) {
        Int v;
        if (t.empty() || t == "-" || v.set_str(t, 10) != 0)
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        return v;
    };

    if (auto slash = s.find('/'); slash != std::string::npos)
        return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));

    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string frac = s.substr(dot + 1);
        bool neg = !s.empty() && s[0] == '-';
        std::string whole = s.substr(neg ? 1 : 0, dot - (neg ? 1 : 0));
        if (whole.empty()) whole = "0";
        if (frac.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
        Int scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Rat r = Rat(parse_int(whole)) + (frac.empty() ? Rat(0) : Rat(parse_int(frac), scale));
        return neg ? -r : r;
    }
    return Rat(parse_int(s));
}

bool Rat::is_half_integer() const {
    Int d = q_.get_den();
    return d == 1 || d == 2;
}

Int Rat::floor() const {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Int Rat::ceil() const {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rat::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    q_ /= o.q_;
    return *this;
}

Rat pow(const Rat& base, unsigned exp) {
    Rat out(1);
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Rat mod(const Rat& a, const Rat& m) {
    if (m.sign() <= 0) throw std::domain_error("mod requires a positive modulus");
    Rat q = a / m;
    return a - m * Rat(q.floor());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

std::size_t hash_value(const Rat& r) {
    std::hash<std::string> h;
    return h(r.num().get_str(16)) * 31 + h(r.den().get_str(16));
}

}  // namespace tiltwall
