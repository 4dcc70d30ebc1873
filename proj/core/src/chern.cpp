#include "tiltwall/chern.hpp"

#include <vector>

namespace tiltwall {

std::string ChernVec2::str() const { return "(" + r.str() + "," + c.str() + "," + d.str() + ")"; }

std::string ChernVec::str() const {
    return "(" + r.str() + "," + c.str() + "," + d.str() + "," + e.str() + ")";
}

namespace {
std::vector<Rat> parse_entries(std::string_view text) {
    std::string s(text);
    std::size_t b = s.find_first_not_of(" \t");
    std::size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty class literal");
    s = s.substr(b, e - b + 1);
    if (!s.empty() && (s.front() == '(' || s.front() == '[')) {
        char close = s.front() == '(' ? ')' : ']';
        if (s.back() != close) throw std::invalid_argument("unbalanced class literal '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    std::vector<Rat> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        out.push_back(Rat::parse(s.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}
}  // namespace

ChernVec parse_class(std::string_view text) {
    auto v = parse_entries(text);
    if (v.size() != 4) throw std::invalid_argument("class literal needs 4 entries: '" + std::string(text) + "'");
    return {v[0], v[1], v[2], v[3]};
}

ChernVec2 parse_class2(std::string_view text) {
    auto v = parse_entries(text);
    if (v.size() != 3 && v.size() != 4)
        throw std::invalid_argument("class literal needs 3 or 4 entries: '" + std::string(text) + "'");
    return {v[0], v[1], v[2]};
}

ChernVec twist(const ChernVec& v, const Rat& b) {
    Rat b2 = b * b, b3 = b2 * b;
    return {v.r, v.c - b * v.r, v.d - b * v.c + b2 * v.r / Rat(2),
            v.e - b * v.d + b2 * v.c / Rat(2) - b3 * v.r / Rat(6)};
}

ChernVec2 twist(const ChernVec2& v, const Rat& b) {
    return {v.r, v.c - b * v.r, v.d - b * v.c + b * b * v.r / Rat(2)};
}

ChernVec tensor_O(const ChernVec& v, long n) { return twist(v, Rat(-n)); }

ChernVec line_bundle(long n) { return tensor_O({Rat(1), Rat(0), Rat(0), Rat(0)}, n); }

ChernVec dual_class(const ChernVec& v) { return {-v.r, v.c, -v.d, v.e}; }

Rat discriminant(const ChernVec2& v) { return v.c * v.c - Rat(2) * v.r * v.d; }

std::string lattice_violation(const ChernVec& v, const Profile& p) {
    if (!v.r.is_integer()) return "ch0 " + v.r.str() + " is not integral";
    if (!in_lattice(v.c, p.den1)) return "ch1 " + v.c.str() + " is not integral";
    if (!in_lattice(v.d, p.den2)) return "ch2 " + v.d.str() + " is not in (1/" + std::to_string(p.den2) + ")Z";
    if (!in_lattice(v.e, p.den3)) return "ch3 " + v.e.str() + " is not in (1/" + std::to_string(p.den3) + ")Z";
    if (p.den2 == 2 && !discriminant(v).is_integer())
        return "discriminant " + discriminant(v).str() + " is not integral";
    return {};
}

bool lattice_check(const ChernVec& v, const Profile& p) { return lattice_violation(v, p).empty(); }

bool lattice_check(const ChernVec2& v, const Profile& p) {
    return lattice_check(ChernVec{v.r, v.c, v.d, Rat(0)}, p);
}

ChernVec ideal_sheaf_class(const Rat& d, const Rat& e, const Profile& p) {
    if (d.sign() <= 0) throw LatticeError("curve degree " + d.str() + " must be positive");
    if (p.integral_curve_degree && !d.is_integer())
        throw LatticeError("curve degree " + d.str() + " must be integral on " + p.name);
    ChernVec v{Rat(1), Rat(0), -d, e};
    if (auto why = lattice_violation(v, p); !why.empty()) throw LatticeError(why + " on " + p.name);
    return v;
}

}  // namespace tiltwall
