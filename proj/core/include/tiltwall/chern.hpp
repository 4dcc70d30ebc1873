#pragma once

#include "tiltwall/profile.hpp"
#include "tiltwall/rat.hpp"

#include <string>
#include <string_view>

namespace tiltwall {

// H-normalized truncated character (r, c, d).
struct ChernVec2 {
    Rat r, c, d;

    friend bool operator==(const ChernVec2&, const ChernVec2&) = default;
    friend auto operator<=>(const ChernVec2& a, const ChernVec2& b) {
        if (auto o = a.r <=> b.r; o != 0) return o;
        if (auto o = a.c <=> b.c; o != 0) return o;
        return a.d <=> b.d;
    }
    ChernVec2 operator-(const ChernVec2& o) const { return {r - o.r, c - o.c, d - o.d}; }
    ChernVec2 operator+(const ChernVec2& o) const { return {r + o.r, c + o.c, d + o.d}; }
    std::string str() const;
};

// H-normalized Chern character (r, c, d, e).
struct ChernVec {
    Rat r, c, d, e;

    ChernVec2 truncate() const { return {r, c, d}; }
    friend bool operator==(const ChernVec&, const ChernVec&) = default;
    ChernVec operator+(const ChernVec& o) const { return {r + o.r, c + o.c, d + o.d, e + o.e}; }
    ChernVec operator-(const ChernVec& o) const { return {r - o.r, c - o.c, d - o.d, e - o.e}; }
    std::string str() const;
};

// Parses "(r,c,d,e)" or "(r,c,d)"; brackets optional, entries rational.
ChernVec parse_class(std::string_view text);
ChernVec2 parse_class2(std::string_view text);

// ch * exp(-beta H)
ChernVec twist(const ChernVec& v, const Rat& beta);
ChernVec2 twist(const ChernVec2& v, const Rat& beta);
ChernVec tensor_O(const ChernVec& v, long n);
ChernVec line_bundle(long n);  // ch(O(nH))

// Class of the derived dual RHom(-, O)[1]. The actual dual object can differ
// by a zero-dimensional sheaf T, so e of the true dual is >= the e returned.
ChernVec dual_class(const ChernVec& v);

Rat discriminant(const ChernVec2& v);
inline Rat discriminant(const ChernVec& v) { return discriminant(v.truncate()); }

bool lattice_check(const ChernVec& v, const Profile& p);
bool lattice_check(const ChernVec2& v, const Profile& p);
// Empty when the class is in the lattice; otherwise names the violated entry.
std::string lattice_violation(const ChernVec& v, const Profile& p);

ChernVec ideal_sheaf_class(const Rat& d, const Rat& e, const Profile& p);

}  // namespace tiltwall
