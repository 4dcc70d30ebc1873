#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/surd.hpp"

#include <optional>
#include <string>

namespace tiltwall {

// A point of the upper half plane in (beta, alpha^2) coordinates.
struct Point {
    Rat beta;
    Rat alpha_sq;
};

struct Wall {
    Rat center;
    Rat radius_sq;
    ChernVec2 v, w;

    Surd left() const { return Surd(center, Rat(-1), radius_sq); }
    Surd right() const { return Surd(center, Rat(1), radius_sq); }
};

struct WallKind {
    enum class Tag { Semicircle, Vertical, Degenerate };
    Tag tag = Tag::Degenerate;
    Wall wall;          // Semicircle
    Rat beta;           // Vertical
    bool actual = true; // false for the numerical vertical wall of a rank-zero class

    bool is_semicircle() const { return tag == Tag::Semicircle; }
};

// Q_{alpha,beta}(v) <= 0 region. For a disk, center/radius_sq are the circle data and
// radius_sq <= 0 means the open negative region is empty. A half-plane arises when
// Delta(v) = 0 with a nonzero linear term: Q < 0 exactly for negative_side*(beta - center) > 0.
struct QRegion {
    enum class Shape { Disk, HalfPlane, Empty, Unbounded };
    Shape shape = Shape::Empty;
    Rat center;
    Rat radius_sq;
    int negative_side = 0;

    bool nonempty() const { return shape == Shape::Disk ? radius_sq.sign() > 0 : shape != Shape::Empty; }
    Surd left() const { return Surd(center, Rat(-1), radius_sq); }
    Surd right() const { return Surd(center, Rat(1), radius_sq); }
};

const char* to_string(QRegion::Shape s);

std::optional<Rat> mu(const ChernVec2& v);  // nullopt is +infinity
std::optional<Rat> nu(const ChernVec2& v, const Point& p);

WallKind wall(const ChernVec2& v, const ChernVec2& w);

Rat q_value(const ChernVec& v, const Point& p);
QRegion q_region(const ChernVec& v);
// The class whose numerical walls against v coincide with Q(v) = 0.
inline ChernVec2 q_partner(const ChernVec& v) { return {v.c, Rat(2) * v.d, Rat(3) * v.e}; }

enum class WallRelation { Identical, NestedFirstOuter, NestedSecondOuter, Disjoint };
const char* to_string(WallRelation r);

struct WallConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

// Both walls must be semicircles of the same class v.
WallRelation wall_compare(const ChernVec2& v, const WallKind& w1, const WallKind& w2);

Rat det3(const ChernVec2& a, const ChernVec2& b, const ChernVec2& c);

// beta0 = p/q in lowest terms; true when ch1^{beta0}(v) is 0 or 1/q.
bool no_wall_on_ray(const ChernVec2& v, const Rat& beta0);

struct NuZero {
    enum class Kind { None, Point, WholeLine };
    Kind kind = Kind::None;
    Rat alpha_sq;
};
NuZero nu_zero_alpha_sq(const ChernVec2& v, const Rat& beta);

// Smaller root of ch2^beta(v) = 0 for r > 0.
Surd bar_beta(const ChernVec2& v);

}  // namespace tiltwall
