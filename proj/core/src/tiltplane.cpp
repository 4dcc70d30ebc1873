#include "tiltwall/tiltplane.hpp"

#include <stdexcept>

namespace tiltwall {

const char* to_string(QRegion::Shape s) {
    switch (s) {
        case QRegion::Shape::Disk: return "disk";
        case QRegion::Shape::HalfPlane: return "half_plane";
        case QRegion::Shape::Empty: return "empty";
        case QRegion::Shape::Unbounded: return "unbounded";
    }
    return "?";
}

const char* to_string(WallRelation r) {
    switch (r) {
        case WallRelation::Identical: return "Identical";
        case WallRelation::NestedFirstOuter: return "Nested(first outer)";
        case WallRelation::NestedSecondOuter: return "Nested(second outer)";
        case WallRelation::Disjoint: return "Disjoint";
    }
    return "?";
}

std::optional<Rat> mu(const ChernVec2& v) {
    if (v.r.is_zero()) return std::nullopt;
    return v.c / v.r;
}

std::optional<Rat> nu(const ChernVec2& v, const Point& p) {
    ChernVec2 t = twist(v, p.beta);
    if (t.c.is_zero()) return std::nullopt;
    return (t.d - p.alpha_sq * t.r / Rat(2)) / t.c;
}

// Equal tilt slopes reduce to  -C + B*beta - D*(beta^2 + alpha^2)/2 = 0.
WallKind wall(const ChernVec2& v, const ChernVec2& w) {
    Rat D = v.r * w.c - w.r * v.c;
    Rat B = v.r * w.d - w.r * v.d;
    Rat C = v.c * w.d - w.c * v.d;
    WallKind out;
    if (!D.is_zero()) {
        Rat s = B / D;
        Rat rho2 = s * s - Rat(2) * C / D;
        if (rho2.sign() > 0) {
            out.tag = WallKind::Tag::Semicircle;
            out.wall = {s, rho2, v, w};
        }
        return out;
    }
    if (!B.is_zero()) {
        out.tag = WallKind::Tag::Vertical;
        out.beta = C / B;
        out.actual = !v.r.is_zero();
    }
    return out;
}

Rat q_value(const ChernVec& v, const Point& p) {
    ChernVec t = twist(v, p.beta);
    return p.alpha_sq * discriminant(v) + Rat(4) * t.d * t.d - Rat(6) * t.c * t.e;
}

// Q = Delta*(alpha^2 + beta^2) + (6re - 2cd)*beta + 4d^2 - 6ce
QRegion q_region(const ChernVec& v) {
    Rat delta = discriminant(v);
    Rat lin = Rat(6) * v.r * v.e - Rat(2) * v.c * v.d;
    Rat cst = Rat(4) * v.d * v.d - Rat(6) * v.c * v.e;
    QRegion q;
    if (delta.sign() > 0) {
        q.center = -lin / (Rat(2) * delta);
        q.radius_sq = q.center * q.center - cst / delta;
        q.shape = q.radius_sq.sign() > 0 ? QRegion::Shape::Disk : QRegion::Shape::Empty;
        return q;
    }
    if (delta.sign() < 0) {
        q.shape = QRegion::Shape::Unbounded;
        q.center = -lin / (Rat(2) * delta);
        q.radius_sq = q.center * q.center - cst / delta;
        return q;
    }
    if (!lin.is_zero()) {
        q.shape = QRegion::Shape::HalfPlane;
        q.center = -cst / lin;
        q.negative_side = -lin.sign();
        return q;
    }
    q.shape = cst.sign() < 0 ? QRegion::Shape::Unbounded : QRegion::Shape::Empty;
    return q;
}

Rat det3(const ChernVec2& a, const ChernVec2& b, const ChernVec2& c) {
    return a.r * (b.c * c.d - b.d * c.c) - a.c * (b.r * c.d - b.d * c.r) + a.d * (b.r * c.c - b.c * c.r);
}

WallRelation wall_compare(const ChernVec2& v, const WallKind& w1, const WallKind& w2) {
    if (!w1.is_semicircle() || !w2.is_semicircle())
        throw std::invalid_argument("wall_compare needs two semicircular walls");
    const Wall& a = w1.wall;
    const Wall& b = w2.wall;
    bool dependent = det3(v, a.w, b.w).is_zero();
    bool same = a.center == b.center && a.radius_sq == b.radius_sq;
    if (dependent != same)
        throw WallConsistencyError("walls " + a.w.str() + " and " + b.w.str() + " of " + v.str() +
                                   ": linear dependence and coincidence disagree");
    if (same) return WallRelation::Identical;

    Surd al = a.left(), ar = a.right(), bl = b.left(), br = b.right();
    if (al <= bl && br <= ar) return WallRelation::NestedFirstOuter;
    if (bl <= al && ar <= br) return WallRelation::NestedSecondOuter;
    if (ar <= bl || br <= al) return WallRelation::Disjoint;
    throw WallConsistencyError("walls " + a.w.str() + " and " + b.w.str() + " of " + v.str() + " cross");
}

bool no_wall_on_ray(const ChernVec2& v, const Rat& beta0) {
    Rat c = v.c - beta0 * v.r;
    return c.is_zero() || c == Rat(Int(1), beta0.den());
}

NuZero nu_zero_alpha_sq(const ChernVec2& v, const Rat& beta) {
    if (v.r.is_zero() && v.c.is_zero())
        throw std::invalid_argument("nu_zero_alpha_sq needs r != 0 or c != 0");
    ChernVec2 t = twist(v, beta);
    NuZero out;
    if (t.c.is_zero()) return out;
    if (t.r.is_zero()) {
        if (t.d.is_zero()) out.kind = NuZero::Kind::WholeLine;
        return out;
    }
    Rat a2 = Rat(2) * t.d / t.r;
    if (a2.sign() > 0) {
        out.kind = NuZero::Kind::Point;
        out.alpha_sq = a2;
    }
    return out;
}

Surd bar_beta(const ChernVec2& v) {
    if (v.r.sign() <= 0) throw std::domain_error("bar_beta needs positive rank");
    Rat delta = discriminant(v);
    if (delta.sign() < 0) throw std::domain_error("bar_beta needs nonnegative discriminant");
    return Surd(v.c / v.r, Rat(-1) / v.r, delta);
}

}  // namespace tiltwall
