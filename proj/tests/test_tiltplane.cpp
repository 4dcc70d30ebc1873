#include "doctest.h"

#include "tiltwall/tiltplane.hpp"

#include <random>

using namespace tiltwall;

namespace {

const Profile P3 = profile_by_name("P3");

ChernVec2 random_class2(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> r(-3, 3), c(-8, 8), d2(-24, 24);
    for (;;) {
        ChernVec2 v{Rat(r(rng)), Rat(c(rng)), Rat(d2(rng), 2)};
        if (lattice_check(v, P3) && !(v.r.is_zero() && v.c.is_zero())) return v;
    }
}

// Classes that can carry semistable objects.
ChernVec2 random_bogomolov_class2(std::mt19937_64& rng) {
    for (;;) {
        ChernVec2 v = random_class2(rng);
        if (discriminant(v).sign() >= 0) return v;
    }
}

ChernVec random_class(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> e6(-120, 120);
    ChernVec2 t = random_class2(rng);
    return {t.r, t.c, t.d, Rat(e6(rng), 6)};
}

// nu(v) = nu(w) at alpha^2 = a is linear in (beta^2 + a, beta, 1) with the
// same coefficients for every a; sampling two alpha^2 values pins the circle.
struct Circle {
    Rat center, radius_sq;
};
std::optional<Circle> circle_by_sampling(const ChernVec2& v, const ChernVec2& w) {
    // ch1^b(v) ch2^b(w) - ch1^b(w) ch2^b(v) - a/2 (r_w ch1^b(v) - r_v ch1^b(w)) = 0 written as
    // p*(b^2 + a) + q*b + s = 0; evaluate at (b, a) = (0,0), (1,0), (0,2).
    auto F = [&](const Rat& b, const Rat& a) {
        ChernVec2 tv = twist(v, b), tw = twist(w, b);
        return tv.c * tw.d - tw.c * tv.d - a / Rat(2) * (tw.r * tv.c - tv.r * tw.c);
    };
    Rat s = F(Rat(0), Rat(0));
    Rat p = (F(Rat(0), Rat(2)) - s) / Rat(2);
    Rat q = F(Rat(1), Rat(0)) - p - s;
    if (p.is_zero()) return std::nullopt;
    Rat center = -q / (Rat(2) * p);
    return Circle{center, center * center - s / p};
}

}  // namespace

TEST_CASE("mu") {
    CHECK(*mu({Rat(1), Rat(-2), Rat(2)}) == Rat(-2));
    CHECK_FALSE(mu({Rat(0), Rat(1), Rat(5)}).has_value());
    CHECK(*mu({Rat(2), Rat(-1), Rat(3)}) == Rat(-1, 2));
}

TEST_CASE("nu") {
    CHECK(*nu({Rat(1), Rat(0), Rat(-6)}, {Rat(-4), Rat(4)}) == Rat(0));
    for (long b = -5; b <= 5; ++b) CHECK(*nu({Rat(0), Rat(1), Rat(7, 2)}, {Rat(b), Rat(3)}) == Rat(7, 2) - Rat(b));
    Rat beta(-3, 2), a(5, 4);
    CHECK(*nu({Rat(1), Rat(0), Rat(0)}, {beta, a}) == (beta * beta - a) / (Rat(-2) * beta));
    CHECK_FALSE(nu({Rat(1), Rat(2), Rat(0)}, {Rat(2), Rat(1)}).has_value());
}

TEST_CASE("wall examples") {
    ChernVec2 v{Rat(1), Rat(0), Rat(-6)};
    WallKind w = wall(v, line_bundle(-2).truncate());
    REQUIRE(w.is_semicircle());
    CHECK(w.wall.center == Rat(-4));
    CHECK(w.wall.radius_sq == Rat(4));

    ChernVec2 triple{Rat(3) * v.r, Rat(3) * v.c, Rat(3) * v.d};
    CHECK(wall(v, triple).tag == WallKind::Tag::Degenerate);

    WallKind vert = wall({Rat(1), Rat(0), Rat(-3)}, {Rat(2), Rat(0), Rat(1)});
    REQUIRE(vert.tag == WallKind::Tag::Vertical);
    CHECK(vert.beta == Rat(0));
    CHECK(vert.actual);

    // (0,0,1) has infinite slope everywhere; it meets O only along beta = 0.
    WallKind r0 = wall({Rat(0), Rat(0), Rat(1)}, {Rat(1), Rat(0), Rat(0)});
    REQUIRE(r0.tag == WallKind::Tag::Vertical);
    CHECK(r0.beta == Rat(0));
    CHECK_FALSE(r0.actual);
    CHECK(wall({Rat(0), Rat(1), Rat(1)}, {Rat(0), Rat(2), Rat(1)}).tag == WallKind::Tag::Degenerate);
}

TEST_CASE("q_value and q_region examples") {
    for (long b = -4; b <= 4; ++b) CHECK(q_value({Rat(1), Rat(0), Rat(0), Rat(0)}, {Rat(b), Rat(7)}).is_zero());
    ChernVec v{Rat(1), Rat(0), Rat(-7), Rat(19)};
    CHECK(q_value(v, {Rat(-57, 14), Rat(505, 196)}).is_zero());
    QRegion q = q_region(v);
    CHECK(q.shape == QRegion::Shape::Disk);
    CHECK(q.center == Rat(-57, 14));
    CHECK(q.radius_sq == Rat(505, 196));
    CHECK_FALSE(q_region({Rat(1), Rat(0), Rat(0), Rat(0)}).nonempty());
}

TEST_CASE("q_region of ideal classes follows the closed circle") {
    for (long d = 1; d <= 10; ++d)
        for (long e6 = -60; e6 <= 120; e6 += 7) {
            Rat D(d), e(e6, 6);
            QRegion q = q_region({Rat(1), Rat(0), -D, e});
            CHECK(q.center == Rat(-3) * e / (Rat(2) * D));
            CHECK(q.radius_sq == (Rat(9) * e * e - Rat(8) * D * D * D) / (Rat(4) * D * D));
        }
}

TEST_CASE("Q vanishes on its circle and is negative inside") {
    std::mt19937_64 rng(31);
    int disks = 0;
    for (int i = 0; i < 500; ++i) {
        ChernVec v = random_class(rng);
        QRegion q = q_region(v);
        if (q.shape != QRegion::Shape::Disk || q.radius_sq.sign() <= 0) continue;
        ++disks;
        CHECK(q_value(v, {q.center, q.radius_sq}).is_zero());
        CHECK(q_value(v, {q.center, q.radius_sq / Rat(2)}).sign() < 0);
        CHECK(q_value(v, {q.center, q.radius_sq * Rat(2)}).sign() > 0);
    }
    CHECK(disks > 50);
}

TEST_CASE("wall_compare") {
    ChernVec2 v{Rat(1), Rat(0), Rat(-12)};
    WallKind w2 = wall(v, line_bundle(-2).truncate()), w3 = wall(v, line_bundle(-3).truncate());
    REQUIRE(w2.is_semicircle());
    REQUIRE(w3.is_semicircle());
    CHECK(w2.wall.radius_sq == Rat(25));
    CHECK(w3.wall.radius_sq == Rat(25, 4));
    CHECK(wall_compare(v, w2, w3) == WallRelation::NestedFirstOuter);
    CHECK(wall_compare(v, w3, w2) == WallRelation::NestedSecondOuter);
    CHECK(wall_compare(v, w2, w2) == WallRelation::Identical);
    // u = v + 2w lies in the span of v and w.
    ChernVec2 w = line_bundle(-2).truncate();
    ChernVec2 u = v + w + w;
    CHECK(det3(v, w, u).is_zero());
    CHECK(wall_compare(v, w2, wall(v, u)) == WallRelation::Identical);
}

TEST_CASE("no_wall_on_ray") {
    CHECK(no_wall_on_ray({Rat(1), Rat(0), Rat(-5)}, Rat(-1)));
    CHECK_FALSE(no_wall_on_ray({Rat(2), Rat(0), Rat(-5)}, Rat(-1, 2)));
    CHECK(no_wall_on_ray({Rat(1), Rat(0), Rat(-5)}, Rat(0)));
    CHECK_FALSE(no_wall_on_ray({Rat(1), Rat(0), Rat(-5)}, Rat(-2)));
}

TEST_CASE("nu_zero_alpha_sq") {
    auto a = nu_zero_alpha_sq({Rat(1), Rat(0), Rat(-6)}, Rat(-4));
    REQUIRE(a.kind == NuZero::Kind::Point);
    CHECK(a.alpha_sq == Rat(4));
    CHECK(nu_zero_alpha_sq({Rat(0), Rat(1), Rat(3)}, Rat(3)).kind == NuZero::Kind::WholeLine);
    CHECK(nu_zero_alpha_sq({Rat(0), Rat(1), Rat(3)}, Rat(2)).kind == NuZero::Kind::None);
    auto b = nu_zero_alpha_sq({Rat(1), Rat(0), Rat(0)}, Rat(-1));
    REQUIRE(b.kind == NuZero::Kind::Point);
    CHECK(b.alpha_sq == Rat(1));
}

TEST_CASE("bar_beta") {
    for (long d = 1; d <= 30; ++d)
        CHECK(surd_cmp(bar_beta({Rat(1), Rat(0), Rat(-d)}), Surd(Rat(0), Rat(-1), Rat(2 * d))) == Ordering::EQ);
    CHECK(surd_cmp(bar_beta({Rat(1), Rat(0), Rat(0)}), Surd(Rat(0))) == Ordering::EQ);
    CHECK(surd_cmp(bar_beta({Rat(2), Rat(0), Rat(-1)}), Surd(Rat(-1))) == Ordering::EQ);
    CHECK_THROWS_AS(bar_beta({Rat(1), Rat(0), Rat(1)}), std::domain_error);
}

TEST_CASE("structure identity, slope agreement and hyperbola tops on random pairs") {
    std::mt19937_64 rng(101);
    int circles = 0;
    for (int i = 0; i < 10000; ++i) {
        ChernVec2 v = random_bogomolov_class2(rng), w = random_bogomolov_class2(rng);
        WallKind wk = wall(v, w);
        auto oracle = circle_by_sampling(v, w);
        if (!wk.is_semicircle()) {
            if (oracle) CHECK(oracle->radius_sq.sign() <= 0);
            continue;
        }
        ++circles;
        const Wall& W = wk.wall;
        REQUIRE(oracle);
        CHECK(oracle->center == W.center);
        CHECK(oracle->radius_sq == W.radius_sq);
        if (!v.r.is_zero()) {
            Rat lhs = v.r * v.r * W.radius_sq + discriminant(v);
            Rat rhs = v.r * W.center - v.c;
            CHECK(lhs == rhs * rhs);
            auto top = nu(v, {W.center, W.radius_sq});
            REQUIRE(top);
            CHECK(top->is_zero());
        }
        Rat beta = W.center + Rat(1, 3) * (W.radius_sq.floor() > 0 ? Rat(1) : W.radius_sq);
        Rat a = W.radius_sq - (beta - W.center) * (beta - W.center);
        if (a.sign() > 0) {
            auto nv = nu(v, {beta, a}), nw = nu(w, {beta, a});
            CHECK(nv.has_value() == nw.has_value());
            if (nv && nw) CHECK(*nv == *nw);
        }
    }
    CHECK(circles > 3000);
}

TEST_CASE("Q circle coincides with the partner wall") {
    std::mt19937_64 rng(202);
    int compared = 0;
    for (int i = 0; i < 1000; ++i) {
        ChernVec v = random_class(rng);
        QRegion q = q_region(v);
        WallKind wk = wall(v.truncate(), q_partner(v));
        if (wk.is_semicircle()) {
            ++compared;
            // Negative discriminant puts Q < 0 outside the same circle.
            CHECK(q.shape == (discriminant(v).sign() > 0 ? QRegion::Shape::Disk : QRegion::Shape::Unbounded));
            CHECK(q.center == wk.wall.center);
            CHECK(q.radius_sq == wk.wall.radius_sq);
        }
    }
    CHECK(compared > 100);
}

TEST_CASE("walls of one class never cross") {
    std::mt19937_64 rng(303);
    int nested = 0;
    for (int i = 0; i < 3000; ++i) {
        ChernVec2 v = random_bogomolov_class2(rng);
        if (v.r.sign() <= 0) continue;
        WallKind a = wall(v, random_class2(rng)), b = wall(v, random_class2(rng));
        if (!a.is_semicircle() || !b.is_semicircle()) continue;
        // Same side of the vertical wall.
        Rat vert = v.c / v.r;
        if ((a.wall.center < vert) != (b.wall.center < vert)) continue;
        WallRelation rel = WallRelation::Disjoint;
        CHECK_NOTHROW(rel = wall_compare(v, a, b));
        nested += rel != WallRelation::Disjoint;
    }
    CHECK(nested > 100);
}

TEST_CASE("walls are twist equivariant") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 2000; ++i) {
        ChernVec2 v = random_class2(rng), w = random_class2(rng);
        WallKind wk = wall(v, w);
        if (!wk.is_semicircle()) continue;
        Rat b0(static_cast<long>(i % 17) - 8, 3);
        WallKind tw = wall(twist(v, b0), twist(w, b0));
        REQUIRE(tw.is_semicircle());
        CHECK(tw.wall.center == wk.wall.center - b0);
        CHECK(tw.wall.radius_sq == wk.wall.radius_sq);
    }
}
