#include "doctest.h"

#include "tiltwall/bounds.hpp"
#include "tiltwall/wallsearch.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

using namespace tiltwall;

namespace {

const Profile P3 = profile_by_name("P3");

ChernVec ideal(long d, const Rat& e) { return {Rat(1), Rat(0), Rat(-d), e}; }

SearchConstraints vanishing(long k) {
    SearchConstraints c;
    c.section_vanishing_k = k;
    return c;
}

using Key = std::tuple<Rat, Rat, Rat>;

std::set<Key> prefix_keys(const std::vector<CandidateWall>& cands) {
    std::set<Key> out;
    for (const auto& cw : cands)
        for (const auto& p : cw.prefixes) out.insert({p.sub.r, p.sub.c, p.sub.d});
    return out;
}

bool has_prefix(const std::vector<CandidateWall>& cands, const ChernVec2& sub) {
    return prefix_keys(cands).count({sub.r, sub.c, sub.d}) > 0;
}

}  // namespace

TEST_CASE("enumerate keeps the O(-2) wall at the degree-7 bound") {
    auto cands = enumerate_candidates(ideal(7, Rat(19)), P3, vanishing(2));
    REQUIRE(has_prefix(cands, {Rat(1), Rat(-2), Rat(2)}));
    auto it = std::find_if(cands.begin(), cands.end(), [](const CandidateWall& cw) {
        return cw.prefixes.front().sub == ChernVec2{Rat(1), Rat(-2), Rat(2)};
    });
    CHECK(it->wall.center == Rat(-9, 2));
    CHECK(it->wall.radius_sq == Rat(25, 4));
}

TEST_CASE("one step past the degree-7 bound every geometric candidate is capped below e") {
    auto cands = enumerate_candidates(ideal(7, Rat(115, 6)), P3, vanishing(2));
    CHECK(prefix_keys(cands) == std::set<Key>{{Rat(1), Rat(-2), Rat(2)}, {Rat(1), Rat(-2), Rat(3, 2)}});
    for (const auto& cw : cands)
        for (const auto& p : cw.prefixes) {
            REQUIRE(p.e_total_bound);
            CHECK(*p.e_total_bound < Rat(115, 6));
        }
}

TEST_CASE("enumerate on a line bundle class finds nothing") {
    auto r = search_walls({Rat(1), Rat(0), Rat(0), Rat(0)}, P3, {});
    CHECK_FALSE(r.forcing);
    CHECK(r.candidates.empty());
}

TEST_CASE("refute reproduces the ideal-sheaf bounds") {
    CHECK(refute_ch3(ideal(7, Rat(115, 6)), P3, vanishing(2)).verdict == Verdict::Refuted);
    CHECK(refute_ch3(ideal(4, Rat(61, 6)), P3, vanishing(1)).verdict == Verdict::Refuted);

    auto at_bound = refute_ch3(ideal(4, Rat(10)), P3, vanishing(1));
    CHECK(at_bound.verdict == Verdict::WallsRemain);
    bool rank_one_twist = false;
    for (const auto& cw : at_bound.surviving)
        for (const auto& p : cw.prefixes)
            if (p.sub.r == Rat(1) && p.sub.c == Rat(-1)) rank_one_twist = true;
    CHECK(rank_one_twist);
}

TEST_CASE("refute is vacuous without a forcing Q region") {
    auto cert = refute_ch3({Rat(1), Rat(0), Rat(0), Rat(0)}, P3, {});
    CHECK(cert.verdict == Verdict::Vacuous);
    CHECK(cert.surviving.empty());
}

TEST_CASE("refute sweep for k = 2") {
    for (long d = 3; d <= 14; ++d) {
        Rat E = bound_E(Rat(d), 2);
        CAPTURE(d);
        CHECK(refute_ch3(ideal(d, E + Rat(1, 6)), P3, vanishing(2)).verdict == Verdict::Refuted);
        CHECK(refute_ch3(ideal(d, E), P3, vanishing(2)).verdict == Verdict::WallsRemain);
    }
}

TEST_CASE("rank_cap") {
    ChernVec v = ideal(7, Rat(19));
    QRegion q = q_region(v);
    CHECK(q.radius_sq == Rat(505, 196));
    CHECK(rank_cap(v, q.radius_sq) == 1);
    // Delta = 0 leaves no room above the class's own rank.
    CHECK(rank_cap(line_bundle(-3), Rat(1, 100)) == 1);
    // 14 / (4 * 2 * 1) = 7/4 admits rank two, 14/24 does not reach rank three.
    CHECK(rank_cap(v, Rat(7, 4)) == 2);
    CHECK(rank_cap(v, Rat(7, 12)) == 3);
    // Rank zero: Delta/(4 r'^2) against rho^2.
    CHECK(rank_cap({Rat(0), Rat(4), Rat(0), Rat(0)}, Rat(1)) == 2);
}

TEST_CASE("ch1_range along the O(-2) wall of (1,0,-6)") {
    ChernVec2 v{Rat(1), Rat(0), Rat(-6)};
    WallKind wk = wall(v, line_bundle(-2).truncate());
    REQUIRE(wk.is_semicircle());
    CHECK(wk.wall.center == Rat(-4));
    CHECK(wk.wall.radius_sq == Rat(4));
    // x = 0 would leave the quotient with identically zero ch1.
    CHECK(ch1_range(v, 1, wk.wall) == std::vector<long>{-2, -1});
    // Rank two needs x >= -4 and x <= -6 at once.
    CHECK(ch1_range(v, 2, wk.wall).empty());
}

TEST_CASE("ch2_range") {
    auto yr = ch2_range(ideal(7, Rat(19)), 1, -2, P3);
    CHECK_FALSE(yr.empty);
    CHECK(std::find(yr.values.begin(), yr.values.end(), Rat(2)) != yr.values.end());

    // Rank-one subobject with ch1 = -1: Bogomolov caps ch2 at 1/2.
    auto y1 = ch2_range(ideal(10, Rat(55)), 1, -1, P3);
    REQUIRE(y1.hi);
    CHECK(*y1.hi <= Rat(1, 2));
    for (const Rat& y : y1.values) CHECK(y <= Rat(1, 2));
}

TEST_CASE("ch3_ceiling on line bundles is their own ch3") {
    for (long n = -6; n <= 6; ++n) {
        ChernVec L = line_bundle(n);
        auto c1 = ch3_ceiling(L.truncate());
        REQUIRE(c1.status == Coverage::Covered);
        CHECK(c1.value == L.e);

        ChernVec LL = L + L;
        auto c2 = ch3_ceiling(LL.truncate());
        REQUIRE(c2.status == Coverage::Covered);
        CHECK(c2.value == LL.e);

        auto cd = ch3_ceiling(dual_class(L).truncate());
        CHECK(cd.status == Coverage::Covered);
    }
}

TEST_CASE("ch3_ceiling routing") {
    CHECK(ch3_ceiling({Rat(1), Rat(0), Rat(1)}).status == Coverage::Infeasible);
    CHECK(ch3_ceiling({Rat(0), Rat(0), Rat(1)}).status == Coverage::Uncovered);
    CHECK(ch3_ceiling({Rat(3), Rat(0), Rat(-1)}).status == Coverage::Uncovered);
    auto r0 = ch3_ceiling({Rat(0), Rat(2), Rat(0)});
    REQUIRE(r0.status == Coverage::Covered);
    CHECK(r0.value == Rat(1, 3));
    auto neg = ch3_ceiling({Rat(-1), Rat(0), Rat(4)});
    REQUIRE(neg.status == Coverage::Covered);
    CHECK(neg.value == Rat(10));
}

TEST_CASE("oracle box semantics") {
    ChernVec v = ideal(7, Rat(19));
    OracleBox empty_box;
    CHECK(brute_force_oracle(v, P3, empty_box).empty());

    OracleBox box{1, 2, -20, 5, Rat(-20), Rat(200)};
    auto full = brute_force_oracle(v, P3, box, vanishing(2));
    CHECK(has_prefix(full, {Rat(1), Rat(-2), Rat(2)}));
    box.x_lo = -1;
    CHECK_FALSE(has_prefix(brute_force_oracle(v, P3, box, vanishing(2)), {Rat(1), Rat(-2), Rat(2)}));
}

TEST_CASE("oracle agrees with the engine on ideal classes") {
    for (long k = 1; k <= 3; ++k) {
        for (long d = std::max(1L, k * (k - 1) + 1); d <= 12; ++d) {
            Rat E = bound_E(Rat(d), k);
            for (const Rat& e : {E, E + Rat(1, 6)}) {
                ChernVec v = ideal(d, e);
                CAPTURE(k);
                CAPTURE(d);
                CAPTURE(e.str());
                auto cands = enumerate_candidates(v, P3, vanishing(k));
                // Delta(F) <= Delta(v) gives y >= -d for r >= 1; x >= r * b_Q >= -r(d+2).
                long xl = -3 * d - 8;
                OracleBox box{1, 3, xl, 2, Rat(-d - 1), Rat(xl * xl, 2)};
                auto oracle = brute_force_oracle(v, P3, box, vanishing(k));
                CHECK(prefix_keys(cands) == prefix_keys(oracle));
            }
        }
    }
}

TEST_CASE("adding section vanishing never adds candidates") {
    for (long d = 4; d <= 16; ++d) {
        ChernVec v = ideal(d, bound_E(Rat(d), 1));
        auto loose = prefix_keys(enumerate_candidates(v, P3, {}));
        for (long k = 1; k <= 4; ++k) {
            auto tight = prefix_keys(enumerate_candidates(v, P3, vanishing(k)));
            CHECK(std::includes(loose.begin(), loose.end(), tight.begin(), tight.end()));
        }
    }
}

TEST_CASE("candidates have smaller discriminant and consistent walls") {
    std::mt19937 rng(20261015);
    std::uniform_int_distribution<long> dd(2, 18);
    for (int i = 0; i < 30; ++i) {
        long d = dd(rng);
        ChernVec v = ideal(d, bound_E(Rat(d), 1));
        Rat dv = discriminant(v);
        for (const auto& cw : enumerate_candidates(v, P3, {})) {
            CHECK(cw.wall.radius_sq.sign() > 0);
            for (const auto& p : cw.prefixes) {
                CHECK(discriminant(p.sub) < dv);
                WallKind wk = wall(v.truncate(), p.sub);
                REQUIRE(wk.is_semicircle());
                CHECK(wk.wall.center == cw.wall.center);
                CHECK(wk.wall.radius_sq == cw.wall.radius_sq);
            }
        }
    }
}

TEST_CASE("output is sorted and independent of thread count") {
    ChernVec v = ideal(20, bound_E(Rat(20), 1));
    auto one = enumerate_candidates(v, P3, {}, EngineOptions{1});
    auto many = enumerate_candidates(v, P3, {}, EngineOptions{6});
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].wall.center == many[i].wall.center);
        CHECK(one[i].wall.radius_sq == many[i].wall.radius_sq);
        CHECK(one[i].prefixes.size() == many[i].prefixes.size());
        if (i > 0) CHECK(one[i - 1].wall.radius_sq >= one[i].wall.radius_sq);
    }
}

TEST_CASE("certificate audit records every rejection stage") {
    auto cert = refute_ch3(ideal(7, Rat(115, 6)), P3, vanishing(2));
    std::set<std::string> stages;
    for (const auto& a : cert.audit) stages.insert(a.stage);
    CHECK(stages.count("q_region"));
    CHECK(stages.count("rank_cap"));
    CHECK(stages.count("ch1_range"));
}
