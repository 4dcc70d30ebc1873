#include "tiltwall/wallsearch.hpp"

#include "candidates.hpp"

namespace tiltwall {

std::vector<CandidateWall> brute_force_oracle(const ChernVec& v, const Profile& P, const OracleBox& box,
                                              const SearchConstraints& C) {
    std::vector<detail::RawCandidate> raw;
    QRegion q = q_region(v);
    if (!q_forcing(v, q)) return {};
    const ChernVec2 v2 = v.truncate();
    const Rat delta = discriminant(v2);
    const Surd qa = q.left(), qb = q.right();
    const Rat step = Rat(Int(1), Int(P.den2));

    for (long r = box.r_lo; r <= box.r_hi; ++r) {
        // subobjects of objects in the heart have positive rank here
        if (r < 1) continue;
        for (long x = box.x_lo; x <= box.x_hi; ++x) {
            if (r == 1 && C.section_vanishing_k && x >= -(*C.section_vanishing_k - 1)) continue;
            for (Rat y = box.y_lo; y <= box.y_hi; y += step) {
                ChernVec2 sub{Rat(r), Rat(x), y};
                ChernVec2 quot = v2 - sub;
                Rat dF = discriminant(sub);
                if (dF.sign() < 0) continue;
                Rat dG = discriminant(quot);
                if (dG.sign() < 0 || dF + dG > delta) continue;
                WallKind wk = wall(v2, sub);
                if (!wk.is_semicircle()) continue;
                const Wall& w = wk.wall;
                Surd a = w.left(), b = w.right();
                // the wall may not enter Q < 0: it must enclose the whole Q-disk
                if (a > qa || b < qb) continue;
                // v itself in the heart along the wall
                if (((-v2.r) * b + v2.c).sign() < 0) continue;
                if (!detail::ch1_along_wall(v2, sub, w)) continue;
                if (C.min_wall && w.radius_sq < C.min_wall->radius_sq) continue;
                raw.push_back({sub, w});
            }
        }
    }
    return detail::assemble(v, std::move(raw), detail::filter_tags(C));
}

}  // namespace tiltwall
