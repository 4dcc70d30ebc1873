#include "tiltwall/rangeb.hpp"

#include "tiltwall/wallsearch.hpp"

#include <stdexcept>
#include <string>

namespace tiltwall {

namespace {
Rat R(long v) { return Rat(v); }
Rat third(const Rat& x) { return x / R(3); }
}  // namespace

Wall anchor_wall(long d, long f) {
    if (d <= 0 || f < 0) throw std::invalid_argument("anchor_wall needs positive d and f >= 0");
    WallKind wk = wall({R(1), R(0), R(-d)}, line_bundle(-(f + 4)).truncate());
    if (!wk.is_semicircle())
        throw std::domain_error("anchor wall degenerates at d = (f+4)^2/2 (d=" + std::to_string(d) + ")");
    return wk.wall;
}

bool heart_check(long d, long f) { return Int(f + 4) * (f + 4) > Int(2) * d; }

bool rank_cap_check(long d, long k, long f) {
    if (2 * d == (f + 4) * (f + 4)) return false;
    Wall w = anchor_wall(d, f);
    return w.radius_sq > R(d) / R(12) && Int(2) * d < Int(f + 4) * k;
}

LargeCh1Analysis large_ch1_analysis(long d, long k, long f) {
    LargeCh1Analysis out;
    const Rat F4 = R(f + 4), D = R(d), K = R(k);
    out.x_min = f + 4;
    out.x_max = R(4) * D / F4;
    // phi(x) = (2d - x(f+4))(f+4-x) / (2(f+4))
    out.phi = (Rat(1) / (R(2) * F4)) * (Poly({R(2) * D, -F4}) * Poly({F4, R(-1)}));
    out.psi = Poly({K * K / R(3) - D + R(2) * K / R(3), -K / R(3) - Rat(1) / R(3), Rat(1) / R(3)});

    Poly gap = out.phi - out.psi;
    bool far_certified = false;
    if (R(f + 6) <= out.x_max) {
        out.far_window_sign = sturm_sign(gap, Interval::closed(R(f + 6), out.x_max)).kind;
        far_certified = *out.far_window_sign == SignClass::StrictlyNegative;
    }

    out.y_interval = {Rat(A_kf(k, f + 1)) - D, R(f + 5) / R(2) - D / F4};
    Int last = out.x_max.floor();
    for (long x = f + 5; Int(x) <= last; ++x) {
        if (x == f + 5) {
            if (!out.y_interval.empty()) out.admissible_x.push_back(x);
            continue;
        }
        if (far_certified) break;
        if (gap.eval(R(x)).sign() >= 0) out.admissible_x.push_back(x);
    }
    return out;
}

Rat h2_vanishing_margin(long d, long k, long f, const Rat& y) {
    Rat F = R(f), K = R(k);
    return third(F * F) - third(F * K) + third(K * K) - R(d) + R(8) * F / R(3) - third(K) +
           third(R(delta_c(2 * k - f - 8))) - y + R(6);
}

bool h2_vanishing_check(long d, long k, long f, const Rat& y) { return h2_vanishing_margin(d, k, f, y).sign() >= 0; }

Rat euler_char_p3(const ChernVec& v) { return v.e + R(2) * v.d + R(11) * v.c / R(6) + v.r; }

bool RangeBReport::all_ok() const {
    return supported && heart_ok && rank_cap_ok && h2_vanishing_ok && y_floor_ok && chi_bound <= binom(Int(f - k + 4), 3);
}

RangeBReport rangeb_report(long k, long f, long d) {
    auto slot = rangeB_f(Int(d), k);
    if (!slot || *slot != f)
        throw std::out_of_range("d=" + std::to_string(d) + " does not satisfy A(k,f) <= d < A(k,f+1) for k=" +
                                std::to_string(k) + ", f=" + std::to_string(f));
    RangeBReport rep;
    rep.k = k;
    rep.f = f;
    rep.d = d;
    rep.A_f = A_kf(k, f);
    rep.B_f = B_kf(k, f);
    rep.A_f1 = A_kf(k, f + 1);
    rep.supported = Int(d) <= rep.B_f;
    rep.anchor = anchor_wall(d, f);
    rep.heart_ok = heart_check(d, f);
    rep.rank_cap_ok = rank_cap_check(d, k, f);
    rep.ch1 = large_ch1_analysis(d, k, f);
    const YInterval& yi = rep.ch1.y_interval;
    rep.h2_vanishing_ok = yi.empty() || h2_vanishing_check(d, k, f, yi.hi);
    rep.y_floor_ok = yi.lo >= R(f - k + 3);
    rep.chi_bound = sections_bound_curve(f - k + 2);
    rep.conjecture_bound = conj_bound_rangeB(Int(d), k).E;
    return rep;
}

Int q_margin_numerator(long k) {
    Int K(k);
    return 8 * K * K * K * K * K * K - 168 * K * K * K * K * K + 903 * K * K * K * K + 1402 * K * K * K -
           35817 * K * K + 147360 * K - 229600;
}

SpecialCaseReport special_case_2k11(long k) {
    if (k < 31) throw std::domain_error("special case needs k >= 31, got " + std::to_string(k));
    SpecialCaseReport rep;
    rep.k = k;
    const Rat K = R(k);
    rep.d = A_kf(k, 2 * k - 11);
    rep.d_closed = Int(k) * k - 7 * Int(k) + 19;
    ConjBound cb = conj_bound_rangeB(rep.d, k);
    rep.conjecture_E = cb.E;
    rep.E = Rat(cb.E);
    rep.E_closed = K * K * K - R(21) * K * K / R(2) + R(87) * K / R(2) - R(65);

    ChernVec at = {R(1), R(0), -Rat(rep.d), rep.E};
    rep.q_margin = q_region(at).radius_sq - discriminant(at) / R(24);
    rep.q_margin_closed = Rat(q_margin_numerator(k)) / (R(48) * Rat(rep.d) * Rat(rep.d));

    rep.y_upper = R(9) * (R(3) * K * K - R(23) * K + R(64)) / (R(4) * (K * K - R(7) * K + R(19)));
    Int ym = rep.y_upper.ceil() - 1;
    rep.y_max = ym.get_si();

    rep.target = binom(Int(k - 7), 3);
    rep.passes = rep.d == rep.d_closed && rep.E == rep.E_closed && rep.q_margin == rep.q_margin_closed &&
                 rep.q_margin.sign() > 0;
    for (long y = 0; y <= rep.y_max; ++y) {
        SpecialCaseRow row;
        row.y = y;
        Rat Y = R(y);
        row.chi_G = K * K * K / R(6) - R(4) * K * K - K * Y + Y * Y / R(2) + R(191) * K / R(6) + R(17) * Y / R(2) -
                    R(84);
        ChernVec g = tensor_O({R(-1), R(0), Y, Y * (Y + R(1)) / R(2)}, 6 - k);
        row.chi_hrr = euler_char_p3(g);
        row.h2 = binom(Int(y - 2), 2);
        row.total = row.chi_G + Rat(row.h2);
        row.ok = row.chi_G == row.chi_hrr && row.total <= Rat(rep.target);
        rep.passes = rep.passes && row.ok;
        rep.rows.push_back(row);
    }
    rep.passes = rep.passes && cb.f == 2 * k - 11 && rep.y_max <= 6;
    return rep;
}

}  // namespace tiltwall
