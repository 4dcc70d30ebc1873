#pragma once

#include "tiltwall/bounds.hpp"
#include "tiltwall/chern.hpp"
#include "tiltwall/sturm.hpp"
#include "tiltwall/tiltplane.hpp"

#include <optional>
#include <vector>

namespace tiltwall {

// Wall of (1,0,-d) against O(-(f+4)); throws std::domain_error when it collapses.
Wall anchor_wall(long d, long f);
bool heart_check(long d, long f);
// rho^2 > d/12 on the anchor wall and the anchor's right end -2d/(f+4) > -k.
bool rank_cap_check(long d, long k, long f);

struct YInterval {
    Rat lo, hi;
    bool empty() const { return lo > hi; }
};

struct LargeCh1Analysis {
    long x_min = 0;       // f + 4, the anchor itself
    Rat x_max;            // 4d/(f+4)
    std::vector<long> admissible_x;
    YInterval y_interval;
    // Sign of phi - psi on [f+6, 4d/(f+4)] when that window is nonempty.
    std::optional<SignClass> far_window_sign;
    Poly phi, psi;
};
LargeCh1Analysis large_ch1_analysis(long d, long k, long f);

Rat h2_vanishing_margin(long d, long k, long f, const Rat& y);
bool h2_vanishing_check(long d, long k, long f, const Rat& y);

// Euler characteristic on P3 of a class with normalized character v.
Rat euler_char_p3(const ChernVec& v);

struct RangeBReport {
    long k = 0, f = 0, d = 0;
    bool supported = true;  // d <= B(k,f)
    Int A_f, B_f, A_f1;
    Wall anchor;
    bool heart_ok = false;
    bool rank_cap_ok = false;
    LargeCh1Analysis ch1;
    bool h2_vanishing_ok = false;
    bool y_floor_ok = false;  // y >= f-k+3, so the section bound applies
    Int chi_bound;
    Int conjecture_bound;
    bool all_ok() const;
};
// Throws std::out_of_range when f is not the range-B slot of d.
RangeBReport rangeb_report(long k, long f, long d);

struct SpecialCaseRow {
    long y;
    Rat chi_G;     // closed form
    Rat chi_hrr;   // Riemann-Roch on the extremal class
    Int h2;
    Rat total;
    bool ok;
};

struct SpecialCaseReport {
    long k = 0;
    Int d, d_closed;
    Rat E, E_closed;       // conjectured ch3 bound at d
    Rat q_margin;          // rho_Q^2 - Delta/24 at e = E; grows with e
    Rat q_margin_closed;   // q_margin_numerator(k) / (48 d^2)
    Rat y_upper;         // strict upper bound on y
    long y_max = 0;
    std::vector<SpecialCaseRow> rows;
    Int target;          // binom(k-7, 3)
    Int conjecture_E;
    bool passes = false;
};
SpecialCaseReport special_case_2k11(long k);
// Degree-six numerator of rho_Q^2 - Delta/24 at the conjectured bound for d = A(k, 2k-11).
Int q_margin_numerator(long k);

}  // namespace tiltwall
