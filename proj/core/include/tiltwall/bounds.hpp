#pragma once

#include "tiltwall/rat.hpp"

#include <optional>
#include <stdexcept>

namespace tiltwall {

// d = -f (mod k) with 0 <= f < k; f is a half-integer when d is.
struct Remainder {
    Rat f;
    long k;
};
Remainder remainder(const Rat& d, long k);

Rat eps1(const Rat& d);
Rat eps_tilde(const Rat& d, long k);
Rat eps(const Rat& d, long k);

// d^2/2k + dk/2 - eps(d,k); the theorem's range d > k(k-1) is the caller's business.
Rat bound_E(const Rat& d, long k);
Rat bound_E_tilde(const Rat& d, long k);

Rat max_ch3_rank1(const Rat& d);
Rat max_ch3_rank0(const Rat& c, const Rat& d);
// nullopt when d > 0 (Bogomolov excludes the class).
std::optional<Rat> max_ch3_rank2(int c, const Rat& d);

int delta_c(long c);

Int binom(const Int& n, long m);  // 0 whenever n < m or n < 0

Int A_kf(long k, long f);
Int B_kf(long k, long f);

struct ConjBound {
    enum class Regime { AtoB, BtoA };
    Int E;      // ch3 bound
    Int genus;  // same bound as a genus on P3
    long f;
    Int h;
    Regime regime;
};
const char* to_string(ConjBound::Regime r);
// Throws std::out_of_range when no f in [k-1, 2k-6] has A(k,f) <= d < A(k,f+1).
ConjBound conj_bound_rangeB(const Int& d, long k);
std::optional<long> rangeB_f(const Int& d, long k);

struct ReflexiveBoundReport {
    enum class Case { Case1, Case2, OutOfRange };
    Rat d_max;
    Rat case2_threshold;
    Case which;
    Rat e_bound;
    std::optional<Rat> h2_bound;
    // At d == case2_threshold both cases apply; the second case's values land here.
    std::optional<Rat> e_bound_other;
    std::optional<Rat> h2_bound_other;
};
const char* to_string(ReflexiveBoundReport::Case c);
ReflexiveBoundReport hartshorne_reflexive(long c, const Rat& d);

Int sections_bound_curve(long l);
Int sections_bound_points(long l);

}  // namespace tiltwall
