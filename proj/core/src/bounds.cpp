#include "tiltwall/bounds.hpp"

#include <string>

namespace tiltwall {

namespace {
void require_half_integer(const Rat& d) {
    if (!d.is_half_integer()) throw std::invalid_argument(d.str() + " is not in (1/2)Z");
}
void require_k(long k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
}
Rat R(long v) { return Rat(v); }
}  // namespace

Remainder remainder(const Rat& d, long k) {
    require_half_integer(d);
    require_k(k);
    return {mod(-d, R(k)), k};
}

Rat eps1(const Rat& d) {
    require_half_integer(d);
    return d.is_integer() ? Rat(0) : Rat(1) / R(24);
}

// f (k - f - 1 + f/k) / 2
Rat eps_tilde(const Rat& d, long k) {
    Rat f = remainder(d, k).f;
    return f * (R(k) - f - R(1) + f / R(k)) / R(2);
}

Rat eps(const Rat& d, long k) { return eps_tilde(d, k) + eps1(d); }

Rat bound_E(const Rat& d, long k) { return bound_E_tilde(d, k) - eps1(d); }

Rat bound_E_tilde(const Rat& d, long k) {
    return d * d / R(2 * k) + d * R(k) / R(2) - eps_tilde(d, k);
}

Rat max_ch3_rank1(const Rat& d) {
    if (d.sign() < 0) throw std::domain_error("rank one bound needs d >= 0");
    return d * (d + R(1)) / R(2) - eps1(d);
}

Rat max_ch3_rank0(const Rat& c, const Rat& d) {
    if (!c.is_integer() || c.sign() <= 0) throw std::domain_error("rank zero bound needs a positive integer c");
    long ci = c.num().get_si();
    return c * c * c / R(24) + d * d / (R(2) * c) - eps(d + c * c / R(2), ci);
}

std::optional<Rat> max_ch3_rank2(int c, const Rat& d) {
    if (c != -1 && c != 0) throw std::domain_error("rank two bound is tabulated for c in {-1, 0}");
    if (d.sign() > 0) return std::nullopt;
    Rat half = Rat(1) / R(2);
    if (c == -1) return d * d / R(2) - d + Rat(5) / R(24) - eps1(d + half);
    if (d.is_zero()) return Rat(0);
    if (d == -half) return Rat(1) / R(6);
    return d * d / R(2) + Rat(5) / R(24) - eps1(d + half);
}

int delta_c(long c) {
    if (c == 1 || c == 3) return 3;
    long r = ((c % 3) + 3) % 3;
    return r == 2 ? 1 : 0;
}

Int binom(const Int& n, long m) {
    if (m < 0 || n < 0 || n < m) return 0;
    Int out;
    mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(m));
    return out;
}

namespace {
Int exact_third(const Int& x) {
    if (x % 3 != 0) throw std::logic_error("A/B numerator not divisible by 3");
    return x / 3;
}
void require_rangeB_f(long k, long f) {
    if (k < 5 || f < k - 1 || f > 2 * k - 5)
        throw std::out_of_range("need k >= 5 and f in [k-1, 2k-5], got k=" + std::to_string(k) +
                                " f=" + std::to_string(f));
}
}  // namespace

Int A_kf(long k, long f) {
    require_rangeB_f(k, f);
    Int K = k, F = f;
    return exact_third(K * K - K * F + F * F - 2 * K + 7 * F + 12 + delta_c(2 * k - f - 6));
}

Int B_kf(long k, long f) {
    require_rangeB_f(k, f);
    Int K = k, F = f;
    return exact_third(K * K - K * F + F * F + 6 * F + 11 + delta_c(2 * k - f - 7));
}

const char* to_string(ConjBound::Regime r) { return r == ConjBound::Regime::AtoB ? "AtoB" : "BtoA"; }

std::optional<long> rangeB_f(const Int& d, long k) {
    if (k < 5) return std::nullopt;
    for (long f = k - 1; f <= 2 * k - 6; ++f)
        if (A_kf(k, f) <= d && d < A_kf(k, f + 1)) return f;
    return std::nullopt;
}

ConjBound conj_bound_rangeB(const Int& d, long k) {
    auto f = rangeB_f(d, k);
    if (!f) throw std::out_of_range("d=" + d.get_str() + " is outside range B for k=" + std::to_string(k));
    Int b = B_kf(k, *f);
    ConjBound out;
    out.f = *f;
    if (d <= b) {
        out.regime = ConjBound::Regime::AtoB;
        out.h = 0;
    } else {
        out.regime = ConjBound::Regime::BtoA;
        out.h = (d - b) * (d - b + 1) / 2;
    }
    Int core = binom(Int(*f - k + 4), 3) - binom(Int(k + 2), 3) + out.h;
    out.E = d * (k + 1) + core;
    out.genus = d * (k - 1) + 1 + core;
    return out;
}

const char* to_string(ReflexiveBoundReport::Case c) {
    switch (c) {
        case ReflexiveBoundReport::Case::Case1: return "Case1";
        case ReflexiveBoundReport::Case::Case2: return "Case2";
        case ReflexiveBoundReport::Case::OutOfRange: return "OutOfRange";
    }
    return "?";
}

ReflexiveBoundReport hartshorne_reflexive(long c, const Rat& d) {
    if (c < -1) throw std::domain_error("reflexive bounds need c >= -1");
    Rat C = R(c);
    Rat dc = R(delta_c(c)), dc1 = R(delta_c(c - 1));
    ReflexiveBoundReport out;
    out.d_max = C * C / R(6) - R(2) * C / R(3) - R(1) - dc / R(3);
    out.case2_threshold = C * C / R(6) - C - Rat(8) / R(3) - dc1 / R(3);

    auto case1_e = [&] { return -R(11) * C / R(6) - R(2) * d - R(2); };
    auto case2 = [&](Rat& e, Rat& h2) {
        Rat x = C * C - R(6) * C - R(6) * d - R(2) * dc1;
        h2 = (x - R(10)) * (x - R(16)) / R(72);
        e = pow(C, 4) / R(72) - pow(C, 3) / R(6) + R(5) * C * C / R(36) + C / R(3) - C * C * d / R(6) + C * d +
            d * d / R(2) + d / R(6) + Rat(2) / R(9) -
            dc1 / R(18) * (C * C - R(6) * C - R(6) * d - dc1 - R(13));
    };

    if (d > out.d_max) {
        out.which = ReflexiveBoundReport::Case::OutOfRange;
        return out;
    }
    if (d >= out.case2_threshold) {
        out.which = ReflexiveBoundReport::Case::Case1;
        out.e_bound = case1_e();
        out.h2_bound = Rat(0);
        if (d == out.case2_threshold) {
            Rat e, h2;
            case2(e, h2);
            out.e_bound_other = e;
            out.h2_bound_other = h2;
        }
        return out;
    }
    out.which = ReflexiveBoundReport::Case::Case2;
    Rat e, h2;
    case2(e, h2);
    out.e_bound = e;
    out.h2_bound = h2;
    return out;
}

Int sections_bound_curve(long l) { return l < 0 ? Int(0) : binom(Int(l + 2), 3); }
Int sections_bound_points(long l) { return l < 0 ? Int(0) : binom(Int(l + 1), 2); }

}  // namespace tiltwall
