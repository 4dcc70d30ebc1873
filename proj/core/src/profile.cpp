#include "tiltwall/profile.hpp"

namespace tiltwall {

void Profile::validate() const {
    if (h3.sign() <= 0) throw std::invalid_argument("profile " + name + ": h3 must be positive");
    if (den1 != 1) throw std::invalid_argument("profile " + name + ": den1 must be 1");
    if (den2 != 1 && den2 != 2) throw std::invalid_argument("profile " + name + ": den2 must be 1 or 2");
    if (den3 != 1 && den3 != 2 && den3 != 3 && den3 != 6)
        throw std::invalid_argument("profile " + name + ": den3 must divide 6");
}

std::vector<Profile> builtin_profiles() {
    std::vector<Profile> out;
    out.push_back({"P3", Rat(1), Rat(-4), 1, 2, 6, true, true, true});
    // Theta^3 = 3! for a principal polarization.
    out.push_back({"PPAV", Rat(6), Rat(0), 1, 2, 6, true, true, false});
    out.push_back({"FANO_IDX2_DEG1", Rat(1), Rat(-2), 1, 2, 6, true, true, false});
    out.push_back({"FANO_IDX2_DEG2", Rat(2), Rat(-2), 1, 2, 6, true, true, false});
    return out;
}

Profile profile_by_name(const std::string& name) {
    for (auto& p : builtin_profiles())
        if (p.name == name) return p;
    throw std::invalid_argument("unknown profile '" + name + "'");
}

bool in_lattice(const Rat& x, int den) { return (x * Rat(den)).is_integer(); }

namespace {
void check_degree(const Rat& d, const Profile& p) {
    if (d.sign() <= 0) throw LatticeError("degree " + d.str() + " must be positive");
    int den = p.integral_curve_degree ? 1 : p.den2;
    if (!in_lattice(d, den))
        throw LatticeError("degree " + d.str() + " is not in the (1/" + std::to_string(den) +
                           ")Z degree lattice of " + p.name);
}
}  // namespace

// g = 1 - chi(O_C); with ch(I_C) = (1, 0, -d, e) this is 1 + K.C/2 + ch3.
Rat genus_from_ch3(const Rat& e, const Rat& d, const Profile& p) {
    check_degree(d, p);
    return Rat(1) + p.canonical_coeff * d * p.h3 / Rat(2) + e * p.h3;
}

Rat ch3_from_genus(const Rat& g, const Rat& d, const Profile& p) {
    check_degree(d, p);
    return (g - Rat(1) - p.canonical_coeff * d * p.h3 / Rat(2)) / p.h3;
}

}  // namespace tiltwall
