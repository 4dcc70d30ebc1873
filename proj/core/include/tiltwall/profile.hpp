#pragma once

#include "tiltwall/rat.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tiltwall {

struct LatticeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Threefold data: H^3, K.H^2/H^3, and the lattice denominators of the
// normalized Chern character entries.
struct Profile {
    std::string name;
    Rat h3{1};
    Rat canonical_coeff{0};
    int den1 = 1;
    int den2 = 2;
    int den3 = 6;
    bool assumption_B = true;
    bool assumption_C = true;
    // Degrees of curves are integral (as on P3) rather than half-integral.
    bool integral_curve_degree = false;

    void validate() const;
};

std::vector<Profile> builtin_profiles();
// Throws std::invalid_argument for an unknown name.
Profile profile_by_name(const std::string& name);

bool in_lattice(const Rat& x, int den);

Rat genus_from_ch3(const Rat& e, const Rat& d, const Profile& p);
Rat ch3_from_genus(const Rat& g, const Rat& d, const Profile& p);

}  // namespace tiltwall
