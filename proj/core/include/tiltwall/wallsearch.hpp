#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/profile.hpp"
#include "tiltwall/tiltplane.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tiltwall {

struct SearchConstraints {
    // H^0(I_C(k-1)) = 0: no rank-one subobject with ch1 >= -(k-1).
    std::optional<long> section_vanishing_k;
    // Keep only walls at or above this one (same wall family, so radius decides).
    std::optional<Wall> min_wall;
    std::optional<long> max_rank_override;
};

struct EngineOptions {
    unsigned threads = 1;
};

enum class Coverage { Covered, Infeasible, Uncovered };
const char* to_string(Coverage c);

// Largest ch3 a semistable object with this (r, c, d) can carry, after twisting
// into a tabulated shape (and dualizing negative ranks).
struct Ch3Ceiling {
    Coverage status = Coverage::Uncovered;
    Rat value;
    std::string route;
};
Ch3Ceiling ch3_ceiling(const ChernVec2& prefix);

struct PrefixEntry {
    ChernVec2 sub;
    ChernVec2 quot;
    Ch3Ceiling sub_bound, quot_bound;
    std::optional<Rat> e_total_bound;  // both sides covered

    Coverage coverage() const;
};

struct CandidateWall {
    Wall wall;
    std::vector<PrefixEntry> prefixes;  // ascending (r, x, y); several when walls coincide
    std::vector<std::string> filters;
};

struct AuditEntry {
    std::string stage;
    std::string subject;
    std::string decision;
    std::string detail;
};

// Subobject ranks strictly above this cannot produce a wall containing a disk of radius^2 rho_sq_min.
long rank_cap(const ChernVec& v, const Rat& rho_sq_min);

// Integers x with 0 <= x - r_sub*beta <= c_v - r_v*beta along the wall, neither side identically zero.
std::vector<long> ch1_range(const ChernVec2& v, long r_sub, const Wall& W);

struct YRange {
    std::optional<Rat> lo, hi;
    std::string lo_tag, hi_tag;
    bool empty = false;
    std::string empty_tag;
    std::vector<Rat> values;  // lattice points of (1/den2)Z inside
};
// Bogomolov on both sides, the discriminant sum, and Q-exclusion, as bounds on ch2 of the subobject.
YRange ch2_range(const ChernVec& v, long r_sub, long x, const Profile& P);

// Q(v) < 0 is nonempty and lies where v sits in the heart (beta < c/r for r > 0).
bool q_forcing(const ChernVec& v, const QRegion& q);

struct SearchResult {
    QRegion q;
    bool forcing = false;
    long cap = 0;
    std::vector<CandidateWall> candidates;
    std::vector<AuditEntry> audit;
};

SearchResult search_walls(const ChernVec& v, const Profile& P, const SearchConstraints& C,
                          const EngineOptions& opt = {});
std::vector<CandidateWall> enumerate_candidates(const ChernVec& v, const Profile& P, const SearchConstraints& C,
                                                const EngineOptions& opt = {});

enum class Verdict { Refuted, WallsRemain, Vacuous };
const char* to_string(Verdict v);

struct Certificate {
    ChernVec v;
    Verdict verdict = Verdict::Vacuous;
    QRegion q;
    long cap = 0;
    std::vector<CandidateWall> candidates;  // geometric survivors
    std::vector<CandidateWall> surviving;   // candidates whose ch3 bound still reaches e(v), or uncovered
    std::vector<AuditEntry> audit;
};

Certificate refute_ch3(const ChernVec& v, const Profile& P, const SearchConstraints& C,
                       const EngineOptions& opt = {});

struct OracleBox {
    long r_lo = 0, r_hi = -1;
    long x_lo = 0, x_hi = -1;
    Rat y_lo, y_hi;
};

// Naive loop over the box checking the raw wall conditions only.
std::vector<CandidateWall> brute_force_oracle(const ChernVec& v, const Profile& P, const OracleBox& box,
                                              const SearchConstraints& C = {});

// Thread count from TILTWALL_THREADS, falling back to 1.
unsigned threads_from_env();

}  // namespace tiltwall
