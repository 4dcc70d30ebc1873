#pragma once

#include "tiltwall/wallsearch.hpp"

#include <string>
#include <vector>

namespace tiltwall::detail {

struct RawCandidate {
    ChernVec2 sub;
    Wall wall;
};

// Groups coinciding walls, fills ch3 ceilings, sorts by radius^2 descending then (r, x, y).
std::vector<CandidateWall> assemble(const ChernVec& v, std::vector<RawCandidate> raw,
                                    const std::vector<std::string>& filters);

std::vector<std::string> filter_tags(const SearchConstraints& C);

// ch1^beta of F and of the quotient at both wall ends are >= 0 and neither is identically zero.
bool ch1_along_wall(const ChernVec2& v, const ChernVec2& sub, const Wall& w);

}  // namespace tiltwall::detail
