#pragma once

#include "tiltwall/bounds.hpp"
#include "tiltwall/chern.hpp"
#include "tiltwall/profile.hpp"
#include "tiltwall/rangeb.hpp"
#include "tiltwall/tiltplane.hpp"
#include "tiltwall/wallsearch.hpp"

#include <json.hpp>

#include <string>

namespace tiltwall::io {

using nlohmann::json;

// Rationals travel as "p/q" strings; integers given as JSON numbers are accepted on input.
json to_json(const Rat& q);
Rat rat_from_json(const json& j);

json to_json(const Surd& s);
json to_json(const ChernVec& v);
json to_json(const ChernVec2& v);
ChernVec chern_from_json(const json& j);
ChernVec2 chern2_from_json(const json& j);

json to_json(const Profile& p);
Profile profile_from_json(const json& j);

json to_json(const Wall& w);
json to_json(const WallKind& w);
json to_json(const QRegion& q);

json to_json(const CandidateWall& c);
json to_json(const SearchResult& r);
json to_json(const Certificate& c);

json to_json(const ConjBound& b);
json to_json(const ReflexiveBoundReport& r);
json to_json(const RangeBReport& r);
json to_json(const SpecialCaseReport& r);

}  // namespace tiltwall::io
