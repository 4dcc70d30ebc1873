#include "json_io.hpp"

#include <stdexcept>

namespace tiltwall::io {

json to_json(const Rat& q) { return q.str(); }

Rat rat_from_json(const json& j) {
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long long>());
    throw std::invalid_argument("expected a rational as \"p/q\", got " + j.dump());
}

static std::string int_str(const Int& n) { return n.get_str(); }

json to_json(const Surd& s) {
    return {{"a", to_json(s.a())}, {"b", to_json(s.b())}, {"c", to_json(s.c())}, {"text", s.str()}};
}

json to_json(const ChernVec& v) {
    return {{"r", to_json(v.r)}, {"c", to_json(v.c)}, {"d", to_json(v.d)}, {"e", to_json(v.e)}};
}

json to_json(const ChernVec2& v) { return {{"r", to_json(v.r)}, {"c", to_json(v.c)}, {"d", to_json(v.d)}}; }

ChernVec chern_from_json(const json& j) {
    return {rat_from_json(j.at("r")), rat_from_json(j.at("c")), rat_from_json(j.at("d")), rat_from_json(j.at("e"))};
}

ChernVec2 chern2_from_json(const json& j) {
    return {rat_from_json(j.at("r")), rat_from_json(j.at("c")), rat_from_json(j.at("d"))};
}

json to_json(const Profile& p) {
    return {{"name", p.name},
            {"h3", to_json(p.h3)},
            {"canonical_coeff", to_json(p.canonical_coeff)},
            {"den2", p.den2},
            {"den3", p.den3},
            {"assumption_B", p.assumption_B},
            {"assumption_C", p.assumption_C},
            {"integral_curve_degree", p.integral_curve_degree}};
}

Profile profile_from_json(const json& j) {
    Profile p;
    p.name = j.at("name").get<std::string>();
    p.h3 = rat_from_json(j.at("h3"));
    p.canonical_coeff = rat_from_json(j.at("canonical_coeff"));
    p.den2 = j.at("den2").get<int>();
    p.den3 = j.at("den3").get<int>();
    p.assumption_B = j.value("assumption_B", true);
    p.assumption_C = j.value("assumption_C", true);
    p.integral_curve_degree = j.value("integral_curve_degree", false);
    p.validate();
    return p;
}

json to_json(const Wall& w) {
    return {{"center", to_json(w.center)},
            {"radius_sq", to_json(w.radius_sq)},
            {"v", to_json(w.v)},
            {"w", to_json(w.w)},
            {"left", w.left().str()},
            {"right", w.right().str()}};
}

json to_json(const WallKind& k) {
    switch (k.tag) {
        case WallKind::Tag::Semicircle: {
            json j = to_json(k.wall);
            j["kind"] = "semicircle";
            return j;
        }
        case WallKind::Tag::Vertical:
            return {{"kind", "vertical"}, {"beta", to_json(k.beta)}, {"actual", k.actual}};
        case WallKind::Tag::Degenerate:
            break;
    }
    return {{"kind", "degenerate"}};
}

json to_json(const QRegion& q) {
    json j = {{"shape", to_string(q.shape)},
              {"center", to_json(q.center)},
              {"radius_sq", to_json(q.radius_sq)},
              {"nonempty", q.nonempty()}};
    if (q.shape == QRegion::Shape::HalfPlane) j["negative_side"] = q.negative_side;
    if ((q.shape == QRegion::Shape::Disk || q.shape == QRegion::Shape::Unbounded) && q.radius_sq.sign() >= 0) {
        j["left"] = q.left().str();
        j["right"] = q.right().str();
    }
    return j;
}

static json ceiling_json(const Ch3Ceiling& c) {
    json j = {{"status", to_string(c.status)}, {"route", c.route}};
    if (c.status == Coverage::Covered) j["value"] = to_json(c.value);
    return j;
}

json to_json(const CandidateWall& c) {
    json prefixes = json::array();
    for (const auto& p : c.prefixes) {
        json e = {{"sub", to_json(p.sub)},
                  {"quot", to_json(p.quot)},
                  {"sub_bound", ceiling_json(p.sub_bound)},
                  {"quot_bound", ceiling_json(p.quot_bound)},
                  {"coverage", to_string(p.coverage())}};
        if (p.e_total_bound) e["e_total_bound"] = to_json(*p.e_total_bound);
        prefixes.push_back(std::move(e));
    }
    return {{"wall", to_json(c.wall)}, {"prefixes", prefixes}, {"filters", c.filters}};
}

static json audit_json(const std::vector<AuditEntry>& audit) {
    json a = json::array();
    for (const auto& e : audit)
        a.push_back({{"stage", e.stage}, {"subject", e.subject}, {"decision", e.decision}, {"detail", e.detail}});
    return a;
}

static json candidates_json(const std::vector<CandidateWall>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back(to_json(c));
    return a;
}

json to_json(const SearchResult& r) {
    return {{"q_region", to_json(r.q)},
            {"forcing", r.forcing},
            {"rank_cap", r.cap},
            {"candidates", candidates_json(r.candidates)},
            {"audit", audit_json(r.audit)}};
}

json to_json(const Certificate& c) {
    return {{"class", to_json(c.v)},
            {"verdict", to_string(c.verdict)},
            {"q_region", to_json(c.q)},
            {"rank_cap", c.cap},
            {"candidates", candidates_json(c.candidates)},
            {"surviving", candidates_json(c.surviving)},
            {"audit", audit_json(c.audit)}};
}

json to_json(const ConjBound& b) {
    return {{"E", int_str(b.E)},
            {"genus", int_str(b.genus)},
            {"f", b.f},
            {"h", int_str(b.h)},
            {"regime", to_string(b.regime)}};
}

json to_json(const ReflexiveBoundReport& r) {
    json j = {{"case", to_string(r.which)},
              {"d_max", to_json(r.d_max)},
              {"case2_threshold", to_json(r.case2_threshold)}};
    if (r.which != ReflexiveBoundReport::Case::OutOfRange) j["e_bound"] = to_json(r.e_bound);
    if (r.h2_bound) j["h2_bound"] = to_json(*r.h2_bound);
    if (r.e_bound_other) j["e_bound_other"] = to_json(*r.e_bound_other);
    if (r.h2_bound_other) j["h2_bound_other"] = to_json(*r.h2_bound_other);
    return j;
}

json to_json(const RangeBReport& r) {
    json xs = json::array();
    for (long x : r.ch1.admissible_x) xs.push_back(x);
    json ch1 = {{"x_min", r.ch1.x_min},
                {"x_max", to_json(r.ch1.x_max)},
                {"admissible_x", xs},
                {"y_lo", to_json(r.ch1.y_interval.lo)},
                {"y_hi", to_json(r.ch1.y_interval.hi)},
                {"phi", r.ch1.phi.str()},
                {"psi", r.ch1.psi.str()}};
    if (r.ch1.far_window_sign) ch1["far_window_sign"] = to_string(*r.ch1.far_window_sign);
    json j = {{"k", r.k},
              {"f", r.f},
              {"d", r.d},
              {"supported", r.supported},
              {"A_f", int_str(r.A_f)},
              {"B_f", int_str(r.B_f)},
              {"A_f1", int_str(r.A_f1)},
              {"heart_ok", r.heart_ok},
              {"rank_cap_ok", r.rank_cap_ok},
              {"ch1", ch1},
              {"h2_vanishing_ok", r.h2_vanishing_ok},
              {"y_floor_ok", r.y_floor_ok},
              {"chi_bound", int_str(r.chi_bound)},
              {"conjecture_bound", int_str(r.conjecture_bound)},
              {"all_ok", r.all_ok()}};
    if (r.heart_ok) j["anchor"] = to_json(r.anchor);
    return j;
}

json to_json(const SpecialCaseReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"y", row.y},
                        {"chi_G", to_json(row.chi_G)},
                        {"chi_hrr", to_json(row.chi_hrr)},
                        {"h2", int_str(row.h2)},
                        {"total", to_json(row.total)},
                        {"ok", row.ok}});
    return {{"k", r.k},
            {"d", int_str(r.d)},
            {"d_closed", int_str(r.d_closed)},
            {"E", to_json(r.E)},
            {"E_closed", to_json(r.E_closed)},
            {"q_margin", to_json(r.q_margin)},
            {"q_margin_closed", to_json(r.q_margin_closed)},
            {"y_upper", to_json(r.y_upper)},
            {"y_max", r.y_max},
            {"rows", rows},
            {"target", int_str(r.target)},
            {"conjecture_E", int_str(r.conjecture_E)},
            {"passes", r.passes}};
}

}  // namespace tiltwall::io
