#include "fixtures.hpp"

#include "json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tiltwall::io {

namespace {

std::optional<Rat> bound(const json& iv, const char* key) {
    if (!iv.contains(key) || iv.at(key).is_null()) return std::nullopt;
    return rat_from_json(iv.at(key));
}

SignFixture fixture_from_json(const json& j) {
    SignFixture f;
    f.id = j.at("id").get<std::string>();
    f.description = j.value("description", "");
    std::vector<Rat> cs;
    for (const auto& c : j.at("coefficients")) cs.push_back(rat_from_json(c));
    f.p = Poly(std::move(cs));
    const json& iv = j.at("interval");
    f.interval.lo = bound(iv, "lo");
    f.interval.hi = bound(iv, "hi");
    f.interval.lo_closed = f.interval.lo && iv.value("lo_closed", true);
    f.interval.hi_closed = f.interval.hi && iv.value("hi_closed", true);
    auto claimed = sign_class_from_string(j.at("claimed").get<std::string>());
    if (!claimed) throw std::runtime_error("fixture " + f.id + ": unknown sign class " + j.at("claimed").dump());
    f.claimed = *claimed;
    return f;
}

}  // namespace

std::vector<SignFixture> parse_fixtures(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("fixtures: ") + e.what());
    }
    int version = doc.value("version", 0);
    if (version != kFixtureFormatVersion)
        throw std::runtime_error("fixtures: unsupported version " + std::to_string(version));
    std::vector<SignFixture> out;
    try {
        for (const auto& j : doc.at("fixtures")) out.push_back(fixture_from_json(j));
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("fixtures: ") + e.what());
    }
    return out;
}

std::vector<SignFixture> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixtures file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_fixtures(ss.str());
}

std::vector<FixtureOutcome> certify(const std::vector<SignFixture>& fixtures) {
    std::vector<FixtureOutcome> out;
    out.reserve(fixtures.size());
    for (const auto& f : fixtures) {
        SignReport rep = sturm_sign(f.p, f.interval);
        out.push_back({&f, rep, rep.kind == f.claimed});
    }
    return out;
}

}  // namespace tiltwall::io
