#pragma once

#include "tiltwall/sturm.hpp"

#include <string>
#include <vector>

namespace tiltwall::io {

inline constexpr int kFixtureFormatVersion = 1;

struct SignFixture {
    std::string id;
    std::string description;
    Poly p;
    Interval interval;
    SignClass claimed;
};

struct FixtureOutcome {
    const SignFixture* fixture;
    SignReport report;
    bool ok;
};

// Throws std::runtime_error on a malformed file or an unsupported version.
std::vector<SignFixture> load_fixtures(const std::string& path);
std::vector<SignFixture> parse_fixtures(const std::string& text);

std::vector<FixtureOutcome> certify(const std::vector<SignFixture>& fixtures);

}  // namespace tiltwall::io
