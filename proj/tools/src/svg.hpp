#pragma once

#include "tiltwall/chern.hpp"
#include "tiltwall/profile.hpp"
#include "tiltwall/wallsearch.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace tiltwall::io {

struct PlotLayers {
    bool walls = true;
    bool q_region = true;
    bool nu_zero_hyperbola = false;
    bool vertical_wall = false;
};

struct PlotSpec {
    ChernVec v;
    Rat beta_lo, beta_hi;
    Rat alpha_max;
    PlotLayers layers;
    int width_px = 640;
    int height_px = 360;
    // Inputs to the wall search feeding the walls layer.
    std::string profile = "P3";
    std::optional<long> vanishing;

    void validate() const;
};

PlotSpec plot_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PlotSpec& s);

// Byte-identical output for identical input; floating point is used only for pixel coordinates.
std::string emit_svg(const PlotSpec& spec, const SearchResult& data);

}  // namespace tiltwall::io
