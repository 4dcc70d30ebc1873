#include "svg.hpp"

#include "json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace tiltwall::io {

void PlotSpec::validate() const {
    if (!(beta_lo < beta_hi)) throw std::invalid_argument("plot: beta_range must satisfy lo < hi");
    if (alpha_max.sign() <= 0) throw std::invalid_argument("plot: alpha_max must be positive");
    if (width_px <= 0 || height_px <= 0) throw std::invalid_argument("plot: pixel dimensions must be positive");
}

PlotSpec plot_spec_from_json(const json& j) {
    PlotSpec s;
    const json& v = j.at("v");
    s.v = v.is_string() ? parse_class(v.get<std::string>()) : chern_from_json(v);
    const json& br = j.at("beta_range");
    if (!br.is_array() || br.size() != 2) throw std::invalid_argument("plot: beta_range must be [lo, hi]");
    s.beta_lo = rat_from_json(br[0]);
    s.beta_hi = rat_from_json(br[1]);
    s.alpha_max = rat_from_json(j.at("alpha_max"));
    if (j.contains("layers")) {
        const json& l = j.at("layers");
        s.layers.walls = l.value("walls", false);
        s.layers.q_region = l.value("q_region", false);
        s.layers.nu_zero_hyperbola = l.value("nu_zero_hyperbola", false);
        s.layers.vertical_wall = l.value("vertical_wall", false);
    }
    s.width_px = j.value("width_px", s.width_px);
    s.height_px = j.value("height_px", s.height_px);
    s.profile = j.value("profile", s.profile);
    if (j.contains("vanishing") && !j.at("vanishing").is_null()) s.vanishing = j.at("vanishing").get<long>();
    s.validate();
    return s;
}

json to_json(const PlotSpec& s) {
    json j = {{"v", to_json(s.v)},
              {"beta_range", {to_json(s.beta_lo), to_json(s.beta_hi)}},
              {"alpha_max", to_json(s.alpha_max)},
              {"layers",
               {{"walls", s.layers.walls},
                {"q_region", s.layers.q_region},
                {"nu_zero_hyperbola", s.layers.nu_zero_hyperbola},
                {"vertical_wall", s.layers.vertical_wall}}},
              {"width_px", s.width_px},
              {"height_px", s.height_px},
              {"profile", s.profile}};
    if (s.vanishing) j["vanishing"] = *s.vanishing;
    return j;
}

namespace {

std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000") s = "0.000000";
    return s;
}

struct Canvas {
    double b0, b1, amax, w, h;

    double px(double beta) const { return (beta - b0) / (b1 - b0) * w; }
    double py(double alpha) const { return h - alpha / amax * h; }
    double sx(double len) const { return len / (b1 - b0) * w; }
    double sy(double len) const { return len / amax * h; }
};

// Upper half of the circle (beta - c)^2 + alpha^2 = r^2.
std::string semicircle_path(const Canvas& cv, double c, double r, bool close) {
    std::ostringstream d;
    d << "M " << num(cv.px(c - r)) << ' ' << num(cv.py(0)) << " A " << num(cv.sx(r)) << ' ' << num(cv.sy(r))
      << " 0 0 1 " << num(cv.px(c + r)) << ' ' << num(cv.py(0));
    if (close) d << " Z";
    return d.str();
}

std::string rect_path(double x0, double y0, double x1, double y1) {
    std::ostringstream d;
    d << "M " << num(x0) << ' ' << num(y0) << " H " << num(x1) << " V " << num(y1) << " H " << num(x0) << " Z";
    return d.str();
}

}  // namespace

std::string emit_svg(const PlotSpec& spec, const SearchResult& data) {
    spec.validate();
    Canvas cv{spec.beta_lo.to_double(), spec.beta_hi.to_double(), spec.alpha_max.to_double(),
              static_cast<double>(spec.width_px), static_cast<double>(spec.height_px)};
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width_px << "\" height=\""
        << spec.height_px << "\" viewBox=\"0 0 " << spec.width_px << ' ' << spec.height_px << "\">\n";

    if (spec.layers.q_region) {
        const QRegion& q = data.q;
        std::string attrs = " class=\"q-region\" data-shape=\"" + std::string(to_string(q.shape)) +
                            "\" data-center=\"" + q.center.str() + "\" data-radius-sq=\"" + q.radius_sq.str() + "\"";
        double c = q.center.to_double();
        switch (q.shape) {
            case QRegion::Shape::Disk:
                if (q.radius_sq.sign() > 0)
                    out << "  <path" << attrs << " d=\"" << semicircle_path(cv, c, std::sqrt(q.radius_sq.to_double()), true)
                        << "\" fill=\"#d62728\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
                break;
            case QRegion::Shape::HalfPlane: {
                double edge = std::clamp(cv.px(c), 0.0, cv.w);
                double x0 = q.negative_side > 0 ? edge : 0.0, x1 = q.negative_side > 0 ? cv.w : edge;
                out << "  <path" << attrs << " d=\"" << rect_path(x0, 0, x1, cv.h)
                    << "\" fill=\"#d62728\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";
                break;
            }
            case QRegion::Shape::Unbounded: {
                std::string d = rect_path(0, 0, cv.w, cv.h);
                if (q.radius_sq.sign() > 0) d += ' ' + semicircle_path(cv, c, std::sqrt(q.radius_sq.to_double()), true);
                out << "  <path" << attrs << " d=\"" << d
                    << "\" fill=\"#d62728\" fill-opacity=\"0.2\" fill-rule=\"evenodd\" stroke=\"none\"/>\n";
                break;
            }
            case QRegion::Shape::Empty:
                break;
        }
    }

    if (spec.layers.walls) {
        for (const auto& cand : data.candidates) {
            const Wall& w = cand.wall;
            out << "  <path class=\"wall\" data-center=\"" << w.center.str() << "\" data-radius-sq=\""
                << w.radius_sq.str() << "\" d=\"" << semicircle_path(cv, w.center.to_double(), std::sqrt(w.radius_sq.to_double()), false)
                << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
        }
    }

    if (spec.layers.nu_zero_hyperbola) {
        // Sampled on an exact beta grid; alpha^2 is exact, its root is not.
        const int samples = 240;
        ChernVec2 v = spec.v.truncate();
        std::ostringstream d;
        bool pen = false;
        for (int i = 0; i <= samples; ++i) {
            Rat beta = spec.beta_lo + (spec.beta_hi - spec.beta_lo) * Rat(i, samples);
            NuZero z = nu_zero_alpha_sq(v, beta);
            if (z.kind != NuZero::Kind::Point || z.alpha_sq.sign() < 0 || z.alpha_sq > spec.alpha_max * spec.alpha_max) {
                pen = false;
                continue;
            }
            d << (pen ? " L " : (d.tellp() > 0 ? " M " : "M ")) << num(cv.px(beta.to_double())) << ' '
              << num(cv.py(std::sqrt(z.alpha_sq.to_double())));
            pen = true;
        }
        if (d.tellp() > 0)
            out << "  <path class=\"nu-zero\" d=\"" << d.str()
                << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-dasharray=\"6 4\"/>\n";
    }

    if (spec.layers.vertical_wall) {
        if (auto m = mu(spec.v.truncate()); m && *m >= spec.beta_lo && *m <= spec.beta_hi) {
            double x = cv.px(m->to_double());
            out << "  <line class=\"vertical-wall\" data-beta=\"" << m->str() << "\" x1=\"" << num(x) << "\" y1=\""
                << num(0) << "\" x2=\"" << num(x) << "\" y2=\"" << num(cv.h)
                << "\" stroke=\"#7f7f7f\" stroke-dasharray=\"2 3\"/>\n";
        }
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace tiltwall::io
