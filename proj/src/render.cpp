#include "desir/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "desir/cone.hpp"
#include "desir/error.hpp"

namespace desir {

namespace {

constexpr double kPanel = 400.0;
constexpr double kHalf = kPanel / 2.0;
constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") {
        s = "0.000";
    }
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

enum class RegionShape { Wedge, HalfPlane, Plane };

struct Region {
    RegionShape shape = RegionShape::Plane;
    double from = 0.0;  // counterclockwise extent [from, from + span]
    double span = 2 * kPi;
};

// The cone spanned by the directions: the complement of the widest angular
// gap between consecutive directions.
Region cone_region(const std::vector<Gamble>& gens) {
    std::vector<double> angles{0.0, kPi / 2};  // the indicators
    for (const auto& g : gens) {
        if (!g.is_zero()) {
            angles.push_back(std::atan2(g[1].to_double(), g[0].to_double()));
        }
    }
    for (auto& a : angles) {
        if (a < 0) {
            a += 2 * kPi;
        }
    }
    std::sort(angles.begin(), angles.end());
    double widest = 0.0;
    std::size_t after = 0;
    for (std::size_t i = 0; i < angles.size(); ++i) {
        const double next = i + 1 < angles.size() ? angles[i + 1] : angles.front() + 2 * kPi;
        if (next - angles[i] > widest) {
            widest = next - angles[i];
            after = (i + 1) % angles.size();
        }
    }
    Region r;
    r.from = angles[after];
    r.span = 2 * kPi - widest;
    if (widest > kPi + kAngleTol) {
        r.shape = RegionShape::Wedge;
    } else if (widest >= kPi - kAngleTol) {
        r.shape = RegionShape::HalfPlane;
        r.span = kPi;
    } else {
        r.shape = RegionShape::Plane;
    }
    return r;
}

void panel(std::ostringstream& svg, const RenderPanel& p, std::size_t index) {
    double extent = 1.0;
    for (const auto& g : p.generators) {
        extent = std::max({extent, std::abs(g[0].to_double()), std::abs(g[1].to_double())});
    }
    const double scale = (kHalf - 20.0) / (extent * 1.2);
    const double ox = kPanel * static_cast<double>(index) + kHalf;
    const double oy = kHalf;
    auto px = [&](double x) { return num(ox + x * scale); };
    auto py = [&](double y) { return num(oy - y * scale); };

    const std::string clip = "clip" + std::to_string(index);
    svg << "  <clipPath id=\"" << clip << "\"><rect x=\"" << num(ox - kHalf) << "\" y=\"0.000\" width=\""
        << num(kPanel) << "\" height=\"" << num(kPanel) << "\"/></clipPath>\n";
    svg << "  <g clip-path=\"url(#" << clip << ")\">\n";

    const Region region = cone_region(p.generators);
    if (region.shape == RegionShape::Plane) {
        svg << "    <rect class=\"cone\" x=\"" << num(ox - kHalf) << "\" y=\"0.000\" width=\"" << num(kPanel)
            << "\" height=\"" << num(kPanel) << "\"/>\n";
    } else {
        // Far enough out to leave the panel.
        const double radius = 2.0 * kPanel / scale;
        svg << "    <polygon class=\"cone\" points=\"" << px(0) << "," << py(0);
        const int steps = std::max(2, static_cast<int>(std::ceil(region.span / (kPi / 16))));
        for (int s = 0; s <= steps; ++s) {
            const double a = region.from + region.span * s / steps;
            svg << " " << px(radius * std::cos(a)) << "," << py(radius * std::sin(a));
        }
        svg << "\"/>\n";
    }
    svg << "    <line class=\"axis\" x1=\"" << num(ox - kHalf) << "\" y1=\"" << num(oy) << "\" x2=\""
        << num(ox + kHalf) << "\" y2=\"" << num(oy) << "\"/>\n";
    svg << "    <line class=\"axis\" x1=\"" << num(ox) << "\" y1=\"0.000\" x2=\"" << num(ox) << "\" y2=\""
        << num(kPanel) << "\"/>\n";
    for (const auto& g : p.generators) {
        svg << "    <circle class=\"gen\" cx=\"" << px(g[0].to_double()) << "\" cy=\"" << py(g[1].to_double())
            << "\" r=\"4.000\"><title>" << escape(to_string(g)) << "</title></circle>\n";
    }
    const bool zero_inside = zero_in_desext(ConeGenerators(2, p.generators)).has_value();
    svg << "    <circle class=\"" << (zero_inside ? "origin-in" : "origin-out") << "\" cx=\"" << num(ox)
        << "\" cy=\"" << num(oy) << "\" r=\"5.000\"/>\n";
    if (!p.title.empty()) {
        svg << "    <text x=\"" << num(ox - kHalf + 8.0) << "\" y=\"18.000\">" << escape(p.title) << "</text>\n";
    }
    svg << "  </g>\n";
}

} // namespace

std::string render_svg(const std::vector<RenderPanel>& panels) {
    for (const auto& p : panels) {
        for (const auto& g : p.generators) {
            if (g.size() != 2) {
                throw DimensionError("rendering needs exactly two outcomes, got a gamble with " +
                                     std::to_string(g.size()));
            }
        }
    }
    const std::size_t count = std::max<std::size_t>(1, panels.size());
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << num(kPanel * static_cast<double>(count)) << "\" height=\"" << num(kPanel) << "\" viewBox=\"0 0 "
        << num(kPanel * static_cast<double>(count)) << " " << num(kPanel) << "\">\n";
    svg << "  <style>.cone{fill:#9ecae1;fill-opacity:0.6;stroke:none}.axis{stroke:#444;stroke-width:1}"
           ".gen{fill:#d62728}.origin-in{fill:#000;stroke:#000}.origin-out{fill:#fff;stroke:#000}"
           "text{font-family:sans-serif;font-size:12px}</style>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        panel(svg, panels[i], i);
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace desir
