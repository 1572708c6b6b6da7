#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "zetaxray/xray.hpp"

namespace zx {
namespace {

constexpr double canvas_height = 1000.0;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    std::string s(buf);
    return s == "-0" ? "0" : s;
}

struct Canvas {
    Rectangle rect;
    double scale;
    double width;

    explicit Canvas(const Rectangle& r) : rect(r), scale(canvas_height / r.height()), width(r.width() * scale) {}
    double x(double sigma) const { return (sigma - rect.sigma_min) * scale; }
    double y(double t) const { return (rect.t_max - t) * scale; }
};

void line(std::string& out, double x0, double y0, double x1, double y1, const char* colour, double w) {
    out += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(x1) + "\" y2=\"" + num(y1) +
           "\" stroke=\"" + colour + "\" stroke-width=\"" + num(w) + "\"/>\n";
}

}  // namespace

std::string render_svg(const std::vector<CurvePolyline>& curves, const std::vector<Singularity>& singularities,
                       const Rectangle& rect, const RenderStyle& style) {
    const Canvas cv(rect);
    const double thin = style.thin_stroke;
    const double thick = 2.0 * style.thin_stroke;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(cv.width) + "\" height=\"" + num(canvas_height) +
           "\" viewBox=\"0 0 " + num(cv.width) + " " + num(canvas_height) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(cv.width) + "\" height=\"" + num(canvas_height) +
           "\" fill=\"white\"/>\n";

    if (style.shade_strip) {
        const double s0 = std::max(0.0, rect.sigma_min);
        const double s1 = std::min(1.0, rect.sigma_max);
        if (s1 > s0) {
            out += "<rect class=\"strip\" x=\"" + num(cv.x(s0)) + "\" y=\"0\" width=\"" + num(cv.x(s1) - cv.x(s0)) +
                   "\" height=\"" + num(canvas_height) + "\" fill=\"#d9d9d9\"/>\n";
        }
    }
    if (style.axes) {
        if (rect.t_min <= 0.0 && rect.t_max >= 0.0) line(out, 0.0, cv.y(0.0), cv.width, cv.y(0.0), "#808080", 0.5 * thin);
        if (rect.sigma_min <= 0.0 && rect.sigma_max >= 0.0) {
            line(out, cv.x(0.0), 0.0, cv.x(0.0), canvas_height, "#808080", 0.5 * thin);
        }
    }

    for (const auto& c : curves) {
        const bool is_thick = c.kind == CurveKind::thick;
        if (style.point_cloud) {
            out += std::string("<g class=\"") + (is_thick ? "thick" : "thin") + "\" fill=\"" +
                   (is_thick ? "black" : "#606060") + "\">\n";
            for (const auto& p : c.points) {
                out += "<circle cx=\"" + num(cv.x(p.re)) + "\" cy=\"" + num(cv.y(p.im)) + "\" r=\"" +
                       num(is_thick ? 1.2 : 0.8) + "\"/>\n";
            }
            out += "</g>\n";
            continue;
        }
        out += std::string("<polyline class=\"") + (is_thick ? "thick" : "thin") +
               "\" fill=\"none\" stroke=\"black\" stroke-width=\"" + num(is_thick ? thick : thin) + "\" points=\"";
        for (std::size_t k = 0; k < c.points.size(); ++k) {
            if (k) out += ' ';
            out += num(cv.x(c.points[k].re)) + "," + num(cv.y(c.points[k].im));
        }
        out += "\"/>\n";
    }

    if (style.labels) {
        for (const auto& c : curves) {
            if (!c.line_number) continue;
            for (std::size_t k = 0; k + 1 < c.points.size(); ++k) {
                const ComplexPoint a = c.points[k];
                const ComplexPoint b = c.points[k + 1];
                if ((a.re + 1.0) * (b.re + 1.0) >= 0.0 || a.re == b.re) continue;
                const double t = a.im + (-1.0 - a.re) / (b.re - a.re) * (b.im - a.im);
                out += "<text x=\"" + num(cv.x(-1.0) + 2.0) + "\" y=\"" + num(cv.y(t) - 2.0) +
                       "\" font-size=\"10\" font-family=\"sans-serif\">" + std::to_string(*c.line_number) + "</text>\n";
                break;
            }
        }
    }

    if (style.markers) {
        for (const auto& s : singularities) {
            const double x = cv.x(s.point.re);
            const double y = cv.y(s.point.im);
            switch (s.type) {
                case SingularityType::zero:
                    out += "<circle class=\"zero\" cx=\"" + num(x) + "\" cy=\"" + num(y) + "\" r=\"3\" fill=\"black\"/>\n";
                    break;
                case SingularityType::pole:
                    out += "<circle class=\"pole\" cx=\"" + num(x) + "\" cy=\"" + num(y) +
                           "\" r=\"3\" fill=\"white\" stroke=\"black\" stroke-width=\"1\"/>\n";
                    break;
                case SingularityType::saddle:
                    line(out, x - 3.0, y - 3.0, x + 3.0, y + 3.0, "black", 1.0);
                    line(out, x - 3.0, y + 3.0, x + 3.0, y - 3.0, "black", 1.0);
                    break;
            }
        }
        for (const auto& g : style.gram_points) {
            if (!rect.contains(g)) continue;
            out += "<circle class=\"gram\" cx=\"" + num(cv.x(g.re)) + "\" cy=\"" + num(cv.y(g.im)) +
                   "\" r=\"4\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

std::string point_cloud(const std::vector<CurvePolyline>& curves) {
    std::string out;
    char buf[96];
    for (const auto& c : curves) {
        for (const auto& p : c.points) {
            std::snprintf(buf, sizeof buf, "%.12g %.12g %s\n", p.re, p.im, c.kind == CurveKind::thick ? "thick" : "thin");
            out += buf;
        }
    }
    return out;
}

std::string curve_inventory(const std::vector<CurvePolyline>& curves) {
    std::string out;
    for (const auto& c : curves) {
        nlohmann::ordered_json j;
        j["kind"] = to_string(c.kind);
        j["number"] = c.line_number ? nlohmann::ordered_json(*c.line_number) : nlohmann::ordered_json(nullptr);
        j["crossing_numbers"] = c.crossing_numbers;
        j["closed"] = c.closed;
        j["truncated"] = c.truncated;
        j["points"] = c.points.size();
        if (!c.points.empty()) {
            j["start"] = {c.points.front().re, c.points.front().im};
            j["end"] = {c.points.back().re, c.points.back().im};
        }
        auto sing = nlohmann::ordered_json::array();
        for (const auto& s : c.attached_singularities) {
            nlohmann::ordered_json e;
            e["type"] = to_string(s.type);
            e["sigma"] = s.point.re;
            e["t"] = s.point.im;
            e["multiplicity"] = s.multiplicity;
            sing.push_back(e);
        }
        j["singularities"] = sing;
        out += j.dump() + "\n";
    }
    return out;
}

}  // namespace zx
