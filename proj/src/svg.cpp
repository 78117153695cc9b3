#include "zonorec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "zonorec/forest.hpp"

namespace zonorec {

namespace {

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

}  // namespace

std::string render_svg(const Tiling& t, const SvgOptions& opt)
{
    const auto& spec = t.spec();
    double edge = 0;
    for (const auto& v : spec.v()) edge = std::max(edge, std::sqrt(mpq_class(v.x * v.x + v.y * v.y).get_d()));
    const double unit = opt.scale / edge, margin = opt.scale / 2;

    // y grows downward in SVG; the top vertex of P goes to the top of the picture
    const Vec2 hi = project(spec, spec.top());
    double xmin = 0, xmax = 0;
    for (const auto& p : t.vertices()) {
        double x = project(spec, p).x.get_d();
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
    }
    auto px = [&](const Point& p) {
        Vec2 q = project(spec, p);
        return std::make_pair(margin + (q.x.get_d() - xmin) * unit, margin + mpq_class(hi.y - q.y).get_d() * unit);
    };
    const double width = 2 * margin + (xmax - xmin) * unit, height = 2 * margin + hi.y.get_d() * unit;

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    out += "<g class=\"rhombi\" fill=\"#f3efe0\" stroke=\"#333333\" stroke-width=\"1\">\n";
    for (const auto& r : t.rhombi()) {
        out += "<path class=\"rhombus\" d=\"";
        const auto c = r.corners();
        for (std::size_t i = 0; i < c.size(); ++i) {
            auto [x, y] = px(c[i]);
            out += (i ? " L " : "M ") + num(x) + " " + num(y);
        }
        out += " Z\"/>\n";
    }
    out += "</g>\n";
    if (opt.forest) {
        out += "<g class=\"forest\" stroke=\"#c0392b\" stroke-width=\"3\">\n";
        for (const auto& e : fundamental_forest(t).edges) {
            auto [x1, y1] = px(e.base);
            auto [x2, y2] = px(plus(e.base, e.dir));
            out += "<line class=\"forest-edge\" x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) +
                   "\" y2=\"" + num(y2) + "\"/>\n";
        }
        out += "</g>\n";
    }
    if (opt.labels) {
        out += "<g class=\"labels\" font-family=\"monospace\" font-size=\"9\" text-anchor=\"middle\">\n";
        for (const auto& p : t.vertices()) {
            auto [x, y] = px(p);
            std::string s;
            for (int c : p) s += std::to_string(c);
            out += "<text x=\"" + num(x) + "\" y=\"" + num(y - 3) + "\">" + s + "</text>\n";
        }
        out += "</g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace zonorec
