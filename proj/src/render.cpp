#include "sulva/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace sulva {

namespace {

// Layout runs on doubles distilled from certified decimal renderings;
// exactness only matters for the geometry itself, not for pixels.
double approx(const Scalar& s) {
    return std::strtod(to_decimal(s, 12).c_str(), nullptr);
}

struct Bounds {
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    bool any = false;

    void take(double x, double y) {
        if (!any) {
            min_x = max_x = x;
            min_y = max_y = y;
            any = true;
            return;
        }
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v + 0.0); // normalize -0
    std::string s(buf);
    if (s == "-0.00")
        s = "0.00";
    return s;
}

struct Placed {
    std::string name;
    const GeoObject* obj;
    bool thick;
};

} // namespace

std::string render_svg(const std::vector<Trace>& traces, const RenderSpec& spec) {
    if (traces.empty())
        fail(Errc::EmptyTraceSet, "nothing to render");

    struct Panel {
        GeoEnvironment env;
        std::vector<Placed> order;
        Bounds bounds;
        std::string title;
    };
    std::vector<Panel> panels;

    for (const auto& trace : traces) {
        Panel panel;
        panel.title = trace.title;
        panel.env = replay(trace);
        std::set<std::string> thick_names;
        for (const auto& [semantic, object] : trace.labels)
            thick_names.insert(object);
        for (const auto& step : trace.steps)
            for (const auto& out : step.outputs)
                panel.order.push_back({out, &panel.env.at(out), thick_names.count(out) > 0});
        for (const auto& placed : panel.order) {
            if (const Point* p = std::get_if<Point>(placed.obj))
                panel.bounds.take(approx(p->x), approx(p->y));
            else if (const Segment* s = std::get_if<Segment>(placed.obj)) {
                panel.bounds.take(approx(s->start.x), approx(s->start.y));
                panel.bounds.take(approx(s->end.x), approx(s->end.y));
            } else if (const Circle* c = std::get_if<Circle>(placed.obj)) {
                double cx = approx(c->center.x), cy = approx(c->center.y), r = approx(c->radius);
                panel.bounds.take(cx - r, cy - r);
                panel.bounds.take(cx + r, cy + r);
            }
        }
        panels.push_back(std::move(panel));
    }

    int total_width = spec.width * static_cast<int>(panels.size());
    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << total_width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << total_width << " "
        << spec.height << "\">\n";
    svg << "  <rect x=\"0\" y=\"0\" width=\"" << total_width << "\" height=\"" << spec.height
        << "\" fill=\"#ffffff\"/>\n";

    for (size_t idx = 0; idx < panels.size(); ++idx) {
        const Panel& panel = panels[idx];
        double margin = 0.08 * std::min(spec.width, spec.height);
        double usable_w = spec.width - 2 * margin;
        double usable_h = spec.height - 2 * margin - 16; // room for the title line
        double span_x = std::max(panel.bounds.max_x - panel.bounds.min_x, 1e-9);
        double span_y = std::max(panel.bounds.max_y - panel.bounds.min_y, 1e-9);
        double scale = std::min(usable_w / span_x, usable_h / span_y);
        double offset_x = idx * spec.width + margin +
                          (usable_w - span_x * scale) / 2 - panel.bounds.min_x * scale;
        // +y North draws upward: flip.
        double offset_y = margin + 16 + (usable_h - span_y * scale) / 2 +
                          panel.bounds.max_y * scale;

        auto X = [&](double x) { return offset_x + x * scale; };
        auto Y = [&](double y) { return offset_y - y * scale; };

        svg << "  <g>\n";
        svg << "    <text x=\"" << fmt(idx * spec.width + margin) << "\" y=\"" << fmt(margin)
            << "\" font-family=\"monospace\" font-size=\"12\">" << panel.title << "</text>\n";

        // Circles and cords first (thin under thick), pegs on top.
        for (bool thick_pass : {false, true}) {
            for (const auto& placed : panel.order) {
                if (placed.thick != thick_pass)
                    continue;
                const std::string& style = placed.thick ? spec.thick_style : spec.thin_style;
                if (const Segment* s = std::get_if<Segment>(placed.obj)) {
                    svg << "    <line x1=\"" << fmt(X(approx(s->start.x))) << "\" y1=\""
                        << fmt(Y(approx(s->start.y))) << "\" x2=\"" << fmt(X(approx(s->end.x)))
                        << "\" y2=\"" << fmt(Y(approx(s->end.y))) << "\" style=\"" << style
                        << "\"/>\n";
                } else if (const Circle* c = std::get_if<Circle>(placed.obj)) {
                    svg << "    <circle cx=\"" << fmt(X(approx(c->center.x))) << "\" cy=\""
                        << fmt(Y(approx(c->center.y))) << "\" r=\""
                        << fmt(approx(c->radius) * scale) << "\" style=\"" << style << "\"/>\n";
                }
            }
        }
        for (const auto& placed : panel.order) {
            const Point* p = std::get_if<Point>(placed.obj);
            if (!p)
                continue;
            double px = X(approx(p->x)), py = Y(approx(p->y));
            svg << "    <circle cx=\"" << fmt(px) << "\" cy=\"" << fmt(py)
                << "\" r=\"3\" style=\"" << spec.peg_style << "\"/>\n";
            svg << "    <text x=\"" << fmt(px + 5) << "\" y=\"" << fmt(py - 5)
                << "\" font-family=\"monospace\" font-size=\"10\">" << placed.name;
            if (spec.decimal_labels)
                svg << " (" << to_decimal(p->x, spec.label_precision) << ", "
                    << to_decimal(p->y, spec.label_precision) << ")";
            svg << "</text>\n";
        }
        svg << "  </g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace sulva
