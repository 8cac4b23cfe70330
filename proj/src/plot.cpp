#include "torcode/plot.hpp"

#include "torcode/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace torcode {

namespace {

struct Frame {
        double x0, y0, x1, y1, scale;
        double px(double x) const { return 20 + (x - x0) * scale; }
        double py(double y) const { return 20 + (y1 - y) * scale; }
};

std::string num(double v)
{
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
}

std::string escape(const std::string &s)
{
        std::string out;
        for (char c : s) {
                if (c == '<')
                        out += "&lt;";
                else if (c == '>')
                        out += "&gt;";
                else if (c == '&')
                        out += "&amp;";
                else
                        out += c;
        }
        return out;
}

std::string path(const Frame &f, const std::vector<std::pair<double, double>> &pts)
{
        std::string d;
        for (size_t i = 0; i < pts.size(); ++i)
                d += (i ? " L " : "M ") + num(f.px(pts[i].first)) + " " + num(f.py(pts[i].second));
        return d + " Z";
}

} // namespace

std::string render_svg(const CodingSpec &spec, const std::vector<TorusRat> &points)
{
        DomainPolygon dom = fundamental_domain(spec);
        std::vector<std::pair<double, double>> omega, pi, square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        for (const auto &v : dom.vertices)
                omega.emplace_back(v[0].to_double(), v[1].to_double());
        for (const auto &[a, b] : Pi_vertices(spec.compactum()))
                pi.emplace_back(a.to_double(), b.to_double());

        double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
        for (const auto *set : {&omega, &pi})
                for (auto [x, y] : *set) {
                        x0 = std::min(x0, x);
                        x1 = std::max(x1, x);
                        y0 = std::min(y0, y);
                        y1 = std::max(y1, y);
                }
        Frame f{x0, y0, x1, y1, 560.0 / std::max(x1 - x0, y1 - y0)};
        double w = 40 + (x1 - x0) * f.scale, h = 80 + (y1 - y0) * f.scale;

        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(w) << "\" height=\""
           << num(h) << "\" viewBox=\"0 0 " << num(w) << " " << num(h) << "\">\n";
        os << "  <metadata>matrix=" << spec.matrix.str() << " p=" << spec.point.p << " q=" << spec.point.q
           << " K=" << spec.multiplicity << " area=" << escape(dom.area.str()) << "</metadata>\n";
        os << "  <rect x=\"0\" y=\"0\" width=\"" << num(w) << "\" height=\"" << num(h) << "\" fill=\"white\"/>\n";
        os << "  <path id=\"pi\" d=\"" << path(f, pi)
           << "\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"6,4\" stroke-width=\"1\"/>\n";
        os << "  <path id=\"omega\" d=\"" << path(f, omega)
           << "\" fill=\"#4477aa\" fill-opacity=\"0.25\" stroke=\"#224477\" stroke-width=\"1.5\"/>\n";
        os << "  <path id=\"unit-square\" d=\"" << path(f, square)
           << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
        for (const auto &p : points) {
                double x = p[0].get_d(), y = p[1].get_d();
                os << "  <circle cx=\"" << num(f.px(x)) << "\" cy=\"" << num(f.py(y))
                   << "\" r=\"4\" fill=\"#cc3311\"/>\n";
                os << "  <text x=\"" << num(f.px(x) + 6) << "\" y=\"" << num(f.py(y) - 6)
                   << "\" font-size=\"12\" font-family=\"sans-serif\">(" << escape(torus_rat_str(p))
                   << ")</text>\n";
        }
        os << "  <text x=\"20\" y=\"" << num(h - 36) << "\" font-size=\"13\" font-family=\"sans-serif\">xi = "
           << escape(spec.point.xi.str()) << ", eta = " << escape(spec.point.eta.str()) << "</text>\n";
        os << "  <text x=\"20\" y=\"" << num(h - 16) << "\" font-size=\"13\" font-family=\"sans-serif\">area = "
           << escape(dom.area.str()) << " (K = " << spec.multiplicity << ")</text>\n";
        os << "</svg>\n";
        return os.str();
}

} // namespace torcode
