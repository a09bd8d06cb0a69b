#include "djm/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <sstream>

namespace djm {

namespace {

constexpr double kMargin = 20;

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

class Canvas {
public:
    Canvas(double size, const std::vector<std::pair<double, double>>& extent) : size_(size)
    {
        for (auto [x, y] : extent) {
            xlo_ = std::min(xlo_, x);
            xhi_ = std::max(xhi_, x);
            ylo_ = std::min(ylo_, y);
            yhi_ = std::max(yhi_, y);
        }
        double span = std::max({xhi_ - xlo_, yhi_ - ylo_, 1e-12});
        scale_ = (size_ - 2 * kMargin) / span;
        out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
             << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(size_) << "\" height=\""
             << num(size_) << "\" viewBox=\"0 0 " << num(size_) << " " << num(size_) << "\">\n"
             << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    }

    std::string px(double x) const { return num(kMargin + (x - xlo_) * scale_); }
    std::string py(double y) const { return num(size_ - kMargin - (y - ylo_) * scale_); }

    void polyline(const std::vector<std::pair<double, double>>& pts, const std::string& style, const std::string& id)
    {
        out_ << "<polyline id=\"" << id << "\" fill=\"none\" " << style << " points=\"";
        for (std::size_t k = 0; k < pts.size(); ++k) out_ << (k ? " " : "") << px(pts[k].first) << "," << py(pts[k].second);
        out_ << "\"/>\n";
    }

    void circle(double x, double y, const std::string& id)
    {
        out_ << "<circle id=\"" << id << "\" cx=\"" << px(x) << "\" cy=\"" << py(y)
             << "\" r=\"4\" fill=\"black\"/>\n";
    }

    void raw(const std::string& s) { out_ << s; }

    std::string finish()
    {
        out_ << "</svg>\n";
        return out_.str();
    }

private:
    double size_;
    double xlo_ = std::numeric_limits<double>::max();
    double xhi_ = std::numeric_limits<double>::lowest();
    double ylo_ = std::numeric_limits<double>::max();
    double yhi_ = std::numeric_limits<double>::lowest();
    double scale_ = 1;
    std::ostringstream out_;
};

std::string edge_style(const SvgOptions& o, EdgeId e)
{
    if (o.highlight.count(e)) return "stroke=\"#c0392b\" stroke-width=\"3.5\"";
    if (o.subgraph.count(e)) return "stroke=\"#2c6fbb\" stroke-width=\"2\"";
    return "stroke=\"#999999\" stroke-width=\"0.6\"";
}

std::pair<double, double> dbl(const Point& p) { return {p.x.to_double(), p.y.to_double()}; }

}  // namespace

std::string drawing_svg(const Drawing& d, const SvgOptions& options)
{
    std::vector<std::pair<double, double>> extent;
    for (const Point& p : d.vertices()) extent.push_back(dbl(p));
    for (const PolylineEdge& e : d.edges())
        for (const Point& p : e.chain) extent.push_back(dbl(p));
    Canvas canvas(options.size, extent);

    // Plain edges first so that highlighted ones stay on top.
    for (int pass = 0; pass < 3; ++pass)
        for (EdgeId e = 0; e < d.edge_count(); ++e) {
            int level = options.highlight.count(e) ? 2 : (options.subgraph.count(e) ? 1 : 0);
            if (level != pass) continue;
            std::vector<std::pair<double, double>> pts;
            for (const Point& p : d.edge(e).chain) pts.push_back(dbl(p));
            canvas.polyline(pts, edge_style(options, e), "e" + std::to_string(e));
        }
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        auto [x, y] = dbl(d.vertex(v));
        canvas.circle(x, y, "v" + std::to_string(v));
    }
    return canvas.finish();
}

std::string cylinder_svg(const CylindricalDrawing& c, const SvgOptions& options)
{
    std::vector<std::vector<std::pair<double, double>>> chains;
    std::vector<std::pair<double, double>> extent{{0.0, 0.0}, {2.0 * c.delta, 0.0}};
    for (int k = 0; k < static_cast<int>(c.edges.size()); ++k) {
        std::vector<std::pair<double, double>> pts;
        for (const Point& p : cover_chain(c, k)) pts.push_back(dbl(p));
        extent.insert(extent.end(), pts.begin(), pts.end());
        chains.push_back(std::move(pts));
    }
    Canvas canvas(options.size, extent);
    double ylo = 0, yhi = 0;
    for (auto [x, y] : extent) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
    }
    canvas.raw("<line x1=\"" + canvas.px(c.delta) + "\" y1=\"" + canvas.py(ylo) + "\" x2=\"" + canvas.px(c.delta) +
               "\" y2=\"" + canvas.py(yhi) + "\" stroke=\"#555555\" stroke-dasharray=\"4 4\"/>\n");
    for (int k = 0; k < static_cast<int>(chains.size()); ++k)
        canvas.polyline(chains[k], edge_style(options, k), "e" + std::to_string(k));
    for (int copy = 0; copy < 2; ++copy)
        for (int l = 0; l < c.delta; ++l)
            canvas.circle(l + copy * c.delta, 0, "v" + std::to_string(l) + (copy ? "b" : "a"));
    return canvas.finish();
}

}  // namespace djm
