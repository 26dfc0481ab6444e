#include "resland/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <vector>

#include "resland/errors.hpp"

#ifndef RESLAND_VERSION
#define RESLAND_VERSION "0.0.0"
#endif

namespace resland {

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

// Light grey for the largest eps, darker for smaller ones.
std::string shade(std::size_t rank, std::size_t count) {
    const int lo = 90, hi = 220;
    const int g = count <= 1 ? hi : hi - static_cast<int>((hi - lo) * rank / (count - 1));
    char buf[16];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", g, g, 255);
    return buf;
}

} // namespace

std::string render_svg(const ComplexMatrix& a, const PseudospectrumGrid& grid, std::span<const double> levels,
                       int width_px) {
    const Region& g = grid.region;
    if (width_px < 16) throw DomainError("svg width too small");
    const double w = width_px;
    const double h = w * (g.im_max - g.im_min) / (g.re_max - g.re_min);
    const double sx = w / (g.re_max - g.re_min);
    const double sy = h / (g.im_max - g.im_min);
    auto px = [&](Complex z) { return std::pair{(z.real() - g.re_min) * sx, (g.im_max - z.imag()) * sy}; };
    const double cw = g.dx() * sx;
    const double ch = g.dy() * sy;

    std::vector<double> sorted(levels.begin(), levels.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- resland " << RESLAND_VERSION << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h)
        << "\" viewBox=\"0 0 " << fmt(w) << ' ' << fmt(h) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    for (std::size_t r = 0; r < sorted.size(); ++r) {
        const double eps = sorted[r];
        out << "<g fill=\"" << shade(r, sorted.size()) << "\" stroke=\"none\" data-eps=\"" << eps << "\">\n";
        for (std::size_t j = 0; j < g.ny; ++j) {
            std::size_t i = 0;
            while (i < g.nx) {
                if (!(grid.at(i, j) < eps)) {
                    ++i;
                    continue;
                }
                std::size_t end = i;
                while (end < g.nx && grid.at(end, j) < eps) ++end;
                auto [x0, y0] = px(g.point(i, j));
                out << "<rect x=\"" << fmt(x0 - cw / 2) << "\" y=\"" << fmt(y0 - ch / 2) << "\" width=\""
                    << fmt(cw * static_cast<double>(end - i)) << "\" height=\"" << fmt(ch) << "\"/>\n";
                i = end;
            }
        }
        out << "</g>\n";
    }

    out << "<g fill=\"none\" stroke=\"#203060\" stroke-width=\"1\">\n";
    for (const Polyline& pl : contours(grid, sorted)) {
        if (pl.points.size() < 2) continue;
        out << (pl.closed ? "<polygon" : "<polyline") << " points=\"";
        for (std::size_t k = 0; k < pl.points.size(); ++k) {
            auto [x, y] = px(pl.points[k]);
            out << (k ? " " : "") << fmt(x) << ',' << fmt(y);
        }
        out << "\"/>\n";
    }
    out << "</g>\n";

    out << "<g fill=\"black\">\n";
    for (const Complex& lam : spectrum(a).eigenvalues) {
        auto [x, y] = px(lam);
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace resland
