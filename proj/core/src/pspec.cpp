#include "resland/pspec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "resland/errors.hpp"

namespace resland {

void Region::validate() const {
    if (!(re_min < re_max) || !(im_min < im_max)) throw DomainError("region must satisfy re_min < re_max, im_min < im_max");
    if (nx < 2 || ny < 2) throw DomainError("region needs nx, ny >= 2");
}

int ComponentReport::total_holes() const noexcept {
    int total = 0;
    for (int h : holes_per_component) total += h;
    return total;
}

PseudospectrumGrid scan(const ComplexMatrix& a, const Region& region) {
    region.validate();
    PseudospectrumGrid grid;
    grid.region = region;
    grid.smin.assign(region.nx * region.ny, 0.0);

    auto scan_rows = [&](std::size_t first, std::size_t stride) {
        for (std::size_t j = first; j < region.ny; j += stride) {
            for (std::size_t i = 0; i < region.nx; ++i) {
                double v;
                try {
                    v = smallest_singular_value(a, region.point(i, j));
                } catch (const std::exception&) {
                    v = std::numeric_limits<double>::quiet_NaN();
                }
                grid.smin[j * region.nx + i] = v;
            }
        }
    };

    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), region.ny));
    if (workers == 1) {
        scan_rows(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan_rows, w, workers);
    }
    grid.failures = static_cast<std::size_t>(
        std::count_if(grid.smin.begin(), grid.smin.end(), [](double v) { return std::isnan(v); }));
    return grid;
}

bool membership(const ComplexMatrix& a, Complex z, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    return smallest_singular_value(a, z) < epsilon;
}

namespace {

// Edge ids: horizontal edge (i,j)-(i+1,j) -> 2*(j*nx+i), vertical edge
// (i,j)-(i,j+1) -> 2*(j*nx+i)+1.
struct Segment {
    long long e0;
    long long e1;
};

} // namespace

std::vector<Polyline> contours(const PseudospectrumGrid& grid, std::span<const double> levels) {
    const Region& g = grid.region;
    const std::size_t nx = g.nx;
    const std::size_t ny = g.ny;
    std::vector<Polyline> out;

    for (double level : levels) {
        if (!(level > 0.0)) throw DomainError("contour levels must be positive");

        auto hedge = [&](std::size_t i, std::size_t j) { return 2LL * static_cast<long long>(j * nx + i); };
        auto vedge = [&](std::size_t i, std::size_t j) { return 2LL * static_cast<long long>(j * nx + i) + 1; };
        auto crossing = [&](long long id) {
            const auto base = static_cast<std::size_t>(id / 2);
            const std::size_t i = base % nx;
            const std::size_t j = base / nx;
            const bool vertical = id % 2 == 1;
            const std::size_t i1 = vertical ? i : i + 1;
            const std::size_t j1 = vertical ? j + 1 : j;
            const double v0 = grid.at(i, j);
            const double v1 = grid.at(i1, j1);
            const double t = v1 == v0 ? 0.5 : std::clamp((level - v0) / (v1 - v0), 0.0, 1.0);
            return g.point(i, j) + t * (g.point(i1, j1) - g.point(i, j));
        };

        std::vector<Segment> segs;
        for (std::size_t j = 0; j + 1 < ny; ++j) {
            for (std::size_t i = 0; i + 1 < nx; ++i) {
                const double v00 = grid.at(i, j), v10 = grid.at(i + 1, j);
                const double v11 = grid.at(i + 1, j + 1), v01 = grid.at(i, j + 1);
                if (std::isnan(v00) || std::isnan(v10) || std::isnan(v11) || std::isnan(v01)) continue;
                const int c = (v00 < level ? 1 : 0) | (v10 < level ? 2 : 0) | (v11 < level ? 4 : 0) |
                              (v01 < level ? 8 : 0);
                const long long bottom = hedge(i, j), right = vedge(i + 1, j);
                const long long top = hedge(i, j + 1), left = vedge(i, j);
                const bool center_in = (v00 + v10 + v11 + v01) / 4.0 < level;
                switch (c) {
                    case 0:
                    case 15: break;
                    case 1:
                    case 14: segs.push_back({left, bottom}); break;
                    case 2:
                    case 13: segs.push_back({bottom, right}); break;
                    case 3:
                    case 12: segs.push_back({left, right}); break;
                    case 4:
                    case 11: segs.push_back({right, top}); break;
                    case 6:
                    case 9: segs.push_back({bottom, top}); break;
                    case 7:
                    case 8: segs.push_back({left, top}); break;
                    case 5: // v00 and v11 inside
                        if (center_in) {
                            segs.push_back({left, top});
                            segs.push_back({bottom, right});
                        } else {
                            segs.push_back({left, bottom});
                            segs.push_back({right, top});
                        }
                        break;
                    case 10: // v10 and v01 inside
                        if (center_in) {
                            segs.push_back({left, bottom});
                            segs.push_back({right, top});
                        } else {
                            segs.push_back({left, top});
                            segs.push_back({bottom, right});
                        }
                        break;
                    default: break;
                }
            }
        }

        std::map<long long, std::vector<std::size_t>> at_edge;
        for (std::size_t s = 0; s < segs.size(); ++s) {
            at_edge[segs[s].e0].push_back(s);
            at_edge[segs[s].e1].push_back(s);
        }
        std::vector<bool> used(segs.size(), false);

        auto walk = [&](std::size_t first, long long start_edge) {
            Polyline pl;
            pl.level = level;
            pl.points.push_back(crossing(start_edge));
            long long edge = start_edge;
            std::size_t seg = first;
            while (true) {
                used[seg] = true;
                const long long next = segs[seg].e0 == edge ? segs[seg].e1 : segs[seg].e0;
                pl.points.push_back(crossing(next));
                edge = next;
                std::size_t follow = segs.size();
                for (std::size_t cand : at_edge.at(edge))
                    if (!used[cand]) follow = cand;
                if (follow == segs.size()) break;
                seg = follow;
            }
            pl.closed = edge == start_edge && pl.points.size() > 2;
            if (pl.closed) pl.points.pop_back();
            return pl;
        };

        // open chains start at edges shared by a single segment (grid border)
        for (const auto& [edge, list] : at_edge) {
            if (list.size() == 1 && !used[list[0]]) out.push_back(walk(list[0], edge));
        }
        for (std::size_t s = 0; s < segs.size(); ++s) {
            if (!used[s]) out.push_back(walk(s, segs[s].e0));
        }
    }
    return out;
}

std::vector<int> label_sublevel_set(const PseudospectrumGrid& grid, double epsilon, int& n_labels) {
    const std::size_t nx = grid.region.nx;
    const std::size_t ny = grid.region.ny;
    std::vector<int> label(nx * ny, -1);
    n_labels = 0;
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < nx * ny; ++start) {
        if (label[start] != -1 || !(grid.smin[start] < epsilon)) continue;
        label[start] = n_labels;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            const std::size_t i = c % nx, j = c / nx;
            auto visit = [&](std::size_t q) {
                if (label[q] == -1 && grid.smin[q] < epsilon) {
                    label[q] = n_labels;
                    stack.push_back(q);
                }
            };
            if (i > 0) visit(c - 1);
            if (i + 1 < nx) visit(c + 1);
            if (j > 0) visit(c - nx);
            if (j + 1 < ny) visit(c + nx);
        }
        ++n_labels;
    }
    return label;
}

ComponentReport components(const ComplexMatrix& a, const PseudospectrumGrid& grid, double epsilon) {
    if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
    const Region& g = grid.region;
    const std::size_t nx = g.nx, ny = g.ny;

    ComponentReport rep;
    rep.epsilon = epsilon;
    const std::vector<int> label = label_sublevel_set(grid, epsilon, rep.n_components);
    rep.eigenvalues_per_component.assign(static_cast<std::size_t>(rep.n_components), {});
    rep.holes_per_component.assign(static_cast<std::size_t>(rep.n_components), 0);

    for (const Complex& lam : spectrum(a).eigenvalues) {
        const double fi = (lam.real() - g.re_min) / g.dx();
        const double fj = (lam.imag() - g.im_min) / g.dy();
        if (fi < -0.5 || fj < -0.5 || fi > static_cast<double>(nx) - 0.5 || fj > static_cast<double>(ny) - 0.5) {
            rep.outside_region.push_back(lam);
            continue;
        }
        const auto i = static_cast<std::size_t>(std::lround(std::clamp(fi, 0.0, static_cast<double>(nx - 1))));
        const auto j = static_cast<std::size_t>(std::lround(std::clamp(fj, 0.0, static_cast<double>(ny - 1))));
        const int l = label[j * nx + i];
        if (l >= 0) rep.eigenvalues_per_component[static_cast<std::size_t>(l)].push_back(lam);
    }

    // complement, 8-connected
    std::vector<char> seen(nx * ny, 0);
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < nx * ny; ++start) {
        if (label[start] != -1 || seen[start]) continue;
        bool touches_border = false;
        int owner = -1;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            const long long i = static_cast<long long>(c % nx), j = static_cast<long long>(c / nx);
            if (i == 0 || j == 0 || i + 1 == static_cast<long long>(nx) || j + 1 == static_cast<long long>(ny))
                touches_border = true;
            for (long long dj = -1; dj <= 1; ++dj) {
                for (long long di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) continue;
                    const long long qi = i + di, qj = j + dj;
                    if (qi < 0 || qj < 0 || qi >= static_cast<long long>(nx) || qj >= static_cast<long long>(ny))
                        continue;
                    const auto q = static_cast<std::size_t>(qj) * nx + static_cast<std::size_t>(qi);
                    if (label[q] == -1) {
                        if (!seen[q]) {
                            seen[q] = 1;
                            stack.push_back(q);
                        }
                    } else if (owner == -1 && (di == 0 || dj == 0)) {
                        owner = label[q];
                    }
                }
            }
        }
        if (!touches_border && owner >= 0) ++rep.holes_per_component[static_cast<std::size_t>(owner)];
    }
    return rep;
}

} // namespace resland
