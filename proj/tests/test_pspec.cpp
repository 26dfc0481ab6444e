#include <doctest.h>

#include <cmath>

#include "resland/builders.hpp"
#include "resland/errors.hpp"
#include "resland/pspec.hpp"
#include "resland/svg.hpp"
#include "support/oracles.hpp"

using namespace resland;

namespace {

ComplexMatrix zero1() { return ComplexMatrix(CMatrix::Zero(1, 1)); }

Region square(double half, std::size_t n) { return {-half, half, -half, half, n, n}; }

} // namespace

TEST_CASE("region validation") {
    CHECK_THROWS_AS(scan(zero1(), Region{1, 0, -1, 1, 4, 4}), DomainError);
    CHECK_THROWS_AS(scan(zero1(), Region{-1, 1, -1, 1, 1, 4}), DomainError);
    const Region r = square(1, 5);
    CHECK(r.point(0, 0) == Complex(-1, -1));
    CHECK(r.point(4, 4) == Complex(1, 1));
    CHECK(r.point(2, 1) == Complex(0, -0.5));
}

TEST_CASE("scan of the 1x1 zero matrix is |z|") {
    const PseudospectrumGrid g = scan(zero1(), square(1, 41));
    CHECK(g.failures == 0);
    for (std::size_t j = 0; j < 41; ++j)
        for (std::size_t i = 0; i < 41; ++i) CHECK(g.at(i, j) == doctest::Approx(std::abs(g.region.point(i, j))));
}

TEST_CASE("scan of a normal matrix is the distance to the spectrum") {
    const ComplexMatrix a = connectivity_example(3);
    const PseudospectrumGrid g = scan(a, Region{0, 4, -2, 2, 30, 30});
    const auto eig = oracle::eigenvalues(a.data());
    for (std::size_t j = 0; j < 30; ++j)
        for (std::size_t i = 0; i < 30; ++i)
            CHECK(g.at(i, j) == doctest::Approx(oracle::dist(eig, g.region.point(i, j))).epsilon(1e-10));
}

TEST_CASE("scan matches the SVD oracle") {
    oracle::Rng rng(81);
    const ComplexMatrix a(rng.matrix(5));
    const PseudospectrumGrid g = scan(a, square(3, 17));
    for (std::size_t j = 0; j < 17; ++j)
        for (std::size_t i = 0; i < 17; ++i)
            CHECK(g.at(i, j) == doctest::Approx(oracle::smin_svd(a.data(), g.region.point(i, j))).epsilon(1e-9));
}

TEST_CASE("membership") {
    CHECK(membership(zero1(), 0.5, 1.0));
    CHECK_FALSE(membership(zero1(), 1.5, 1.0));
    CHECK_FALSE(membership(example_last(), 0.0, 0.97));
    for (const Complex& lam : spectrum(example_last()).eigenvalues) CHECK(membership(example_last(), lam, 1e-6));
    CHECK_THROWS_AS(membership(zero1(), 0.0, 0.0), DomainError);
}

TEST_CASE("contour of |z| = 0.5") {
    const PseudospectrumGrid g = scan(zero1(), square(1, 81));
    const std::vector<double> level = {0.5};
    const auto lines = contours(g, level);
    REQUIRE(lines.size() == 1);
    CHECK(lines[0].closed);
    const double diag = std::hypot(g.region.dx(), g.region.dy());
    for (const Complex& p : lines[0].points) CHECK(std::abs(std::abs(p) - 0.5) <= diag);

    const std::vector<double> below = {1e-6};
    const PseudospectrumGrid off = scan(zero1(), Region{0.5, 1, 0.5, 1, 10, 10});
    CHECK(contours(off, below).empty());
    const std::vector<double> bad = {-1.0};
    CHECK_THROWS_AS(contours(g, bad), DomainError);
}

TEST_CASE("contours of example last at 0.97 are closed and avoid the origin") {
    // all six eigenvalues have modulus below 6
    const PseudospectrumGrid g = scan(example_last(), square(8, 300));
    const std::vector<double> level = {0.97};
    const auto lines = contours(g, level);
    REQUIRE_FALSE(lines.empty());
    for (const auto& pl : lines) CHECK(pl.closed);
    // the hole boundary encircles the origin: some curve has winding number 1 about 0
    bool encloses = false;
    for (const auto& pl : lines) {
        double wind = 0.0;
        for (std::size_t k = 0; k < pl.points.size(); ++k)
            wind += std::arg(pl.points[(k + 1) % pl.points.size()] / pl.points[k]);
        if (std::abs(std::abs(wind) - 2 * std::numbers::pi) < 1e-6) encloses = true;
    }
    CHECK(encloses);
}

TEST_CASE("components of the connectivity example") {
    const ComplexMatrix a = connectivity_example(3);
    const PseudospectrumGrid g = scan(a, Region{-0.5, 4.5, -2.5, 2.5, 400, 400});
    const ComponentReport one = components(a, g, 1.05);
    CHECK(one.n_components == 1);
    REQUIRE(one.eigenvalues_per_component.size() == 1);
    CHECK(one.eigenvalues_per_component[0].size() == 3);
    CHECK(one.total_holes() >= 1);

    const ComponentReport three = components(a, g, 0.4);
    CHECK(three.n_components == 3);
    for (const auto& e : three.eigenvalues_per_component) CHECK(e.size() == 1);
    CHECK(three.total_holes() == 0);
    CHECK(three.outside_region.empty());
}

TEST_CASE("example last is connected but not simply connected at 0.97") {
    const ComplexMatrix b = example_last();
    const PseudospectrumGrid g = scan(b, square(8, 300));
    const ComponentReport rep = components(b, g, 0.97);
    CHECK(rep.n_components == 1);
    CHECK(rep.total_holes() >= 1);
    CHECK(rep.outside_region.empty());
    REQUIRE(rep.eigenvalues_per_component.size() == 1);
    CHECK(rep.eigenvalues_per_component[0].size() == 6);

    // the cell nearest the origin is outside the set
    int labels = 0;
    const auto lab = label_sublevel_set(g, 0.97, labels);
    CHECK(lab[150 * 300 + 150] == -1);
}

TEST_CASE("sublevel set properties on random matrices") {
    oracle::Rng rng(82);
    for (int t = 0; t < 6; ++t) {
        const int n = rng.integer(2, 6);
        const ComplexMatrix a(rng.matrix(n));
        const double half = 2.0 * a.norm() + 2.0;
        const PseudospectrumGrid g = scan(a, square(half, 120));
        const Spectrum spec = spectrum(a);
        for (double eps : {0.05, 0.2, 0.5}) {
            int labels = 0;
            const auto lab = label_sublevel_set(g, eps, labels);
            const ComponentReport rep = components(a, g, eps);
            CHECK(rep.n_components <= static_cast<int>(spec.distinct()));
            for (const auto& e : rep.eigenvalues_per_component) CHECK_FALSE(e.empty());
            int labels2 = 0;
            const auto lab2 = label_sublevel_set(g, 2 * eps, labels2);
            for (std::size_t c = 0; c < lab.size(); ++c) {
                if (lab[c] >= 0) CHECK(lab2[c] >= 0);
                const Complex z = g.region.point(c % 120, c / 120);
                if (distance_to_spectrum(spec, z) < eps / 2 - std::hypot(g.region.dx(), g.region.dy()))
                    CHECK(lab[c] >= 0);
                const bool border = c % 120 == 0 || c % 120 == 119 || c / 120 == 0 || c / 120 == 119;
                if (border) CHECK(lab[c] == -1);
            }
        }
    }
}

TEST_CASE("svg output") {
    const ComplexMatrix b = example_last();
    const PseudospectrumGrid g = scan(b, square(2, 60));
    const std::vector<double> levels = {0.97, 0.5};
    const std::string svg = render_svg(b, g, levels);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<!-- resland") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t dots = 0;
    for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++dots;
    CHECK(dots == 6);
    CHECK(render_svg(b, g, levels) == svg);
}
