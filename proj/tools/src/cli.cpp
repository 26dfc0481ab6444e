#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "resland/builders.hpp"
#include "resland/errors.hpp"
#include "resland/gap.hpp"
#include "resland/growth.hpp"
#include "resland/io.hpp"
#include "resland/path.hpp"
#include "resland/perturb.hpp"
#include "resland/pspec.hpp"
#include "resland/svg.hpp"
#include "resland/twobytwo.hpp"

namespace resland::cli {

namespace {

using nlohmann::json;

json cjson(Complex z) { return json::array({z.real(), z.imag()}); }

json cjson(const std::vector<Complex>& zs) {
    json out = json::array();
    for (const auto& z : zs) out.push_back(cjson(z));
    return out;
}

// JSON has no infinity; infinite values are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <class T>
json optional_json(const std::optional<T>& v) {
    if (!v) return nullptr;
    if constexpr (std::is_same_v<T, Complex>) {
        return cjson(*v);
    } else {
        return number(*v);
    }
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    f << text;
    if (!f) throw IoError("write failed for " + path);
}

void emit(const json& doc, const std::string& path, std::ostream& out) {
    const std::string text = doc.dump(2) + "\n";
    if (path.empty()) {
        out << text;
    } else {
        write_text(path, text);
    }
}

Region parse_region(const std::string& text, std::size_t nx, std::size_t ny) {
    const auto v = parse_real_list(text);
    if (v.size() != 4) throw ParseError("--region expects re_min,re_max,im_min,im_max");
    Region r{v[0], v[1], v[2], v[3], nx, ny};
    r.validate();
    return r;
}

json report_json(const SpectralGapReport& rep) {
    return {
        {"z", cjson(rep.z)},
        {"lambda_max", rep.lambda_max},
        {"resolvent_norm", std::sqrt(rep.lambda_max)},
        {"a_z", rep.a_z},
        {"multiplicity", rep.multiplicity},
        {"gap_ratio", number(rep.gap_ratio)},
        {"disk", {{"center", rep.disk().center}, {"radius", rep.disk().radius}}},
    };
}

json fit_json(const OrderFit& f) {
    return {{"slope", number(f.slope)}, {"fitted_points", f.fitted_points}, {"exact", f.exact}};
}

// Options shared by the subcommands; each subcommand registers the ones it uses.
struct Options {
    std::string matrix;
    std::string z = "0";
    std::string out;
    double gap_tol = kDefaultGapTol;

    // scan
    std::string region;
    std::size_t nx = 256;
    std::size_t ny = 256;
    std::string eps_list;
    std::string svg;
    std::string contours_path;
    int svg_width = 600;

    // certify-min, growth
    double radius = 0.05;
    int angles = 720;
    double rmax = 0.0;
    int samples = 32;

    // perturb-order
    double angle = 0.0;
    std::string radii;
    std::string csv;

    // path
    double eps = 0.0;

    // examples build
    std::string name;
    std::string variant;
    std::string a = "1";
    std::string b = "2";
    std::string c = "1";
    int sign = 1;
    std::string weights;
    std::size_t n_grid = 64;
    std::size_t n_block = 8;
    std::size_t n = 3;
};

void cmd_scan(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Region region = parse_region(o.region, o.nx, o.ny);
    const std::vector<double> levels = o.eps_list.empty() ? std::vector<double>{} : parse_real_list(o.eps_list);
    for (double e : levels)
        if (!(e > 0.0)) throw DomainError("--eps levels must be positive");
    const PseudospectrumGrid grid = scan(a, region);

    if (!o.out.empty()) {
        std::string csv = "re,im,smin\n";
        for (std::size_t j = 0; j < region.ny; ++j) {
            for (std::size_t i = 0; i < region.nx; ++i) {
                const Complex z = region.point(i, j);
                csv += fmt17(z.real()) + ',' + fmt17(z.imag()) + ',' + fmt17(grid.at(i, j)) + '\n';
            }
        }
        write_text(o.out, csv);
    }
    if (!o.svg.empty()) write_text(o.svg, render_svg(a, grid, levels, o.svg_width));
    if (!o.contours_path.empty()) {
        json lines = json::array();
        for (const Polyline& pl : contours(grid, levels)) {
            json pts = cjson(pl.points);
            if (pl.closed && !pl.points.empty()) pts.push_back(cjson(pl.points.front()));
            lines.push_back(std::move(pts));
        }
        write_text(o.contours_path, lines.dump() + "\n");
    }

    double lo = kInf;
    for (double v : grid.smin)
        if (!std::isnan(v)) lo = std::min(lo, v);
    json doc = {
        {"region", {{"re_min", region.re_min}, {"re_max", region.re_max}, {"im_min", region.im_min},
                    {"im_max", region.im_max}, {"nx", region.nx}, {"ny", region.ny}}},
        {"failures", grid.failures},
        {"smin_min", number(lo)},
    };
    json lv = json::array();
    for (double e : levels) {
        const ComponentReport rep = components(a, grid, e);
        json per = json::array();
        for (std::size_t k = 0; k < rep.eigenvalues_per_component.size(); ++k)
            per.push_back({{"eigenvalues", cjson(rep.eigenvalues_per_component[k])}, {"holes", rep.holes_per_component[k]}});
        lv.push_back({{"eps", e},
                      {"components", rep.n_components},
                      {"holes", rep.total_holes()},
                      {"per_component", per},
                      {"eigenvalues_outside_region", cjson(rep.outside_region)}});
    }
    doc["levels"] = lv;
    emit(doc, "", out);
}

void cmd_classify2(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const TwoByTwoClassification c = classify(a);
    emit({{"center", cjson(c.center)},
          {"lambda", cjson(c.lambda)},
          {"kind", std::string(to_string(c.kind))},
          {"k", optional_json(c.k)},
          {"gamma", optional_json(c.gamma)},
          {"phi", c.phi},
          {"critical_line_angle", optional_json(c.critical_line_angle)},
          {"critical_point", optional_json(c.critical_point)}},
         o.out, out);
}

void cmd_certify_min(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Complex z = parse_complex(o.z);
    const LocalMinCertificate c = certify_local_min(a, z, o.radius, o.angles);
    emit({{"z", cjson(z)},
          {"radius", o.radius},
          {"angles", o.angles},
          {"is_min", c.is_min},
          {"margin", c.margin},
          {"norm", number(c.center_norm)}},
         o.out, out);
}

void cmd_growth(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Complex z = parse_complex(o.z);
    const SpectralGapReport rep = require_spectral_gap(a, z, o.gap_tol);
    const GrowthCertificate cert = growth_direction(a, z, rep);
    const MinCandidateCheck mc = min_candidate_check(a, z, rep);
    const double rmax = o.rmax > 0.0 ? o.rmax : default_growth_radius(a, z);
    const GrowthVerification v = verify_growth(a, z, cert, rmax, o.samples);
    emit({{"z", cjson(z)},
          {"order", std::string(to_string(cert.order))},
          {"phi", optional_json(cert.phi)},
          {"eta1", cert.eta1},
          {"eta2", cert.eta2},
          {"c2", cert.c2},
          {"lambda_max", rep.lambda_max},
          {"multiplicity", rep.multiplicity},
          {"min_candidate",
           {{"holds", mc.holds},
            {"prp_norm", mc.prp_norm},
            {"zero_in_range", mc.zero_in_range},
            {"range_support", mc.range_support}}},
          {"verification",
           {{"power", v.power}, {"fitted_c", v.fitted_c}, {"order_ok", v.order_ok}, {"r_max", rmax}, {"samples", o.samples}}}},
         o.out, out);
}

void cmd_gap(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Complex z = parse_complex(o.z);
    emit(report_json(require_spectral_gap(a, z, o.gap_tol)), o.out, out);
}

void cmd_perturb_order(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Complex z = parse_complex(o.z);
    const std::vector<double> radii = parse_real_list(o.radii);
    const CubicOrderSweep sweep = cubic_order_sweep(a, z, o.angle, radii, o.gap_tol);

    json rows = json::array();
    std::string csv = "radius,gap_value,hausdorff_value\n";
    for (std::size_t k = 0; k < radii.size(); ++k) {
        rows.push_back({radii[k], sweep.gap.values[k], sweep.hausdorff.values[k]});
        csv += fmt17(radii[k]) + ',' + fmt17(sweep.gap.values[k]) + ',' + fmt17(sweep.hausdorff.values[k]) + '\n';
    }
    if (!o.csv.empty()) write_text(o.csv, csv);
    emit({{"z", cjson(z)},
          {"angle", o.angle},
          {"gap", fit_json(sweep.gap)},
          {"hausdorff", fit_json(sweep.hausdorff)},
          {"rows", rows}},
         o.out, out);
}

void cmd_path(const Options& o, std::ostream& out) {
    const ComplexMatrix a = read_matrix_file(o.matrix);
    const Complex z = parse_complex(o.z);
    PathOptions opts;
    opts.gap_tol = o.gap_tol;
    const PolygonalPath p = build_path(a, z, o.eps, opts);
    emit({{"epsilon", p.epsilon},
          {"floor", number(p.floor)},
          {"terminal_eigenvalue", cjson(p.terminal_eigenvalue)},
          {"vertices", cjson(p.vertices)},
          {"vertex_norms", p.vertex_norms},
          {"fallback_steps", p.fallback_steps},
          {"valid", validate_path(a, p, o.eps)}},
         o.out, out);
}

void cmd_examples_build(const Options& o, std::ostream& out) {
    auto weights_or = [&](const char* fallback) { return parse_complex_list(o.weights.empty() ? fallback : o.weights); };
    ComplexMatrix m(CMatrix::Zero(1, 1));
    if (o.name == "type1") {
        const std::string v = o.variant.empty() ? "lower" : o.variant;
        if (v != "lower" && v != "general") throw DomainError("type1 --variant is lower or general");
        m = type1_matrix(v == "lower" ? Type1Variant::LowerTriangular : Type1Variant::General, parse_complex(o.a),
                         parse_complex(o.b), parse_complex(o.c));
    } else if (o.name == "type2") {
        const std::string v = o.variant.empty() ? "general" : o.variant;
        if (v != "triangular" && v != "general") throw DomainError("type2 --variant is triangular or general");
        m = type2_matrix(v == "triangular" ? Type2Variant::Triangular : Type2Variant::General, parse_complex(o.a),
                         parse_complex(o.b), parse_complex(o.c), o.sign);
    } else if (o.name == "example-last") {
        m = example_last();
    } else if (o.name == "cyclic") {
        m = cyclic_matrix(weights_or("1e6,1,1,1,1,1"));
    } else if (o.name == "shift") {
        m = truncated_shift(weights_or("1,1,2,1,1"));
    } else if (o.name == "multiplication") {
        m = multiplication_example(o.n_grid, o.n_block);
    } else if (o.name == "connectivity") {
        m = connectivity_example(o.n);
    }
    if (o.out.empty()) {
        out << matrix_to_json(m) << "\n";
    } else {
        write_matrix_file(o.out, m);
    }
}

void add_matrix(CLI::App* sub, Options& o) {
    sub->add_option("--matrix", o.matrix, "Matrix JSON file {\"n\": N, \"entries\": [[re, im], ...]}")->required();
}

void add_z(CLI::App* sub, Options& o, bool required) {
    auto* opt = sub->add_option("--z", o.z, "Complex point, e.g. 0.5-2i (use --z=-1+2i for a leading minus)");
    if (required) opt->required();
}

void add_gap_tol(CLI::App* sub, Options& o) {
    sub->add_option("--gap-tol", o.gap_tol, "Relative spectral gap tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resolvent norm landscapes of dense complex matrices", "pspec"};
    app.require_subcommand(1);
    Options o;
    std::function<void(std::ostream&)> action;

    auto* scan_cmd = app.add_subcommand("scan", "Smallest singular values on a grid, components and SVG");
    add_matrix(scan_cmd, o);
    scan_cmd->add_option("--region", o.region, "re_min,re_max,im_min,im_max")->required();
    scan_cmd->add_option("--nx", o.nx, "Grid points along the real axis")->check(CLI::Range(2, 1 << 16))->capture_default_str();
    scan_cmd->add_option("--ny", o.ny, "Grid points along the imaginary axis")->check(CLI::Range(2, 1 << 16))->capture_default_str();
    scan_cmd->add_option("--eps", o.eps_list, "Comma separated eps levels for components, contours and SVG bands");
    scan_cmd->add_option("--out", o.out, "Grid CSV file (header re,im,smin)");
    scan_cmd->add_option("--svg", o.svg, "SVG figure file");
    scan_cmd->add_option("--contours", o.contours_path, "Contour polylines JSON file");
    scan_cmd->add_option("--width", o.svg_width, "SVG width in pixels")->check(CLI::Range(16, 10000))->capture_default_str();
    scan_cmd->callback([&] { action = [&](std::ostream& os) { cmd_scan(o, os); }; });

    auto* classify_cmd = app.add_subcommand("classify2", "Closed-form classification of a 2x2 matrix");
    add_matrix(classify_cmd, o);
    classify_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    classify_cmd->callback([&] { action = [&](std::ostream& os) { cmd_classify2(o, os); }; });

    auto* certify_cmd = app.add_subcommand("certify-min", "Sample the resolvent norm on circles around z");
    add_matrix(certify_cmd, o);
    add_z(certify_cmd, o, true);
    certify_cmd->add_option("--radius", o.radius, "Circle radius")->check(CLI::PositiveNumber)->capture_default_str();
    certify_cmd->add_option("--angles", o.angles, "Samples per circle")->check(CLI::PositiveNumber)->capture_default_str();
    certify_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    certify_cmd->callback([&] { action = [&](std::ostream& os) { cmd_certify_min(o, os); }; });

    auto* growth_cmd = app.add_subcommand("growth", "Growth direction certificate and its sampled verification");
    add_matrix(growth_cmd, o);
    add_z(growth_cmd, o, true);
    growth_cmd->add_option("--rmax", o.rmax, "Segment length (default 1e-3 * distance to the spectrum)")
        ->check(CLI::PositiveNumber);
    growth_cmd->add_option("--samples", o.samples, "Samples per segment")->check(CLI::PositiveNumber)->capture_default_str();
    add_gap_tol(growth_cmd, o);
    growth_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    growth_cmd->callback([&] { action = [&](std::ostream& os) { cmd_growth(o, os); }; });

    auto* gap_cmd = app.add_subcommand("gap", "Spectral gap report of S(z) = R(z)^* R(z)");
    add_matrix(gap_cmd, o);
    add_z(gap_cmd, o, true);
    add_gap_tol(gap_cmd, o);
    gap_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    gap_cmd->callback([&] { action = [&](std::ostream& os) { cmd_gap(o, os); }; });

    auto* perturb_cmd = app.add_subcommand("perturb-order", "Third-order perturbation sweep with log-log slopes");
    add_matrix(perturb_cmd, o);
    add_z(perturb_cmd, o, true);
    perturb_cmd->add_option("--angle", o.angle, "Direction of the sweep")->capture_default_str();
    perturb_cmd->add_option("--radii", o.radii, "Strictly decreasing radii, e.g. 1e-2,1e-3,1e-4")->required();
    add_gap_tol(perturb_cmd, o);
    perturb_cmd->add_option("--csv", o.csv, "CSV file with radius,gap_value,hausdorff_value");
    perturb_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    perturb_cmd->callback([&] { action = [&](std::ostream& os) { cmd_perturb_order(o, os); }; });

    auto* path_cmd = app.add_subcommand("path", "Polygonal path from z to an eigenvalue inside the eps-pseudospectrum");
    add_matrix(path_cmd, o);
    add_z(path_cmd, o, true);
    path_cmd->add_option("--eps", o.eps, "Pseudospectrum level")->required()->check(CLI::PositiveNumber);
    add_gap_tol(path_cmd, o);
    path_cmd->add_option("--out", o.out, "Write JSON here instead of stdout");
    path_cmd->callback([&] { action = [&](std::ostream& os) { cmd_path(o, os); }; });

    auto* examples_cmd = app.add_subcommand("examples", "Example matrices");
    examples_cmd->require_subcommand(1);
    auto* build_cmd = examples_cmd->add_subcommand("build", "Write an example matrix as JSON");
    build_cmd->add_option("name", o.name, "type1, type2, example-last, cyclic, shift, multiplication, connectivity")
        ->required()
        ->check(CLI::IsMember({"type1", "type2", "example-last", "cyclic", "shift", "multiplication", "connectivity"}));
    build_cmd->add_option("--variant", o.variant, "type1: lower|general (default lower); type2: triangular|general (default general)");
    build_cmd->add_option("--a", o.a, "Parameter a")->capture_default_str();
    build_cmd->add_option("--b", o.b, "Parameter b")->capture_default_str();
    build_cmd->add_option("--c", o.c, "Parameter c")->capture_default_str();
    build_cmd->add_option("--sign", o.sign, "type2 triangular sign")->check(CLI::IsMember({-1, 1}))->capture_default_str();
    build_cmd->add_option("--weights", o.weights, "cyclic (default 1e6,1,1,1,1,1) or shift (default 1,1,2,1,1) weights");
    build_cmd->add_option("--n-grid", o.n_grid, "multiplication: grid points")->check(CLI::PositiveNumber)->capture_default_str();
    build_cmd->add_option("--n-block", o.n_block, "multiplication: size of the 2I block")->check(CLI::PositiveNumber)->capture_default_str();
    build_cmd->add_option("--n", o.n, "connectivity: dimension")->capture_default_str();
    build_cmd->add_option("--out", o.out, "Write the matrix here instead of stdout");
    build_cmd->callback([&] { action = [&](std::ostream& os) { cmd_examples_build(o, os); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        std::ostringstream buffer;
        action(buffer);
        out << buffer.str();
        return kOk;
    } catch (const DomainError& e) {
        err << "pspec: " << e.what() << "\n";
        return kDomainError;
    } catch (const SolverFailure& e) {
        err << "pspec: " << e.what() << "\n";
        return kDomainError;
    } catch (const ParseError& e) {
        err << "pspec: " << e.what() << "\n";
        return kInputError;
    } catch (const IoError& e) {
        err << "pspec: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "pspec: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace resland::cli
