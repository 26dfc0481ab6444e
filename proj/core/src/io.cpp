#include "resland/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resland/errors.hpp"

namespace resland {

namespace {

using nlohmann::json;

double parse_double(std::string_view text, std::string_view context) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (!text.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw ParseError("invalid number '" + std::string(text) + "' in " + std::string(context));
    }
    return value;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(',', start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

ComplexMatrix parse_matrix_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("entries")) {
        throw ParseError("matrix JSON must be an object with keys \"n\" and \"entries\"");
    }
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1) {
        throw ParseError("\"n\" must be a positive integer");
    }
    const auto n = doc["n"].get<std::size_t>();
    const json& entries = doc["entries"];
    if (!entries.is_array() || entries.size() != n * n) {
        throw ParseError("\"entries\" must be an array of n*n = " + std::to_string(n * n) + " pairs");
    }
    std::vector<Complex> values;
    values.reserve(n * n);
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
            throw ParseError("each entry must be a [re, im] pair of numbers");
        }
        values.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    try {
        return ComplexMatrix::from_row_major(n, values);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid matrix: ") + e.what());
    }
}

std::string matrix_to_json(const ComplexMatrix& a) {
    json doc;
    doc["n"] = a.n();
    json entries = json::array();
    for (const Complex& c : a.row_major()) entries.push_back(json::array({c.real(), c.imag()}));
    doc["entries"] = std::move(entries);
    return doc.dump();
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open matrix file " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

void write_matrix_file(const std::filesystem::path& path, const ComplexMatrix& a) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << matrix_to_json(a) << '\n';
    if (!out) throw IoError("write failed for " + path.string());
}

Complex parse_complex(std::string_view text) {
    if (text.empty()) throw ParseError("empty complex literal");
    if (text.back() != 'i') return {parse_double(text, "complex literal"), 0.0};

    const std::string_view body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_part = [&](std::string_view s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        return parse_double(s, "complex literal");
    };
    if (split == std::string_view::npos) return {0.0, imag_part(body)};
    return {parse_double(body.substr(0, split), "complex literal"), imag_part(body.substr(split))};
}

std::string format_complex(Complex z) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, z.real());
    std::string out(buf, res.ptr);
    if (!std::signbit(z.imag())) out += '+';
    res = std::to_chars(buf, buf + sizeof buf, z.imag());
    out.append(buf, res.ptr);
    out += 'i';
    return out;
}

std::vector<double> parse_real_list(std::string_view text) {
    std::vector<double> out;
    for (std::string_view part : split_commas(text)) out.push_back(parse_double(part, "number list"));
    return out;
}

std::vector<Complex> parse_complex_list(std::string_view text) {
    std::vector<Complex> out;
    for (std::string_view part : split_commas(text)) out.push_back(parse_complex(part));
    return out;
}

} // namespace resland
