#ifndef FLORA_IO_HPP
#define FLORA_IO_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <flora/benchmarks.hpp>
#include <flora/mofpa.hpp>

namespace flora
{

/// Malformed CSV input; `line()` is 1-based.
class csv_error : public std::runtime_error
{
public:
    csv_error(std::size_t line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), m_line(line)
    {
    }
    [[nodiscard]] std::size_t line() const noexcept { return m_line; }

private:
    std::size_t m_line;
};

/// 17 significant digits, enough to round-trip any double.
inline std::string format_number(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_front_csv(std::ostream &os, const front_sample &front)
{
    os << "f1,f2\n";
    for (const auto &p : front.points) {
        os << format_number(p[0]) << ',' << format_number(p[1]) << '\n';
    }
}

/// Columns r,R,F,s,f1,f2 sorted by f1.
inline void write_disc_brake_csv(std::ostream &os, const pareto_archive &archive)
{
    os << "r,R,F,s,f1,f2\n";
    for (const auto &e : archive.sorted()) {
        for (std::size_t i = 0; i < 4; ++i) {
            os << format_number(e.decision[i]) << ',';
        }
        os << format_number(e.objectives[0]) << ',' << format_number(e.objectives[1]) << '\n';
    }
}

namespace detail
{
inline std::vector<std::string> split_csv_line(const std::string &line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        const auto b = cell.find_first_not_of(" \t\r");
        const auto e = cell.find_last_not_of(" \t\r");
        out.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

inline double parse_cell(const std::string &cell, std::size_t line)
{
    if (cell.empty()) {
        throw csv_error(line, "empty value");
    }
    double v = 0.0;
    const auto *end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (ec == std::errc::result_out_of_range) {
        throw csv_error(line, "value out of range: '" + cell + "'");
    }
    if (ec != std::errc{} || ptr != end) {
        throw csv_error(line, "not a number: '" + cell + "'");
    }
    if (!std::isfinite(v)) {
        throw csv_error(line, "non-finite value");
    }
    return v;
}
} // namespace detail

/// Reads the f1,f2 columns of a front CSV (any column order, extra columns ignored).
/// Blank lines are skipped. Points are returned in file order.
inline front_sample read_front_csv(std::istream &is)
{
    std::string line;
    std::size_t lineno = 0;
    std::size_t c1 = 0;
    std::size_t c2 = 0;
    std::size_t ncols = 0;
    bool header = false;
    front_sample out{{}, front_source::sampled_and_filtered};
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        const auto cells = detail::split_csv_line(line);
        if (!header) {
            const auto f1 = std::find(cells.begin(), cells.end(), "f1");
            const auto f2 = std::find(cells.begin(), cells.end(), "f2");
            if (f1 == cells.end() || f2 == cells.end()) {
                throw csv_error(lineno, "header must name columns f1 and f2");
            }
            c1 = static_cast<std::size_t>(f1 - cells.begin());
            c2 = static_cast<std::size_t>(f2 - cells.begin());
            ncols = cells.size();
            header = true;
            continue;
        }
        if (cells.size() != ncols) {
            throw csv_error(lineno, "expected " + std::to_string(ncols) + " columns, got " + std::to_string(cells.size()));
        }
        out.points.push_back({detail::parse_cell(cells[c1], lineno), detail::parse_cell(cells[c2], lineno)});
    }
    if (!header) {
        throw csv_error(lineno == 0 ? 1 : lineno, "missing header");
    }
    return out;
}

struct svg_options {
    std::string title;
    double width = 640.0;
    double height = 480.0;
};

namespace detail
{
inline std::string xml_escape(const std::string &s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

inline std::string fmt_coord(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}
} // namespace detail

/// Scatter of `estimated` (one circle per point) over `reference` drawn as polylines.
/// The reference is split wherever consecutive points jump by more than 5% of the f1
/// range, so disconnected fronts are not bridged.
inline void write_front_svg(std::ostream &os, const front_sample &estimated, const front_sample *reference,
                            const svg_options &opt = {})
{
    double x0 = std::numeric_limits<double>::infinity();
    double x1 = -x0;
    double y0 = x0;
    double y1 = -x0;
    auto extend = [&](const front_sample &f) {
        for (const auto &p : f.points) {
            x0 = std::min(x0, p[0]);
            x1 = std::max(x1, p[0]);
            y0 = std::min(y0, p[1]);
            y1 = std::max(y1, p[1]);
        }
    };
    extend(estimated);
    if (reference != nullptr) {
        extend(*reference);
    }
    if (!(x0 <= x1)) {
        x0 = 0.0;
        x1 = 1.0;
        y0 = 0.0;
        y1 = 1.0;
    }
    if (x1 - x0 <= 0.0) {
        x1 = x0 + 1.0;
    }
    if (y1 - y0 <= 0.0) {
        y1 = y0 + 1.0;
    }
    const double margin = 60.0;
    const double pw = opt.width - 2.0 * margin;
    const double ph = opt.height - 2.0 * margin;
    auto sx = [&](double v) { return margin + (v - x0) / (x1 - x0) * pw; };
    auto sy = [&](double v) { return opt.height - margin - (v - y0) / (y1 - y0) * ph; };

    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opt.width << "\" height=\"" << opt.height
       << "\" viewBox=\"0 0 " << opt.width << ' ' << opt.height << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << opt.width << "\" height=\"" << opt.height << "\" fill=\"white\"/>\n";
    if (!opt.title.empty()) {
        os << "<text x=\"" << opt.width / 2 << "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
           << detail::xml_escape(opt.title) << "</text>\n";
    }
    os << "<g id=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << opt.height - margin << "\" x2=\"" << opt.width - margin << "\" y2=\""
       << opt.height - margin << "\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << opt.height - margin
       << "\"/>\n";
    os << "</g>\n";
    os << "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<text x=\"" << opt.width / 2 << "\" y=\"" << opt.height - 20 << "\" text-anchor=\"middle\">f1</text>\n";
    os << "<text x=\"20\" y=\"" << opt.height / 2 << "\" text-anchor=\"middle\">f2</text>\n";
    os << "<text x=\"" << margin << "\" y=\"" << opt.height - margin + 16 << "\" text-anchor=\"middle\">"
       << detail::xml_escape(format_number(x0)) << "</text>\n";
    os << "<text x=\"" << opt.width - margin << "\" y=\"" << opt.height - margin + 16 << "\" text-anchor=\"middle\">"
       << detail::xml_escape(format_number(x1)) << "</text>\n";
    os << "<text x=\"" << margin - 6 << "\" y=\"" << opt.height - margin << "\" text-anchor=\"end\">"
       << detail::xml_escape(format_number(y0)) << "</text>\n";
    os << "<text x=\"" << margin - 6 << "\" y=\"" << margin << "\" text-anchor=\"end\">"
       << detail::xml_escape(format_number(y1)) << "</text>\n";
    os << "</g>\n";

    if (reference != nullptr && !reference->empty()) {
        os << "<g id=\"reference\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\">\n";
        const double gap = 0.05 * (x1 - x0);
        std::string pts;
        auto flush = [&] {
            if (!pts.empty()) {
                os << "<polyline points=\"" << pts << "\"/>\n";
                pts.clear();
            }
        };
        for (std::size_t i = 0; i < reference->size(); ++i) {
            const auto &p = reference->points[i];
            if (i > 0 && p[0] - reference->points[i - 1][0] > gap) {
                flush();
            }
            if (!pts.empty()) {
                pts += ' ';
            }
            pts += detail::fmt_coord(sx(p[0])) + "," + detail::fmt_coord(sy(p[1]));
        }
        flush();
        os << "</g>\n";
    }

    os << "<g id=\"estimated\" fill=\"#d62728\" stroke=\"none\">\n";
    for (const auto &p : estimated.points) {
        os << "<circle cx=\"" << detail::fmt_coord(sx(p[0])) << "\" cy=\"" << detail::fmt_coord(sy(p[1]))
           << "\" r=\"3\"/>\n";
    }
    os << "</g>\n";
    os << "</svg>\n";
}

} // namespace flora

#endif
