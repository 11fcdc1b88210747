#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hypx/commands.hpp"

namespace hypx {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

double to_number(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::invalid_argument("csv line " + std::to_string(line) + ": not a number: '" + s + "'");
    }
}

struct Canvas {
    std::ostringstream os;
    double w, h, margin = 60;

    explicit Canvas(double width = 640, double height = 480) : w(width), h(height) {}
    std::string finish() const {
        std::ostringstream out;
        out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
            << ' ' << h << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
            << os.str() << "</svg>\n";
        return out.str();
    }
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::runtime_error("cannot write '" + path + "'");
}

std::string loglog(const CsvTable& t) {
    const int cx = t.column("x"), cy = t.column("y"), cp = t.column("predicted");
    if (cx < 0 || cy < 0) throw std::invalid_argument("loglog: csv needs columns x and y");
    std::vector<double> lx, ly;
    std::optional<double> predicted;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const int line = t.line_numbers[i];
        const double x = to_number(t.rows[i][cx], line), y = to_number(t.rows[i][cy], line);
        if (!(x > 0.0 && y > 0.0)) throw std::invalid_argument("csv line " + std::to_string(line) + ": loglog needs positive x and y");
        lx.push_back(std::log(x));
        ly.push_back(std::log(y));
        if (cp >= 0) predicted = to_number(t.rows[i][cp], line);
    }
    if (lx.size() < 2) throw std::invalid_argument("loglog: need at least two rows");
    const double n = lx.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) mx += lx[i] / n, my += ly[i] / n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < lx.size(); ++i) sxy += (lx[i] - mx) * (ly[i] - my), sxx += (lx[i] - mx) * (lx[i] - mx);
    if (sxx == 0.0) throw std::invalid_argument("loglog: x values must not all coincide");
    const double slope = sxy / sxx;

    double x0 = lx[0], x1 = lx[0], y0 = ly[0], y1 = ly[0];
    for (std::size_t i = 0; i < lx.size(); ++i)
        x0 = std::min(x0, lx[i]), x1 = std::max(x1, lx[i]), y0 = std::min(y0, ly[i]), y1 = std::max(y1, ly[i]);
    auto line_y = [&](double s, double x) { return my + s * (x - mx); };
    for (double x : {x0, x1}) {
        y0 = std::min({y0, line_y(slope, x), predicted ? line_y(*predicted, x) : y0});
        y1 = std::max({y1, line_y(slope, x), predicted ? line_y(*predicted, x) : y1});
    }
    if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;

    Canvas c;
    auto X = [&](double v) { return c.margin + (v - x0) / (x1 - x0) * (c.w - 2 * c.margin); };
    auto Y = [&](double v) { return c.h - c.margin - (v - y0) / (y1 - y0) * (c.h - 2 * c.margin); };
    char meta[128];
    std::snprintf(meta, sizeof meta, "fitted_slope=%.17e", slope);
    c.os << "<metadata>" << meta;
    if (predicted) {
        std::snprintf(meta, sizeof meta, " predicted_slope=%.17e", *predicted);
        c.os << meta;
    }
    c.os << "</metadata>\n";
    c.os << "<rect x=\"" << c.margin << "\" y=\"" << c.margin << "\" width=\"" << c.w - 2 * c.margin << "\" height=\""
         << c.h - 2 * c.margin << "\" fill=\"none\" stroke=\"black\"/>\n";
    c.os << "<text x=\"" << c.w / 2 << "\" y=\"" << c.h - 15 << "\" text-anchor=\"middle\">log x</text>\n";
    c.os << "<text x=\"15\" y=\"" << c.h / 2 << "\" transform=\"rotate(-90 15 " << c.h / 2 << ")\" text-anchor=\"middle\">log y</text>\n";
    auto segment = [&](double s, const char* cls, const char* color, const char* dash) {
        c.os << "<line class=\"" << cls << "\" x1=\"" << fmt(X(x0)) << "\" y1=\"" << fmt(Y(line_y(s, x0))) << "\" x2=\""
             << fmt(X(x1)) << "\" y2=\"" << fmt(Y(line_y(s, x1))) << "\" stroke=\"" << color << "\"" << dash << "/>\n";
    };
    segment(slope, "fit", "steelblue", "");
    if (predicted) segment(*predicted, "reference", "darkred", " stroke-dasharray=\"6 4\"");
    for (std::size_t i = 0; i < lx.size(); ++i)
        c.os << "<circle cx=\"" << fmt(X(lx[i])) << "\" cy=\"" << fmt(Y(ly[i])) << "\" r=\"4\" fill=\"black\"/>\n";
    c.os << "<text x=\"" << c.margin + 8 << "\" y=\"" << c.margin + 18 << "\">slope " << fmt(slope);
    if (predicted) c.os << " (predicted " << fmt(*predicted) << ")";
    c.os << "</text>\n";
    return c.finish();
}

struct Seg {
    double x1, y1, x2, y2;
};

// a·x + b·y = r clipped to the unit square.
std::optional<Seg> clip(double a, double b, double r) {
    std::vector<std::pair<double, double>> pts;
    auto add = [&](double x, double y) {
        if (x < -1e-12 || x > 1 + 1e-12 || y < -1e-12 || y > 1 + 1e-12) return;
        for (const auto& p : pts)
            if (std::abs(p.first - x) < 1e-12 && std::abs(p.second - y) < 1e-12) return;
        pts.emplace_back(x, y);
    };
    if (b != 0.0) add(0.0, r / b), add(1.0, (r - a) / b);
    if (a != 0.0) add(r / a, 0.0), add((r - b) / a, 1.0);
    if (pts.size() < 2) return std::nullopt;
    return Seg{pts[0].first, pts[0].second, pts[1].first, pts[1].second};
}

std::string region_diagram(const CsvTable& t) {
    const int cd = t.column("d"), cg = t.column("diagram");
    if (cd < 0 || cg < 0 || t.rows.empty()) throw std::invalid_argument("region-diagram: csv needs columns d and diagram");
    const int d = static_cast<int>(to_number(t.rows[0][cd], t.line_numbers[0]));
    if (d < 2) throw std::invalid_argument("csv line " + std::to_string(t.line_numbers[0]) + ": d must be at least 2");
    const std::string diagram = t.rows[0][cg];
    double green;
    if (diagram == "resolvent") green = 2.0 / d;
    else if (diagram == "dresolvent") green = 1.0 / d;
    else throw std::invalid_argument("csv line " + std::to_string(t.line_numbers[0]) + ": diagram must be resolvent or dresolvent");

    Canvas c(560, 560);
    const double side = c.w - 2 * c.margin;
    auto X = [&](double v) { return c.margin + v * side; };
    auto Y = [&](double v) { return c.h - c.margin - v * side; };
    c.os << "<metadata>d=" << d << " diagram=" << diagram << "</metadata>\n";
    c.os << "<rect x=\"" << c.margin << "\" y=\"" << c.margin << "\" width=\"" << side << "\" height=\"" << side
         << "\" fill=\"none\" stroke=\"black\"/>\n";
    c.os << "<text x=\"" << c.w / 2 << "\" y=\"" << c.h - 20 << "\" text-anchor=\"middle\">1/s</text>\n";
    c.os << "<text x=\"20\" y=\"" << c.h / 2 << "\" text-anchor=\"middle\">1/q</text>\n";

    const double yl = (d - 1.0) / (2.0 * d), k = (d - 1.0) / (d + 1.0);
    struct Line {
        const char* color;
        const char* eq;
        double a, b, r;
    };
    char green_eq[48];
    std::snprintf(green_eq, sizeof green_eq, "1/s-1/q=%s", diagram == "resolvent" ? "2/d" : "1/d");
    const Line lines[] = {
        {"yellow", "1/q=(d-1)/(2d)", 0.0, 1.0, yl},
        {"yellow", "1/s=(d+1)/(2d)", 1.0, 0.0, 1.0 - yl},
        {"green", green_eq, 1.0, -1.0, green},
        {"purple", "(d-1)/(d+1)/q+1/s=1", 1.0, k, 1.0},
        {"purple", "(d-1)/(d+1)/s+1/q=(d-1)/(d+1)", k, 1.0, k},
        {"red", "1/s+1/q=1", 1.0, 1.0, 1.0},
        {"blue", "1/q=1/2", 0.0, 1.0, 0.5},
        {"blue", "1/s=1/2", 1.0, 0.0, 0.5},
    };
    const char* stroke[] = {"#d4b000", "#d4b000", "green", "purple", "purple", "red", "blue", "blue"};
    for (std::size_t i = 0; i < std::size(lines); ++i) {
        const auto& L = lines[i];
        const auto s = clip(L.a, L.b, L.r);
        if (!s) continue;
        c.os << "<line class=\"" << L.color << "\" data-eq=\"" << L.eq << "\" x1=\"" << fmt(X(s->x1)) << "\" y1=\""
             << fmt(Y(s->y1)) << "\" x2=\"" << fmt(X(s->x2)) << "\" y2=\"" << fmt(Y(s->y2)) << "\" stroke=\"" << stroke[i]
             << "\" stroke-dasharray=\"6 4\"/>\n";
    }
    c.os << "<circle cx=\"" << fmt(X(0.5)) << "\" cy=\"" << fmt(Y(0.5)) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";

    const int cs = t.column("inv_s"), cq = t.column("inv_q"), cr = t.column("region");
    if (cs >= 0 && cq >= 0 && cr >= 0) {
        for (std::size_t i = 0; i < t.rows.size(); ++i) {
            const int line = t.line_numbers[i];
            const double x = to_number(t.rows[i][cs], line), y = to_number(t.rows[i][cq], line);
            const std::string& reg = t.rows[i][cr];
            const char* fill = reg == "I" ? "#1f77b4" : reg == "II" ? "#2ca02c" : reg == "III" ? "#ff7f0e" : reg == "IV" ? "#9467bd" : "#cccccc";
            c.os << "<circle class=\"region-" << reg << "\" cx=\"" << fmt(X(x)) << "\" cy=\"" << fmt(Y(y))
                 << "\" r=\"3\" fill=\"" << fill << "\"/>\n";
        }
    }
    return c.finish();
}

}  // namespace

int CsvTable::column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream is(text);
    std::string line;
    int n = 0;
    while (std::getline(is, line)) {
        ++n;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto cells = split(line);
        if (t.header.empty()) {
            t.header = std::move(cells);
            continue;
        }
        if (cells.size() != t.header.size())
            throw std::invalid_argument("csv line " + std::to_string(n) + ": expected " + std::to_string(t.header.size()) +
                                        " fields, got " + std::to_string(cells.size()));
        t.rows.push_back(std::move(cells));
        t.line_numbers.push_back(n);
    }
    if (t.header.empty()) throw std::invalid_argument("csv line 1: missing header");
    return t;
}

void cmd_plot(const std::string& csv_path, PlotKind kind, const std::string& svg_path) {
    std::ifstream in(csv_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + csv_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    const auto t = parse_csv(buf.str());
    write_file(svg_path, kind == PlotKind::LogLog ? loglog(t) : region_diagram(t));
}

}  // namespace hypx
