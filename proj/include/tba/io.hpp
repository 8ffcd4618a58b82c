#pragma once

// Text formats for arrangements and configurations, and SVG output.

#include "tba/arrangement.hpp"
#include "tba/duality.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tba {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_, column_;
};

namespace detail {

struct Token {
    std::string text;
    std::size_t column; // 1-based
};

struct SourceLine {
    std::size_t number;
    std::vector<Token> tokens;
};

/// Non-blank lines with comments removed, split on whitespace.
inline std::vector<SourceLine> tokenize(const std::string& text)
{
    std::vector<SourceLine> out;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        if (auto h = raw.find('#'); h != std::string::npos)
            raw.erase(h);
        SourceLine sl{no, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            if (i > start)
                sl.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (!sl.tokens.empty())
            out.push_back(std::move(sl));
    }
    return out;
}

inline Rat rat_token(const SourceLine& l, const Token& t)
{
    try {
        return parse_rat(t.text);
    } catch (const std::invalid_argument& e) {
        throw ParseError(l.number, t.column, e.what());
    }
}

inline std::size_t count_token(const SourceLine& l, const Token& t)
{
    const auto& s = t.text;
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(l.number, t.column, "expected a count, got '" + s + "'");
    return std::stoul(s);
}

} // namespace detail

inline TriangleArrangement parse_tba(const std::string& text)
{
    auto lines = detail::tokenize(text);
    std::size_t at = 0;
    std::size_t last_line = lines.empty() ? 1 : lines.back().number;
    auto need = [&](const std::string& what) -> const detail::SourceLine& {
        if (at >= lines.size())
            throw ParseError(last_line + 1, 1, "expected " + what);
        return lines[at++];
    };
    auto expect_shape = [](const detail::SourceLine& l, const std::string& key, std::size_t n) {
        if (l.tokens[0].text != key)
            throw ParseError(l.number, l.tokens[0].column, "expected '" + key + "', got '" + l.tokens[0].text + "'");
        if (l.tokens.size() != n + 1)
            throw ParseError(l.number, l.tokens.back().column,
                             "'" + key + "' takes " + std::to_string(n) + " values");
    };

    const auto& head = need("header 'tba 1'");
    expect_shape(head, "tba", 1);
    if (head.tokens[1].text != "1")
        throw ParseError(head.number, head.tokens[1].column, "unsupported version " + head.tokens[1].text);

    const auto& tl = need("triangle line 'T x1 y1 x2 y2 x3 y3'");
    expect_shape(tl, "T", 6);
    std::array<Point2, 3> corners;
    for (int i = 0; i < 3; ++i)
        corners[i] = {detail::rat_token(tl, tl.tokens[1 + 2 * i]), detail::rat_token(tl, tl.tokens[2 + 2 * i])};

    auto block = [&](const std::string& key) {
        const auto& hl = need("'" + key + " <count>'");
        expect_shape(hl, key, 1);
        std::size_t n = detail::count_token(hl, hl.tokens[1]);
        std::vector<Seg> segs;
        for (std::size_t i = 0; i < n; ++i) {
            if (at >= lines.size() || lines[at].tokens[0].text == "B")
                throw ParseError(at < lines.size() ? lines[at].number : last_line + 1, 1,
                                 "expected " + std::to_string(n) + " segment line" + (n == 1 ? "" : "s"));
            const auto& sl = lines[at++];
            if (sl.tokens.size() != 4)
                throw ParseError(sl.number, sl.tokens.front().column, "segment line takes 4 values");
            Point2 a{detail::rat_token(sl, sl.tokens[0]), detail::rat_token(sl, sl.tokens[1])};
            Point2 b{detail::rat_token(sl, sl.tokens[2]), detail::rat_token(sl, sl.tokens[3])};
            if (a == b)
                throw ParseError(sl.number, 1, "degenerate segment");
            segs.push_back(Seg(a, b));
        }
        return segs;
    };
    auto S = block("S");
    auto B = block("B");
    if (at < lines.size())
        throw ParseError(lines[at].number, lines[at].tokens[0].column, "unexpected line");
    return build(corners, std::move(S), std::move(B));
}

inline std::string emit_tba(const TriangleArrangement& arr)
{
    std::string s = "tba 1\nT";
    for (const auto& c : arr.corners())
        s += " " + to_string(c.x) + " " + to_string(c.y);
    s += "\n";
    auto block = [&](const char* key, const std::vector<Seg>& segs) {
        s += std::string(key) + " " + std::to_string(segs.size()) + "\n";
        for (const auto& g : segs) {
            Seg c = g.canonical();
            s += to_string(c.a.x) + " " + to_string(c.a.y) + " " + to_string(c.b.x) + " " + to_string(c.b.y) + "\n";
        }
    };
    block("S", arr.initial());
    block("B", arr.blocking());
    return s;
}

// ---------------------------------------------------------------------------
// Configurations: lines "P [a:b:c]", "B [a:b:c]", "L [a:b:c]", "BL [a:b:c]".

struct ConfigFile {
    PrimalConfig primal;
    BlockingConfig lines;
    bool has_primal = false, has_lines = false;
};

template <class Tag>
std::string compact(const Homogeneous<Tag>& h)
{
    return "[" + to_string(h[0]) + ":" + to_string(h[1]) + ":" + to_string(h[2]) + "]";
}

inline ConfigFile parse_config(const std::string& text)
{
    ConfigFile f;
    for (const auto& l : detail::tokenize(text)) {
        const auto& key = l.tokens[0].text;
        std::string rest;
        for (std::size_t i = 1; i < l.tokens.size(); ++i)
            rest += l.tokens[i].text;
        std::size_t col = l.tokens.size() > 1 ? l.tokens[1].column : l.tokens[0].column;
        if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
            throw ParseError(l.number, col, "expected [a:b:c]");
        std::vector<Rat> v;
        std::string body = rest.substr(1, rest.size() - 2);
        std::size_t start = 0;
        for (;;) {
            auto colon = body.find(':', start);
            detail::Token t{body.substr(start, colon == std::string::npos ? std::string::npos : colon - start), col};
            v.push_back(detail::rat_token(l, t));
            if (colon == std::string::npos)
                break;
            start = colon + 1;
        }
        if (v.size() != 3)
            throw ParseError(l.number, col, "expected three homogeneous coordinates");
        if (v[0] == 0 && v[1] == 0 && v[2] == 0)
            throw ParseError(l.number, col, "all-zero homogeneous triple");
        if (key == "P" || key == "B") {
            f.has_primal = true;
            (key == "P" ? f.primal.points : f.primal.blockers).push_back(HPoint(v[0], v[1], v[2]));
        } else if (key == "L" || key == "BL") {
            f.has_lines = true;
            (key == "L" ? f.lines.L : f.lines.Bl).push_back(HLine(v[0], v[1], v[2]));
        } else {
            throw ParseError(l.number, l.tokens[0].column, "unknown record '" + key + "'");
        }
    }
    if (f.has_primal && f.has_lines)
        throw ParseError(1, 1, "file mixes points and lines");
    return f;
}

inline std::string emit_config(const PrimalConfig& c)
{
    std::string s;
    for (const auto& p : c.points)
        s += "P " + compact(p) + "\n";
    for (const auto& b : c.blockers)
        s += "B " + compact(b) + "\n";
    return s;
}

inline std::string emit_config(const BlockingConfig& c)
{
    std::string s;
    for (const auto& l : c.L)
        s += "L " + compact(l) + "\n";
    for (const auto& b : c.Bl)
        s += "BL " + compact(b) + "\n";
    return s;
}

// ---------------------------------------------------------------------------

struct RenderSpec {
    double width = 600;
    double margin = 20;
    double vertex_radius = 3;
    double stroke = 1.5;
    std::string initial_color = "#1f3b73";
    std::string blocking_color = "#b23a2e";
    std::string edge_color = "#000000";
};

inline std::string render_svg(const TriangleArrangement& arr, const RenderSpec& spec = {})
{
    const auto& c = arr.corners();
    Rat x0 = rmin(c[0].x, rmin(c[1].x, c[2].x)), x1 = rmax(c[0].x, rmax(c[1].x, c[2].x));
    Rat y0 = rmin(c[0].y, rmin(c[1].y, c[2].y)), y1 = rmax(c[0].y, rmax(c[1].y, c[2].y));
    Rat span = rmax(x1 - x0, y1 - y0);
    double inner = spec.width - 2 * spec.margin;
    double height = inner * Rat((y1 - y0) / span).get_d() + 2 * spec.margin;
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return std::string(buf);
    };
    auto X = [&](const Point2& p) { return num(spec.margin + inner * Rat((p.x - x0) / span).get_d()); };
    auto Y = [&](const Point2& p) { return num(spec.margin + inner * Rat((y1 - p.y) / span).get_d()); };
    auto path = [&](const Seg& s, const std::string& color, bool dashed, const char* cls) {
        return std::string("  <path class=\"") + cls + "\" d=\"M " + X(s.a) + " " + Y(s.a) + " L " + X(s.b) + " " +
               Y(s.b) + "\" stroke=\"" + color + "\" stroke-width=\"" + num(spec.stroke) + "\" fill=\"none\"" +
               (dashed ? " stroke-dasharray=\"6 4\"" : "") + "/>\n";
    };
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(spec.width) + "\" height=\"" +
         num(height) + "\" viewBox=\"0 0 " + num(spec.width) + " " + num(height) + "\">\n";
    for (int e = 0; e < 3; ++e)
        s += path(arr.edge(e), spec.edge_color, false, "edge");
    for (const auto& g : arr.initial())
        s += path(g, spec.initial_color, false, "initial");
    for (const auto& g : arr.blocking())
        s += path(g, spec.blocking_color, true, "blocking");
    for (const auto& [p, members] : closure_incidences(arr, all_closure_indices(arr)))
        s += "  <circle cx=\"" + X(p) + "\" cy=\"" + Y(p) + "\" r=\"" + num(spec.vertex_radius) + "\" fill=\"#000000\"/>\n";
    s += "</svg>\n";
    return s;
}

} // namespace tba
