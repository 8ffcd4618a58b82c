#pragma once

// Blocking points in the plane and their duals, blocking line configurations,
// the regular n-gon in its group model, and the reduction of a line
// configuration to three triangle blocking arrangements.

#include "tba/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tba {

struct PrimalConfig {
    std::vector<HPoint> points;
    std::vector<HPoint> blockers;
};

struct BlockingConfig {
    std::vector<HLine> L;
    std::vector<HLine> Bl;
};

/// ceil(C(n,2) / floor(n/2)); 0 when no line is spanned.
inline long counting_bound(long n)
{
    if (n < 2)
        return 0;
    long lines = n * (n - 1) / 2, per = n / 2;
    return (lines + per - 1) / per;
}

struct PrimalReport {
    std::size_t n = 0;
    bool general_position = true;
    std::vector<std::array<int, 3>> collinear_triples;
    std::vector<std::pair<int, int>> shared; // (point, blocker) equal
    std::vector<std::pair<int, int>> pairs; // spanned lines, as point index pairs
    std::vector<int> line_hits; // blockers on each spanned line
    std::vector<std::pair<int, int>> unblocked;
    std::vector<int> blocker_lines; // spanned lines through each blocker
    long bound = 0;
    bool below_bound = false;

    bool blocked() const { return unblocked.empty(); }
    bool ok() const { return general_position && shared.empty() && blocked(); }

    std::string text() const
    {
        std::string s = "points " + std::to_string(n) + " bound " + std::to_string(bound) + "\n";
        s += std::string("general position ") + (general_position ? "yes" : "no") + "\n";
        if (below_bound)
            s += "blockers " + std::to_string(blocker_lines.size()) + " below bound\n";
        for (std::size_t b = 0; b < blocker_lines.size(); ++b)
            s += "blocker " + std::to_string(b) + " lines " + std::to_string(blocker_lines[b]) + "\n";
        for (const auto& [i, j] : unblocked)
            s += "unblocked " + std::to_string(i) + " " + std::to_string(j) + "\n";
        s += ok() ? "BLOCKED\n" : "NOT BLOCKED\n";
        return s;
    }
};

inline PrimalReport verify_primal_blocking(const PrimalConfig& cfg)
{
    PrimalReport r;
    const auto& P = cfg.points;
    const auto& B = cfg.blockers;
    r.n = P.size();
    r.bound = counting_bound(static_cast<long>(r.n));
    r.below_bound = static_cast<long>(B.size()) < r.bound;
    r.blocker_lines.assign(B.size(), 0);
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t b = 0; b < B.size(); ++b)
            if (P[i] == B[b])
                r.shared.push_back({static_cast<int>(i), static_cast<int>(b)});
    int n = static_cast<int>(P.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (collinear(P[i], P[j], P[k]))
                    r.collinear_triples.push_back({i, j, k});
    r.general_position = r.collinear_triples.empty();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (P[i] == P[j]) {
                r.general_position = false;
                continue;
            }
            HLine l = line_join(P[i], P[j]);
            int hits = 0;
            for (std::size_t b = 0; b < B.size(); ++b)
                if (B[b] != P[i] && B[b] != P[j] && incident(B[b], l)) {
                    ++hits;
                    ++r.blocker_lines[b];
                }
            r.pairs.push_back({i, j});
            r.line_hits.push_back(hits);
            if (!hits)
                r.unblocked.push_back({i, j});
        }
    return r;
}

/// Four points of a square and its three diagonal points.
inline PrimalConfig quadrangle_example()
{
    PrimalConfig c;
    c.points = {lift(pt(0, 0)), lift(pt(1, 0)), lift(pt(0, 1)), lift(pt(1, 1))};
    const auto& p = c.points;
    for (auto [a, b, x, y] : {std::array<int, 4>{0, 3, 1, 2}, {0, 1, 2, 3}, {0, 2, 1, 3}})
        c.blockers.push_back(line_meet(line_join(p[a], p[b]), line_join(p[x], p[y])));
    return c;
}

struct NgonReport {
    int n = 0;
    std::size_t chords = 0;
    std::vector<int> class_size; // chords per residue of i+j
    bool covered = true;
    bool equal = true; // odd n: every class has (n-1)/2 chords

    std::string text() const
    {
        std::string s = "n " + std::to_string(n) + " chords " + std::to_string(chords) + "\n";
        for (int c = 0; c < n; ++c)
            s += "class " + std::to_string(c) + " " + std::to_string(class_size[c]) + "\n";
        s += std::string(covered && equal ? "CERTIFIED" : "FAILED") + "\n";
        return s;
    }
};

/// Chords {i,j} of the regular n-gon are parallel iff i+j agrees mod n, so the
/// n directions at infinity block every chord.
inline NgonReport ngon_certificate(int n)
{
    if (n < 3)
        throw std::invalid_argument("n-gon needs n >= 3");
    NgonReport r;
    r.n = n;
    r.class_size.assign(n, 0);
    std::vector<bool> blocker(n, true);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int c = (i + j) % n;
            ++r.chords;
            ++r.class_size[c];
            r.covered = r.covered && blocker[c];
        }
    if (n % 2)
        for (int c : r.class_size)
            r.equal = r.equal && c == (n - 1) / 2;
    return r;
}

inline BlockingConfig dualize_config(const PrimalConfig& cfg)
{
    auto rep = verify_primal_blocking(cfg);
    if (!rep.ok())
        throw std::invalid_argument("dualize needs a blocked configuration in general position");
    BlockingConfig d;
    for (const auto& p : cfg.points)
        d.L.push_back(dual_point(p));
    for (const auto& b : cfg.blockers)
        d.Bl.push_back(dual_point(b));
    return d;
}

inline PrimalConfig dualize_back(const BlockingConfig& cfg)
{
    PrimalConfig p;
    for (const auto& l : cfg.L)
        p.points.push_back(dual_line(l));
    for (const auto& b : cfg.Bl)
        p.blockers.push_back(dual_line(b));
    return p;
}

/// Violations of the blocking configuration rules, one line each.
inline std::vector<std::string> check_blocking_config(const BlockingConfig& cfg)
{
    std::vector<std::string> out;
    const auto& L = cfg.L;
    std::size_t n = L.size();
    if (cfg.Bl.size() + 1 != n)
        out.push_back("expected " + std::to_string(n ? n - 1 : 0) + " blocking lines, got " +
                      std::to_string(cfg.Bl.size()));
    for (const auto& l : L)
        for (const auto& b : cfg.Bl)
            if (l == b)
                out.push_back("line " + to_string(l) + " is both initial and blocking");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (L[i] == L[j]) {
                out.push_back("repeated initial line " + to_string(L[i]));
                continue;
            }
            HPoint p = line_meet(L[i], L[j]);
            for (std::size_t k = j + 1; k < n; ++k)
                if (L[k] != L[i] && L[k] != L[j] && incident(p, L[k]))
                    out.push_back("three initial lines concurrent at " + to_string(p));
            int through = 0;
            for (const auto& b : cfg.Bl)
                through += incident(p, b);
            if (through != 1)
                out.push_back("vertex " + to_string(p) + " on " + std::to_string(through) + " blocking lines");
        }
    return out;
}

// ---------------------------------------------------------------------------
// Charts. A chart sends a chosen line h to infinity: its third row is h.

inline Mat3 chart_for(const HLine& h)
{
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            Mat3 m;
            for (int c = 0; c < 3; ++c) {
                m.m[0][c] = c == i ? 1 : 0;
                m.m[1][c] = c == j ? 1 : 0;
                m.m[2][c] = h[c];
            }
            if (m.det() != 0)
                return m;
        }
    throw std::logic_error("no chart for " + to_string(h));
}

/// First line ax + by + z = 0 in a fixed enumeration that misses every point.
inline HLine chart_line_avoiding(const std::vector<HPoint>& pts)
{
    for (long r = 0;; ++r)
        for (long a = -r; a <= r; ++a)
            for (long b = -r; b <= r; ++b) {
                if (std::max(std::labs(a), std::labs(b)) != r)
                    continue;
                HLine h(rat(a), rat(b), Rat(1));
                if (std::none_of(pts.begin(), pts.end(), [&](const HPoint& p) { return incident(p, h); }))
                    return h;
            }
}

inline std::vector<HPoint> pairwise_meets(const std::vector<HLine>& lines)
{
    std::vector<HPoint> out;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (lines[i] != lines[j])
                out.push_back(line_meet(lines[i], lines[j]));
    return out;
}

inline Point2 in_chart(const Mat3& c, const HPoint& p) { return affine(transform(c, p)); }

/// Closed intersection of a line with a triangle, if it is a proper segment.
inline std::optional<Seg> clip_line(const HLine& l, const std::array<Point2, 3>& tri)
{
    std::set<Point2> hits;
    for (int e = 0; e < 3; ++e) {
        const Point2& a = tri[e];
        const Point2& b = tri[(e + 1) % 3];
        Rat va = side_value(l, a), vb = side_value(l, b);
        if (va == 0)
            hits.insert(a);
        if (sign(va) * sign(vb) < 0)
            hits.insert(lerp(a, b, Rat(va / (va - vb))));
    }
    if (hits.size() != 2)
        return std::nullopt;
    return Seg(*hits.begin(), *hits.rbegin());
}

struct MinTriangle {
    std::array<int, 3> idx;
    HLine h; // chart line used
    Mat3 chart;
};

/// Triple of lines bounding a triangle no other line crosses.
inline MinTriangle find_min_triangle(const std::vector<HLine>& L)
{
    if (L.size() < 3)
        throw std::invalid_argument("need at least 3 lines");
    auto meets = pairwise_meets(L);
    for (std::size_t i = 0; i < L.size(); ++i)
        for (std::size_t j = i + 1; j < L.size(); ++j) {
            if (L[i] == L[j])
                throw std::invalid_argument("repeated line " + to_string(L[i]));
            for (std::size_t k = j + 1; k < L.size(); ++k)
                if (concurrent_det(L[i], L[j], L[k]))
                    throw std::invalid_argument("lines " + std::to_string(i) + "," + std::to_string(j) + "," +
                                                std::to_string(k) + " are concurrent");
        }
    HLine h = chart_line_avoiding(meets);
    Mat3 c = chart_for(h);
    std::vector<HLine> cl;
    for (const auto& l : L)
        cl.push_back(transform(c, l));
    std::array<int, 3> t{0, 1, 2};
    auto vertex = [&](int a, int b) { return affine(line_meet(cl[a], cl[b])); };
    for (bool changed = true; changed;) {
        changed = false;
        // vertex opposite line t[i] is the meet of the other two
        std::array<Point2, 3> v{vertex(t[1], t[2]), vertex(t[2], t[0]), vertex(t[0], t[1])};
        for (int l = 0; l < static_cast<int>(L.size()) && !changed; ++l) {
            if (l == t[0] || l == t[1] || l == t[2])
                continue;
            std::array<int, 3> s{};
            for (int i = 0; i < 3; ++i)
                s[i] = sign(side_value(cl[l], v[i]));
            int pos = (s[0] > 0) + (s[1] > 0) + (s[2] > 0);
            if (pos == 0 || pos == 3)
                continue;
            // the lone vertex keeps its two lines; l closes the smaller triangle
            int lone = 0;
            for (int i = 0; i < 3; ++i)
                if ((pos == 1) == (s[i] > 0))
                    lone = i;
            t = {t[(lone + 1) % 3], t[(lone + 2) % 3], l};
            std::sort(t.begin(), t.end());
            changed = true;
        }
    }
    return {t, h, c};
}

// ---------------------------------------------------------------------------

struct PipelineReport {
    bool ok = false;
    std::array<int, 3> triangle{};
    std::vector<TriangleArrangement> induced;
    std::vector<std::optional<TypeTag>> types;
    std::optional<int> r;
    std::vector<std::string> checks;
    std::string failure;
    std::string witness;

    std::string text() const
    {
        std::string s = "triangle " + std::to_string(triangle[0]) + " " + std::to_string(triangle[1]) + " " +
                        std::to_string(triangle[2]) + "\n";
        for (std::size_t i = 0; i < types.size(); ++i)
            s += "S" + std::to_string(i + 1) + " " + (types[i] ? to_string(*types[i]) : std::string("untyped")) + "\n";
        if (r)
            s += "r " + std::to_string(*r) + "\n";
        for (const auto& c : checks)
            s += c + "\n";
        if (!ok)
            s += "FAIL " + failure + (witness.empty() ? "" : " AT " + witness) + "\n";
        else
            s += "PASS\n";
        return s;
    }
};

namespace detail {

/// Meets of line m with the other lines, ordered from `from` to `to` the long way round.
inline std::vector<HPoint> outside_vertices(const Mat3& c, const std::vector<HLine>& L, int m,
                                            const std::array<int, 3>& tri, const HPoint& from, const HPoint& to)
{
    Point2 f = in_chart(c, from), d = in_chart(c, to) - f;
    std::vector<std::pair<std::pair<int, Rat>, HPoint>> keyed;
    for (int l = 0; l < static_cast<int>(L.size()); ++l) {
        if (l == tri[0] || l == tri[1] || l == tri[2])
            continue;
        HPoint p = line_meet(L[m], L[l]);
        Rat t = dot(in_chart(c, p) - f, d) / dot(d, d);
        keyed.push_back({{t < 0 ? 0 : 1, Rat(-t)}, p});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<HPoint> out;
    for (auto& k : keyed)
        out.push_back(k.second);
    return out;
}

inline bool in_lines(const std::vector<HLine>& L, const HLine& l) { return std::find(L.begin(), L.end(), l) != L.end(); }

} // namespace detail

inline PipelineReport pipeline_classify(const BlockingConfig& cfg)
{
    if (cfg.L.size() < 4)
        throw std::invalid_argument("pipeline needs at least 4 initial lines");
    PipelineReport rep;
    auto fail = [&](std::string why, std::string at) {
        rep.ok = false;
        rep.failure = "not an n-blocking configuration realization: " + std::move(why);
        rep.witness = std::move(at);
        return rep;
    };
    auto problems = check_blocking_config(cfg);
    if (!problems.empty())
        return fail("rule violated", problems.front());

    const auto& L = cfg.L;
    MinTriangle mt = find_min_triangle(L);
    rep.triangle = mt.idx;
    const auto& m = mt.idx;
    // x[i] is opposite m[i]
    std::array<HPoint, 3> x{line_meet(L[m[1]], L[m[2]]), line_meet(L[m[2]], L[m[0]]), line_meet(L[m[0]], L[m[1]])};

    std::vector<HLine> all = L;
    all.insert(all.end(), cfg.Bl.begin(), cfg.Bl.end());
    auto avoid = pairwise_meets(all);
    const std::vector<Rat> params{Rat(1, 2), Rat(1, 3), Rat(2, 3), Rat(1, 4), Rat(3, 4), Rat(1, 5), Rat(2, 5),
                                  Rat(3, 5), Rat(4, 5)};
    for (int i = 0; i < 3; ++i) {
        // a line through inner points of the two R0 edges at x[i] misses S_i
        int j = (i + 1) % 3, k = (i + 2) % 3;
        Point2 X = in_chart(mt.chart, x[i]);
        Point2 Ek = in_chart(mt.chart, x[j]), Ej = in_chart(mt.chart, x[k]);
        Mat3 back = mt.chart.inverse();
        std::optional<HLine> h;
        for (const auto& s : params) {
            for (const auto& t : params) {
                HPoint p = transform(back, lift(lerp(X, Ej, s)));
                HPoint q = transform(back, lift(lerp(X, Ek, t)));
                HLine cand = line_join(p, q);
                if (std::none_of(avoid.begin(), avoid.end(), [&](const HPoint& a) { return incident(a, cand); })) {
                    h = cand;
                    break;
                }
            }
            if (h)
                break;
        }
        if (!h)
            throw std::logic_error("no chart line found for region " + std::to_string(i + 1));
        Mat3 c = chart_for(*h);
        std::array<Point2, 3> tri{in_chart(c, x[0]), in_chart(c, x[1]), in_chart(c, x[2])};
        if (orient(tri[0], tri[1], tri[2]) < 0)
            std::swap(tri[1], tri[2]);
        std::vector<Seg> S, B;
        for (int l = 0; l < static_cast<int>(L.size()); ++l)
            if (l != m[0] && l != m[1] && l != m[2])
                if (auto sg = clip_line(transform(c, L[l]), tri))
                    S.push_back(*sg);
        for (const auto& b : cfg.Bl)
            if (auto sg = clip_line(transform(c, b), tri))
                B.push_back(*sg);
        std::optional<TriangleArrangement> arr;
        try {
            arr = build(tri, S, B);
        } catch (const BuildError& e) {
            rep.types.push_back(std::nullopt);
            return fail("region S" + std::to_string(i + 1) + " does not build: " + e.what(), to_string(e.witness()));
        }
        rep.induced.push_back(*arr);
        auto v = validate(*arr, Level::TBA);
        if (!v.pass) {
            rep.types.push_back(std::nullopt);
            return fail("region S" + std::to_string(i + 1) + " is not a TBA", v.reports.front().line());
        }
        auto cls = classify(*arr);
        rep.types.push_back(cls ? std::optional<TypeTag>(cls->tag) : std::nullopt);
        if (!cls || cls->tag.kind != Kind::B1)
            return fail("region S" + std::to_string(i + 1) + " is not of type B1", to_string(tri[0]));
    }

    // vertices outside the minimal triangle on each of its lines
    auto a = detail::outside_vertices(mt.chart, L, m[0], m, x[1], x[2]);
    auto b = detail::outside_vertices(mt.chart, L, m[1], m, x[2], x[0]);
    auto cc = detail::outside_vertices(mt.chart, L, m[2], m, x[0], x[1]);
    if (a.size() != b.size() || b.size() != cc.size())
        return fail("side counts differ", "");
    int r = static_cast<int>(a.size());
    rep.r = r;
    for (const auto& tag : rep.types)
        if (tag->n != r)
            return fail("B1 size " + std::to_string(tag->n) + " differs from r", "");
    for (int i = 0; i < r; ++i)
        for (auto [p, q, name] : {std::tuple{&a, &b, "a b"}, {&b, &cc, "b c"}, {&cc, &a, "c a"}}) {
            HLine l = line_join((*p)[i], (*q)[r - 1 - i]);
            if (!detail::in_lines(L, l))
                return fail(std::string("pair ") + name + " " + std::to_string(i + 1) + " not on an initial line",
                            to_string((*p)[i]));
        }
    rep.checks.push_back("pairs a_i b_(r+1-i), b_i c_(r+1-i), c_i a_(r+1-i) on initial lines");
    if (!collinear(a[0], b[r - 1], cc[r - 1]))
        return fail("a_1, b_r, c_r not collinear", to_string(a[0]));
    rep.checks.push_back("a_1, b_r, c_r collinear");
    rep.ok = true;
    return rep;
}

// ---------------------------------------------------------------------------

struct RegionAuditReport {
    std::size_t regions = 0;
    std::size_t expected = 0;
    std::size_t internal = 0; // regions with every vertex internally blocked
    std::vector<std::string> violations;

    bool pass() const { return violations.empty() && regions == expected; }

    std::string text() const
    {
        std::string s = "regions " + std::to_string(regions) + " expected " + std::to_string(expected) +
                        " internal " + std::to_string(internal) + "\n";
        for (const auto& v : violations)
            s += v + "\n";
        s += pass() ? "PASS\n" : "FAIL\n";
        return s;
    }
};

namespace detail {

struct Piece {
    ConvexCell cell;
    std::vector<int> signs;
    bool bounded = true;
};

/// Vertex chain of an unbounded piece between its two exits to the box.
struct Chain {
    std::vector<Point2> pts;
    int in = -1, out = -1;
};

inline Chain chain_of(const ConvexCell& c)
{
    std::size_t n = c.size();
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (c.carrier[(i + n - 1) % n] < 0 && c.carrier[i] >= 0)
            start = i;
    Chain ch;
    ch.in = c.carrier[start];
    std::size_t j = (start + 1) % n;
    while (c.carrier[j] >= 0) {
        ch.pts.push_back(c.pts[j]);
        j = (j + 1) % n;
    }
    ch.out = c.carrier[(j + n - 1) % n];
    return ch;
}

} // namespace detail

inline RegionAuditReport region_blocking_audit(const BlockingConfig& cfg)
{
    RegionAuditReport rep;
    const auto& L = cfg.L;
    std::size_t n = L.size();
    rep.expected = n * (n - 1) / 2 + 1;
    if (n < 2) {
        rep.violations.push_back("fewer than two initial lines");
        return rep;
    }
    std::vector<HLine> all = L;
    all.insert(all.end(), cfg.Bl.begin(), cfg.Bl.end());
    HLine h = chart_line_avoiding(pairwise_meets(all));
    Mat3 c = chart_for(h);
    std::vector<HLine> cl, cb;
    for (const auto& l : L)
        cl.push_back(transform(c, l));
    for (const auto& b : cfg.Bl)
        cb.push_back(transform(c, b));

    Rat big = 1;
    for (const auto& p : pairwise_meets(cl)) {
        Point2 q = affine(p);
        big = rmax(big, rmax(abs(q.x), abs(q.y)));
    }
    big = 2 * big + 1;
    std::vector<ConvexCell> cells{make_cell({{-big, -big}, {big, -big}, {big, big}, {-big, big}}, {-1, -1, -1, -1})};
    for (std::size_t l = 0; l < n; ++l) {
        std::vector<ConvexCell> next;
        for (const auto& cell : cells) {
            if (auto pr = split_cell(cell, cl[l], static_cast<int>(l))) {
                next.push_back(pr->first);
                next.push_back(pr->second);
            } else {
                next.push_back(cell);
            }
        }
        cells = std::move(next);
    }

    std::vector<detail::Piece> pieces;
    for (auto& cell : cells) {
        detail::Piece p{cell, {}, true};
        Point2 g = vertex_centroid(cell.pts);
        for (const auto& l : cl)
            p.signs.push_back(sign(side_value(l, g)));
        for (int car : cell.carrier)
            p.bounded = p.bounded && car >= 0;
        pieces.push_back(std::move(p));
    }

    // a region is a cycle of (vertex, cell holding it near that vertex)
    struct Corner {
        Point2 v;
        const ConvexCell* cell;
    };
    std::vector<std::vector<Corner>> regions;
    std::vector<bool> used(pieces.size(), false);
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (used[i])
            continue;
        used[i] = true;
        const auto& A = pieces[i];
        std::vector<Corner> cyc;
        if (A.bounded) {
            for (const auto& v : A.cell.pts)
                cyc.push_back({v, &A.cell});
            regions.push_back(std::move(cyc));
            continue;
        }
        std::vector<int> neg(A.signs.size());
        for (std::size_t k = 0; k < neg.size(); ++k)
            neg[k] = -A.signs[k];
        std::size_t j = i + 1;
        while (j < pieces.size() && (used[j] || pieces[j].bounded || pieces[j].signs != neg))
            ++j;
        if (j == pieces.size()) {
            rep.violations.push_back("unbounded cell without an antipodal partner");
            continue;
        }
        used[j] = true;
        auto ca = detail::chain_of(A.cell), cb2 = detail::chain_of(pieces[j].cell);
        if (cb2.out == ca.out)
            std::reverse(cb2.pts.begin(), cb2.pts.end());
        for (const auto& v : ca.pts)
            cyc.push_back({v, &A.cell});
        for (const auto& v : cb2.pts)
            cyc.push_back({v, &pieces[j].cell});
        regions.push_back(std::move(cyc));
    }
    rep.regions = regions.size();

    auto back = c.inverse();
    auto name = [&](const Point2& p) { return to_string(transform(back, lift(p))); };
    for (const auto& R : regions) {
        std::size_t k = R.size();
        std::vector<std::optional<HLine>> beta(k);
        std::vector<bool> inside(k, false);
        for (std::size_t i = 0; i < k; ++i) {
            HPoint v = lift(R[i].v);
            std::vector<HLine> through;
            for (const auto& b : cb)
                if (incident(v, b))
                    through.push_back(b);
            if (through.size() != 1) {
                rep.violations.push_back("vertex " + name(R[i].v) + " on " + std::to_string(through.size()) +
                                         " blocking lines");
                if (through.empty())
                    continue;
            }
            beta[i] = through.front();
            Point2 d{through.front()[1], Rat(-through.front()[0])};
            inside[i] = segment_meets_interior(Seg(R[i].v - d, R[i].v + d), *R[i].cell);
        }
        std::size_t in = std::count(inside.begin(), inside.end(), true);
        if (in == 0)
            continue;
        if (in != k) {
            rep.violations.push_back("region at " + name(R[0].v) + " mixes internal and external blocking (" +
                                     std::to_string(in) + " of " + std::to_string(k) + ")");
            continue;
        }
        ++rep.internal;
        if (k % 2) {
            rep.violations.push_back("internally blocked region at " + name(R[0].v) + " has odd vertex count");
            continue;
        }
        std::size_t half = k / 2;
        auto V = [&](long i) { return R[((i % (long)k) + k) % k].v; };
        auto side = [&](long i) { return line_join(V(i), V(i + 1)); };
        for (long i = 0; i < (long)k; ++i) {
            HLine diag = line_join(V(i), V(i + half));
            if (!beta[i] || *beta[i] != diag) {
                rep.violations.push_back("blocking line at " + name(V(i)) + " is not the opposite diagonal");
                continue;
            }
            for (long j = 1; j <= (long)half; ++j)
                if (!concurrent_det(side(i - j - 1), diag, side(i + j)))
                    rep.violations.push_back("lines around " + name(V(i)) + " not concurrent at j=" +
                                             std::to_string(j));
        }
    }
    return rep;
}

} // namespace tba
