#pragma once

// Convex polygons with a carrier id on every edge. Faces of a subdivision are
// produced by repeatedly cutting convex cells with full lines, which keeps
// every cell convex and every coordinate exact.

#include "tba/kernel.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace tba {

struct ConvexCell {
    std::vector<Point2> pts; // counterclockwise
    std::vector<int> carrier; // carrier[i] labels the edge pts[i] -> pts[i+1]

    std::size_t size() const { return pts.size(); }
    const Point2& at(std::size_t i) const { return pts[i % pts.size()]; }
};

inline Rat signed_area2(const std::vector<Point2>& pts)
{
    Rat s = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Point2& a = pts[i];
        const Point2& b = pts[(i + 1) % pts.size()];
        s += a.x * b.y - a.y * b.x;
    }
    return s;
}

inline Rat area(const ConvexCell& c) { return Rat(signed_area2(c.pts) / 2); }

/// Value of the line's equation at p; its sign tells the side.
inline Rat side_value(const HLine& l, const Point2& p) { return l[0] * p.x + l[1] * p.y + l[2]; }

inline ConvexCell make_cell(std::vector<Point2> pts, std::vector<int> carrier)
{
    if (sign(signed_area2(pts)) < 0) {
        // reverse orientation; edge i -> i+1 becomes edge between reversed neighbours
        std::vector<Point2> rp(pts.rbegin(), pts.rend());
        std::vector<int> rc(carrier.size());
        std::size_t n = pts.size();
        for (std::size_t i = 0; i < n; ++i) {
            // reversed edge rp[i] -> rp[i+1] is original edge (n-2-i) -> (n-1-i)
            rc[i] = carrier[(2 * n - 2 - i) % n];
        }
        return {std::move(rp), std::move(rc)};
    }
    return {std::move(pts), std::move(carrier)};
}

/// Cut a convex cell by a line. Returns the two pieces when the line crosses
/// the open cell, nothing otherwise. The new edge is tagged with `tag`.
inline std::optional<std::pair<ConvexCell, ConvexCell>> split_cell(const ConvexCell& cell, const HLine& line, int tag)
{
    std::size_t n = cell.size();
    std::vector<int> s(n);
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = sign(side_value(line, cell.pts[i]));
        pos |= s[i] > 0;
        neg |= s[i] < 0;
    }
    if (!pos || !neg)
        return std::nullopt;

    // augmented cycle: original points plus crossing points
    std::vector<Point2> ap;
    std::vector<int> as, ac;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i + 1) % n;
        ap.push_back(cell.pts[i]);
        as.push_back(s[i]);
        ac.push_back(cell.carrier[i]);
        if (s[i] * s[j] < 0) {
            Rat vi = side_value(line, cell.pts[i]);
            Rat vj = side_value(line, cell.pts[j]);
            Rat t = vi / (vi - vj);
            ap.push_back(lerp(cell.pts[i], cell.pts[j], t));
            as.push_back(0);
            ac.push_back(cell.carrier[i]);
        }
    }

    auto piece = [&](int want) {
        std::size_t m = ap.size();
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < m; ++i)
            if (as[i] == 0 || as[i] == want)
                keep.push_back(i);
        std::vector<Point2> pts;
        std::vector<int> car;
        for (std::size_t q = 0; q < keep.size(); ++q) {
            std::size_t i = keep[q];
            std::size_t next = keep[(q + 1) % keep.size()];
            pts.push_back(ap[i]);
            car.push_back(next == (i + 1) % m ? ac[i] : tag);
        }
        return make_cell(std::move(pts), std::move(car));
    };
    return std::make_pair(piece(+1), piece(-1));
}

/// Does the closed segment meet the open interior of the convex cell?
inline bool segment_meets_interior(const Seg& s, const ConvexCell& cell)
{
    // strict inequalities f_i(t) > 0 for t in [0,1], with f_i affine in t
    Rat lo = 0, hi = 1;
    bool lo_open = false, hi_open = false;
    std::size_t n = cell.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = cell.pts[i];
        const Point2& b = cell.pts[(i + 1) % n];
        Rat f0 = area2(a, b, s.a);
        Rat f1 = area2(a, b, s.b);
        if (f0 == f1) {
            if (sign(f0) <= 0)
                return false;
            continue;
        }
        Rat root = f0 / (f0 - f1);
        if (f1 > f0) { // increasing: need t > root
            if (root > lo || (root == lo && !lo_open)) {
                lo = root;
                lo_open = true;
            }
        } else { // decreasing: need t < root
            if (root < hi || (root == hi && !hi_open)) {
                hi = root;
                hi_open = true;
            }
        }
    }
    if (lo < hi)
        return true;
    return lo == hi && !lo_open && !hi_open;
}

/// Parameter interval of the segment that lies in the closed convex cell.
inline std::optional<std::pair<Rat, Rat>> clip_interval(const Seg& s, const std::vector<Point2>& poly)
{
    Rat lo = 0, hi = 1;
    std::size_t n = poly.size();
    int orient_sign = sign(signed_area2(poly));
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly[i];
        const Point2& b = poly[(i + 1) % n];
        Rat f0 = area2(a, b, s.a) * orient_sign;
        Rat f1 = area2(a, b, s.b) * orient_sign;
        if (f0 == f1) {
            if (sign(f0) < 0)
                return std::nullopt;
            continue;
        }
        Rat root = f0 / (f0 - f1);
        if (f1 > f0)
            lo = rmax(lo, root);
        else
            hi = rmin(hi, root);
    }
    if (lo > hi)
        return std::nullopt;
    return std::make_pair(lo, hi);
}

/// Strictly inside the convex cell.
inline bool strictly_inside(const Point2& p, const ConvexCell& cell)
{
    std::size_t n = cell.size();
    for (std::size_t i = 0; i < n; ++i)
        if (orient(cell.pts[i], cell.pts[(i + 1) % n], p) <= 0)
            return false;
    return true;
}

inline Point2 vertex_centroid(const std::vector<Point2>& pts)
{
    Rat sx = 0, sy = 0;
    for (const auto& p : pts) {
        sx += p.x;
        sy += p.y;
    }
    Rat n(static_cast<long>(pts.size()));
    return {Rat(sx / n), Rat(sy / n)};
}

} // namespace tba
