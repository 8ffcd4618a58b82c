#pragma once

// Exact affine and projective primitives. Nothing in here rounds.

#include "tba/rational.hpp"

#include <array>
#include <compare>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace tba {

struct Point2 {
    Rat x, y;

    Point2() = default;
    Point2(Rat x_, Rat y_) : x(std::move(x_)), y(std::move(y_)) {}

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(const Point2& a, const Point2& b) { return !(a == b); }
    friend bool operator<(const Point2& a, const Point2& b)
    {
        int c = cmp(a.x, b.x);
        if (c != 0)
            return c < 0;
        return cmp(a.y, b.y) < 0;
    }
    friend Point2 operator+(const Point2& a, const Point2& b) { return {Rat(a.x + b.x), Rat(a.y + b.y)}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {Rat(a.x - b.x), Rat(a.y - b.y)}; }
    friend Point2 operator*(const Rat& s, const Point2& p) { return {Rat(s * p.x), Rat(s * p.y)}; }
};

inline std::string to_string(const Point2& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }
inline std::ostream& operator<<(std::ostream& os, const Point2& p) { return os << to_string(p); }

inline Point2 pt(long x, long y) { return {rat(x), rat(y)}; }

inline Rat cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point2& a, const Point2& b) { return a.x * b.x + a.y * b.y; }

/// Point a + t (b - a).
inline Point2 lerp(const Point2& a, const Point2& b, const Rat& t)
{
    return {Rat(a.x + t * (b.x - a.x)), Rat(a.y + t * (b.y - a.y))};
}

/// Sign of the signed area of (p, q, r): +1 for a left turn, 0 iff collinear.
inline int orient(const Point2& p, const Point2& q, const Point2& r)
{
    Rat d = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return sign(d);
}

/// Twice the signed area of the triangle pqr.
inline Rat area2(const Point2& p, const Point2& q, const Point2& r)
{
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

struct Seg {
    Point2 a, b;

    Seg() = default;
    Seg(Point2 a_, Point2 b_) : a(std::move(a_)), b(std::move(b_))
    {
        if (a == b)
            throw std::invalid_argument("degenerate segment at " + to_string(a));
    }

    /// Same segment with endpoints in lexicographic order.
    Seg canonical() const { return b < a ? Seg(b, a) : *this; }

    friend bool operator==(const Seg& s, const Seg& t) { return s.a == t.a && s.b == t.b; }
    friend bool operator!=(const Seg& s, const Seg& t) { return !(s == t); }
    friend bool operator<(const Seg& s, const Seg& t)
    {
        if (s.a != t.a)
            return s.a < t.a;
        return s.b < t.b;
    }
};

inline std::string to_string(const Seg& s) { return to_string(s.a) + "-" + to_string(s.b); }
inline bool same_segment(const Seg& s, const Seg& t) { return s.canonical() == t.canonical(); }

/// Closed-segment membership.
inline bool on_segment(const Point2& p, const Seg& s)
{
    if (orient(s.a, s.b, p) != 0)
        return false;
    return cmp(p.x, rmin(s.a.x, s.b.x)) >= 0 && cmp(p.x, rmax(s.a.x, s.b.x)) <= 0 &&
           cmp(p.y, rmin(s.a.y, s.b.y)) >= 0 && cmp(p.y, rmax(s.a.y, s.b.y)) <= 0;
}

inline bool in_relative_interior(const Point2& p, const Seg& s)
{
    return on_segment(p, s) && p != s.a && p != s.b;
}

enum class HitKind { Endpoint, Interior };

struct NoIntersection {};
struct PointIntersection {
    Point2 p;
    HitKind on_first;
    HitKind on_second;
};
struct OverlapIntersection {
    Seg sub;
};
using SegIntersection = std::variant<NoIntersection, PointIntersection, OverlapIntersection>;

namespace detail {
inline HitKind kind_on(const Point2& p, const Seg& s)
{
    return (p == s.a || p == s.b) ? HitKind::Endpoint : HitKind::Interior;
}
} // namespace detail

/// Exact intersection of two closed segments.
inline SegIntersection seg_intersection(const Seg& s, const Seg& t)
{
    int o1 = orient(s.a, s.b, t.a);
    int o2 = orient(s.a, s.b, t.b);
    int o3 = orient(t.a, t.b, s.a);
    int o4 = orient(t.a, t.b, s.b);

    if (o1 == 0 && o2 == 0) {
        // collinear: overlap of parameter ranges along s
        Point2 d = s.b - s.a;
        Rat len = dot(d, d);
        Rat ta = dot(t.a - s.a, d) / len;
        Rat tb = dot(t.b - s.a, d) / len;
        if (ta > tb)
            std::swap(ta, tb);
        Rat lo = rmax(Rat(0), ta);
        Rat hi = rmin(Rat(1), tb);
        if (lo > hi)
            return NoIntersection{};
        Point2 p = lerp(s.a, s.b, lo);
        if (lo == hi)
            return PointIntersection{p, detail::kind_on(p, s), detail::kind_on(p, t)};
        Point2 q = lerp(s.a, s.b, hi);
        return OverlapIntersection{Seg(p, q)};
    }
    if (o1 * o2 > 0 || o3 * o4 > 0)
        return NoIntersection{};

    Point2 p;
    if (o1 == 0)
        p = t.a;
    else if (o2 == 0)
        p = t.b;
    else if (o3 == 0)
        p = s.a;
    else if (o4 == 0)
        p = s.b;
    else {
        Point2 r = s.b - s.a, q = t.b - t.a;
        Rat u = cross(t.a - s.a, q) / cross(r, q);
        p = lerp(s.a, s.b, u);
    }
    return PointIntersection{p, detail::kind_on(p, s), detail::kind_on(p, t)};
}

inline bool segments_meet(const Seg& s, const Seg& t)
{
    return !std::holds_alternative<NoIntersection>(seg_intersection(s, t));
}

// ---------------------------------------------------------------------------
// Projective plane

struct PointTag {};
struct LineTag {};

/// Homogeneous triple, canonicalized so the first nonzero coordinate is 1.
template <class Tag>
class Homogeneous {
public:
    Homogeneous(Rat a, Rat b, Rat c) : c_{std::move(a), std::move(b), std::move(c)}
    {
        std::size_t lead = 0;
        while (lead < 3 && c_[lead] == 0)
            ++lead;
        if (lead == 3)
            throw std::invalid_argument("homogeneous triple is all zero");
        Rat s = c_[lead];
        for (auto& v : c_)
            v /= s;
    }

    const Rat& operator[](std::size_t i) const { return c_[i]; }
    const std::array<Rat, 3>& coords() const { return c_; }

    friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Homogeneous& a, const Homogeneous& b) { return !(a == b); }
    friend bool operator<(const Homogeneous& a, const Homogeneous& b)
    {
        for (std::size_t i = 0; i < 3; ++i) {
            int c = cmp(a.c_[i], b.c_[i]);
            if (c != 0)
                return c < 0;
        }
        return false;
    }

private:
    std::array<Rat, 3> c_;
};

using HPoint = Homogeneous<PointTag>;
using HLine = Homogeneous<LineTag>;

template <class Tag>
std::string to_string(const Homogeneous<Tag>& h)
{
    return "[" + to_string(h[0]) + " : " + to_string(h[1]) + " : " + to_string(h[2]) + "]";
}

inline HPoint lift(const Point2& p) { return HPoint(p.x, p.y, Rat(1)); }

inline bool is_finite(const HPoint& p) { return p[2] != 0; }

inline Point2 affine(const HPoint& p)
{
    if (!is_finite(p))
        throw std::domain_error("point at infinity has no affine coordinates");
    return {Rat(p[0] / p[2]), Rat(p[1] / p[2])};
}

namespace detail {
inline std::array<Rat, 3> cross3(const std::array<Rat, 3>& u, const std::array<Rat, 3>& v)
{
    return {Rat(u[1] * v[2] - u[2] * v[1]), Rat(u[2] * v[0] - u[0] * v[2]), Rat(u[0] * v[1] - u[1] * v[0])};
}
inline Rat dot3(const std::array<Rat, 3>& u, const std::array<Rat, 3>& v)
{
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}
inline Rat det3(const std::array<Rat, 3>& a, const std::array<Rat, 3>& b, const std::array<Rat, 3>& c)
{
    return dot3(a, cross3(b, c));
}
} // namespace detail

inline bool incident(const HPoint& p, const HLine& l) { return detail::dot3(p.coords(), l.coords()) == 0; }

inline HLine line_join(const HPoint& p, const HPoint& q)
{
    if (p == q)
        throw std::invalid_argument("join of identical points " + to_string(p));
    auto c = detail::cross3(p.coords(), q.coords());
    return HLine(c[0], c[1], c[2]);
}

inline HLine line_join(const Point2& p, const Point2& q) { return line_join(lift(p), lift(q)); }

inline HLine line_of(const Seg& s) { return line_join(s.a, s.b); }

inline HPoint line_meet(const HLine& l, const HLine& m)
{
    if (l == m)
        throw std::invalid_argument("meet of identical lines " + to_string(l));
    auto c = detail::cross3(l.coords(), m.coords());
    return HPoint(c[0], c[1], c[2]);
}

/// Raw concurrency test; repeated lines count as concurrent.
inline bool concurrent_det(const HLine& a, const HLine& b, const HLine& c)
{
    return detail::det3(a.coords(), b.coords(), c.coords()) == 0;
}

inline bool concurrent(const HLine& a, const HLine& b, const HLine& c)
{
    if (a == b || b == c || a == c)
        throw std::invalid_argument("concurrency test needs three distinct lines");
    return concurrent_det(a, b, c);
}

inline bool collinear(const HPoint& a, const HPoint& b, const HPoint& c)
{
    return detail::det3(a.coords(), b.coords(), c.coords()) == 0;
}

/// Standard polarity: the coordinate triple is reinterpreted.
inline HLine dual_point(const HPoint& p) { return HLine(p[0], p[1], p[2]); }
inline HPoint dual_line(const HLine& l) { return HPoint(l[0], l[1], l[2]); }

// ---------------------------------------------------------------------------
// Projective transformations (3x3 rational matrices acting on points).

struct Mat3 {
    std::array<std::array<Rat, 3>, 3> m;

    static Mat3 identity()
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = i == j ? 1 : 0;
        return r;
    }

    std::array<Rat, 3> apply(const std::array<Rat, 3>& v) const
    {
        std::array<Rat, 3> r;
        for (int i = 0; i < 3; ++i)
            r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
        return r;
    }

    Rat det() const { return detail::det3(m[0], m[1], m[2]); }

    Mat3 transpose() const
    {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r.m[i][j] = m[j][i];
        return r;
    }

    Mat3 inverse() const
    {
        Rat d = det();
        if (d == 0)
            throw std::domain_error("singular projective transformation");
        Mat3 r;
        // rows of the inverse are columns of the adjugate
        auto c0 = detail::cross3(m[1], m[2]);
        auto c1 = detail::cross3(m[2], m[0]);
        auto c2 = detail::cross3(m[0], m[1]);
        for (int i = 0; i < 3; ++i) {
            r.m[i][0] = c0[i] / d;
            r.m[i][1] = c1[i] / d;
            r.m[i][2] = c2[i] / d;
        }
        return r;
    }
};

inline HPoint transform(const Mat3& t, const HPoint& p)
{
    auto v = t.apply(p.coords());
    return HPoint(v[0], v[1], v[2]);
}

/// Lines transform by the inverse transpose.
inline HLine transform(const Mat3& t, const HLine& l)
{
    auto v = t.inverse().transpose().apply(l.coords());
    return HLine(v[0], v[1], v[2]);
}

} // namespace tba
