#pragma once

// One concrete rational realisation per type. Free choices are drawn from a
// seeded generator; every output is checked at STRONG before it is returned.

#include "tba/schema.hpp"
#include "tba/validator.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace tba {

using Labeling = std::map<std::string, Point2>;

struct Generated {
    TriangleArrangement arr;
    Labeling labels;
};

inline std::array<Point2, 3> default_corners() { return {pt(0, 0), pt(12, 0), pt(0, 12)}; }

inline std::string dump_labeling(const Labeling& lab)
{
    std::string out;
    for (const auto& [name, p] : lab)
        out += name + "=" + to_string(p.x) + "," + to_string(p.y) + "\n";
    return out;
}

/// Arrangement spelled out by a schema under a labelling.
inline TriangleArrangement realize(const Schema& s, const std::array<Point2, 3>& corners, const Labeling& lab)
{
    auto at = [&](const std::string& name) {
        auto it = lab.find(name);
        if (it == lab.end())
            throw std::logic_error("schema label '" + name + "' has no point");
        return it->second;
    };
    std::vector<Seg> S, B;
    for (const auto& [a, b] : s.S)
        S.push_back(Seg(at(a), at(b)));
    for (const auto& [a, b] : s.B)
        B.push_back(Seg(at(a), at(b)));
    return build(corners, std::move(S), std::move(B));
}

namespace detail {

struct Draw {
    std::mt19937_64 g;

    explicit Draw(std::uint64_t seed) : g(seed) {}

    long pick(long lo, long hi) { return lo + static_cast<long>(g() % static_cast<std::uint64_t>(hi - lo + 1)); }

    /// n distinct values strictly between lo and hi, ascending.
    std::vector<Rat> increasing(int n, const Rat& lo, const Rat& hi)
    {
        long D = 2L * n + 4 + pick(0, 3L * n + 6);
        std::set<long> chosen;
        while (static_cast<int>(chosen.size()) < n)
            chosen.insert(pick(1, D - 1));
        std::vector<Rat> out;
        for (long c : chosen)
            out.push_back(lo + (hi - lo) * rat(c, D));
        return out;
    }

    Rat inside(const Rat& lo, const Rat& hi) { return increasing(1, lo, hi).front(); }
};

/// n chords at `apex`: a_i on apex->A, b_i on apex->B, both increasing from the apex.
inline void place_corner(Labeling& lab, const std::string& a, const std::string& b, int n, const Point2& apex,
                         const Point2& A, const Point2& B, const Rat& cap, Draw& d)
{
    auto s = d.increasing(n, Rat(0), cap);
    auto t = d.increasing(n, Rat(0), cap);
    for (int i = 0; i < n; ++i) {
        lab[a + std::to_string(i + 1)] = lerp(apex, A, s[i]);
        lab[b + std::to_string(i + 1)] = lerp(apex, B, t[i]);
    }
}

/// k crossing pairs at corner O. Frame coordinates (x, y) mean O + x(A1 - O) + y(A2 - O);
/// `first` labels live on the A1 axis, `second` on the A2 axis. Pair i crosses at
/// tau_i (dx, dy) on the transversal. Built from the outermost pair inwards.
inline void place_x(Labeling& lab, const std::string& first, const std::string& second, int k, const Point2& O,
                    const Point2& A1, const Point2& A2, const Rat& dx, const Rat& dy, Rat xmax, Rat ymax,
                    const std::optional<Rat>& last_first, Draw& d)
{
    auto frame = [&](const Rat& x, const Rat& y) { return O + x * (A1 - O) + y * (A2 - O); };
    for (int i = k; i >= 1; --i) {
        Rat rho = d.inside(Rat(1, 2), Rat(1));
        Rat tau = rmin(xmax / (4 * dx), ymax / (4 * dy)) * rho;
        Rat px = tau * dx, py = tau * dy;
        Rat xa, xb;
        if (i == k && last_first) {
            xb = *last_first;
            xa = d.inside(2 * px, xb);
        } else {
            auto two = d.increasing(2, 2 * px, xmax);
            xa = two[0];
            xb = two[1];
        }
        auto y_of = [&](const Rat& x) { return Rat(py * x / (x - px)); };
        Rat ya = y_of(xa), yb = y_of(xb);
        lab[first + std::to_string(2 * i - 1)] = frame(xa, 0);
        lab[first + std::to_string(2 * i)] = frame(xb, 0);
        lab[second + std::to_string(2 * i - 1)] = frame(0, yb);
        lab[second + std::to_string(2 * i)] = frame(0, ya);
        xmax = xa;
        ymax = yb;
    }
}

/// Barycentric coordinates of p with respect to the corners.
inline std::array<Rat, 3> barycentric(const std::array<Point2, 3>& c, const Point2& p)
{
    Rat total = area2(c[0], c[1], c[2]);
    return {Rat(area2(p, c[1], c[2]) / total), Rat(area2(c[0], p, c[2]) / total), Rat(area2(c[0], c[1], p) / total)};
}

/// Projective map fixing the triangle: barycentric lambda_i -> w_i lambda_i.
inline Point2 reweight(const std::array<Point2, 3>& c, const std::array<Rat, 3>& w, const Point2& p)
{
    auto l = barycentric(c, p);
    Rat s = 0;
    for (int i = 0; i < 3; ++i) {
        l[i] *= w[i];
        s += l[i];
    }
    Point2 out{Rat(0), Rat(0)};
    for (int i = 0; i < 3; ++i)
        out = out + Rat(l[i] / s) * c[i];
    return out;
}

inline Labeling place(const TypeTag& t, const Schema& s, const std::array<Point2, 3>& corners, Draw& d)
{
    Labeling lab;
    const Point2 Y1 = corners[s.y[0]], Y2 = corners[s.y[1]], Y3 = corners[s.y[2]];
    lab["y1"] = Y1;
    lab["y2"] = Y2;
    lab["y3"] = Y3;
    Rat half(1, 2);
    switch (t.kind) {
    case Kind::B0: break;
    case Kind::B1: place_corner(lab, "v", "u", t.n, Y1, Y2, Y3, Rat(1), d); break;
    case Kind::B2:
        place_corner(lab, "v", "u", t.n, Y1, Y2, Y3, half, d);
        place_corner(lab, "u'", "w", t.m, Y3, Y1, Y2, half, d);
        break;
    case Kind::B3:
        place_corner(lab, "v", "u'", t.k, Y1, Y2, Y3, half, d);
        place_corner(lab, "w", "v'", t.l, Y2, Y3, Y1, half, d);
        place_corner(lab, "u", "w'", t.m, Y3, Y1, Y2, half, d);
        break;
    case Kind::I1: {
        Rat a = d.inside(Rat(1, 4), half), c = d.inside(Rat(1, 4), half);
        Point2 z2 = lerp(Y1, Y2, a), z3 = lerp(Y1, Y3, c);
        lab["z2"] = z2;
        lab["z3"] = z3;
        place_corner(lab, "in.v", "in.u", t.inner, Y1, z2, z3, Rat(1), d);
        place_x(lab, "v", "u", t.k, Y2, Y1, Y3, 1 - c, c, 1 - a, Rat(1), std::nullopt, d);
        break;
    }
    case Kind::I2: {
        Rat a = d.inside(Rat(1, 5), Rat(2, 5)), c = d.inside(Rat(1, 5), Rat(2, 5));
        Point2 z2 = lerp(Y1, Y2, a), z3 = lerp(Y1, Y3, c);
        lab["z2"] = z2;
        lab["z3"] = z3;
        place_corner(lab, "in.v", "in.u", t.inner, Y1, z2, z3, Rat(1), d);
        Rat xu = d.inside(half, Rat(3, 4)) * (1 - a); // u_{2k} in the frame at y2
        Rat xt = d.inside(half, Rat(3, 4)) * (1 - c); // t_{2l} in the frame at y3
        place_x(lab, "u", "v", t.k, Y2, Y1, Y3, xt, 1 - xt, xu, half, xu, d);
        place_x(lab, "t", "w", t.l, Y3, Y1, Y2, xu, 1 - xu, xt, half, xt, d);
        break;
    }
    case Kind::T: {
        long M = 2L * t.k + 1;
        auto frame = [&](long x, long y) { return Y1 + rat(x, M) * (Y2 - Y1) + rat(y, M) * (Y3 - Y1); };
        for (long a = 1; a <= 2 * t.k; ++a) {
            lab["u" + std::to_string(a)] = frame(a, 0);
            lab["v" + std::to_string(a)] = frame(M - a, a);
            lab["w" + std::to_string(a)] = frame(0, M - a);
        }
        std::string K = std::to_string(2 * t.k);
        place_corner(lab, "i1.v", "i1.u", t.inners[s.y[0]], Y1, lab["u1"], lab["w" + K], Rat(1), d);
        place_corner(lab, "i2.v", "i2.u", t.inners[s.y[1]], Y2, lab["v1"], lab["u" + K], Rat(1), d);
        place_corner(lab, "i3.v", "i3.u", t.inners[s.y[2]], Y3, lab["w1"], lab["v" + K], Rat(1), d);
        break;
    }
    }
    std::array<Rat, 3> w{rat(d.pick(1, 5)), rat(d.pick(1, 5)), rat(d.pick(1, 5))};
    for (auto& [name, p] : lab)
        p = reweight(corners, w, p);
    return lab;
}

} // namespace detail

/// Concrete arrangement of the given type. Throws std::invalid_argument for bad
/// parameters and std::logic_error if no draw passes STRONG validation.
inline Generated generate(const TypeTag& tag, std::uint64_t seed, const std::array<Point2, 3>& corners = default_corners())
{
    check_tag(tag);
    if (orient(corners[0], corners[1], corners[2]) <= 0)
        throw std::invalid_argument("corners must be counterclockwise and not collinear");
    Schema s = schema_for(tag);
    detail::Draw d(seed);
    std::string last;
    for (int attempt = 0; attempt < 50; ++attempt) {
        Labeling lab = detail::place(tag, s, corners, d);
        try {
            auto arr = realize(s, corners, lab);
            auto v = validate(arr, Level::STRONG);
            if (v.pass)
                return {std::move(arr), std::move(lab)};
            last = v.reports.front().line();
        } catch (const BuildError& e) {
            last = e.what();
        }
    }
    throw std::logic_error("generator for " + to_string(tag) + " failed validation: " + last);
}

} // namespace tba
