#pragma once

// Type recognition by schema matching over all six corner orderings.

#include "tba/generate.hpp"
#include "tba/schema.hpp"
#include "tba/validator.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace tba {

struct Classification {
    TypeTag tag;
    Labeling labeling;
    std::vector<TypeTag> also; // other distinct tags that matched
};

namespace detail {

struct Candidate {
    TypeTag tag;
    Schema schema;
};

inline std::vector<std::array<int, 3>> orderings()
{
    return {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
}

/// Every (schema, canonical tag) whose segment counts fit |S| and |B|.
inline std::vector<Candidate> candidates(int s, int b)
{
    std::vector<Candidate> out;
    auto each_order = [&](auto&& f) {
        for (const auto& y : orderings())
            f(y);
    };
    if (s == 0 && b == 0)
        out.push_back({TypeTag{}, schema_b0({0, 1, 2})});
    if (s >= 1 && b == s + s % 2)
        each_order([&](const std::array<int, 3>& y) {
            TypeTag t;
            t.kind = Kind::B1;
            t.first = y[0];
            t.n = s;
            out.push_back({t, schema_b1(y, s)});
        });
    if (s == b) {
        for (int n = 2; n <= s - 2; n += 2) {
            int m = s - n;
            if (m % 2)
                continue;
            each_order([&](const std::array<int, 3>& y) {
                TypeTag t;
                t.kind = Kind::B2;
                t.first = std::min(y[0], y[2]);
                t.second = std::max(y[0], y[2]);
                t.n = y[0] < y[2] ? n : m;
                t.m = y[0] < y[2] ? m : n;
                out.push_back({t, schema_b2(y, n, m)});
            });
        }
        for (int k = 1; k <= s; ++k)
            for (int l = 1; k + l < s; ++l) {
                int m = s - k - l;
                if (k % 2 != l % 2 || l % 2 != m % 2)
                    continue;
                each_order([&](const std::array<int, 3>& y) {
                    std::array<int, 3> cnt{};
                    cnt[y[0]] = k;
                    cnt[y[1]] = l;
                    cnt[y[2]] = m;
                    TypeTag t;
                    t.kind = Kind::B3;
                    t.k = cnt[0];
                    t.l = cnt[1];
                    t.m = cnt[2];
                    out.push_back({t, schema_b3(y, k, l, m)});
                });
            }
        for (int k = 2; 3 * k <= s; ++k)
            for (int n1 = 0; 3 * k + n1 <= s; n1 += 2)
                for (int n2 = 0; 3 * k + n1 + n2 <= s; n2 += 2) {
                    int n3 = s - 3 * k - n1 - n2;
                    if (n3 % 2)
                        continue;
                    each_order([&](const std::array<int, 3>& y) {
                        TypeTag t;
                        t.kind = Kind::T;
                        t.k = k;
                        t.inners[y[0]] = n1;
                        t.inners[y[1]] = n2;
                        t.inners[y[2]] = n3;
                        out.push_back({t, schema_t(y, k, {n1, n2, n3})});
                    });
                }
    }
    if (b == s + 1) {
        for (int k = 1; 1 + 2 * k <= s; ++k) {
            int n = s - 1 - 2 * k;
            if (n % 2)
                continue;
            each_order([&](const std::array<int, 3>& y) {
                TypeTag t;
                t.kind = Kind::I1;
                t.first = y[0];
                t.second = y[1];
                t.k = k;
                t.inner = n;
                out.push_back({t, schema_i1(y, k, n)});
            });
        }
        for (int k = 1; 1 + 2 * k + 2 <= s; ++k)
            for (int l = 1; 1 + 2 * k + 2 * l <= s; ++l) {
                int n = s - 1 - 2 * k - 2 * l;
                if (n % 2)
                    continue;
                for (bool cross : {true, false})
                    each_order([&](const std::array<int, 3>& y) {
                        TypeTag t;
                        t.kind = Kind::I2;
                        t.first = y[0];
                        t.k = y[1] < y[2] ? k : l;
                        t.l = y[1] < y[2] ? l : k;
                        t.inner = n;
                        t.cross = cross;
                        out.push_back({t, schema_i2(y, k, l, n, cross)});
                    });
            }
    }
    return out;
}

/// Non-corner segment endpoints on the directed edge from -> to, in order.
inline std::vector<Point2> edge_points(const TriangleArrangement& arr, const Point2& from, const Point2& to)
{
    Seg e(from, to);
    std::set<Point2> pts;
    for (const auto* list : {&arr.initial(), &arr.blocking()})
        for (const auto& s : *list)
            for (const Point2* p : {&s.a, &s.b})
                if (in_relative_interior(*p, e))
                    pts.insert(*p);
    std::vector<Point2> out(pts.begin(), pts.end());
    Point2 d = to - from;
    std::sort(out.begin(), out.end(),
              [&](const Point2& a, const Point2& b) { return dot(a - from, d) < dot(b - from, d); });
    return out;
}

inline std::optional<Labeling> match(const TriangleArrangement& arr, const Schema& s,
                                     const std::vector<Point2>& interior_crossings)
{
    const auto& c = arr.corners();
    Labeling lab;
    for (int j = 0; j < 3; ++j)
        lab["y" + std::to_string(j + 1)] = c[s.y[j]];
    for (int e = 0; e < 3; ++e) {
        auto pts = edge_points(arr, c[s.y[e]], c[s.y[(e + 1) % 3]]);
        if (pts.size() != s.edges[e].size())
            return std::nullopt;
        for (std::size_t i = 0; i < pts.size(); ++i)
            lab[s.edges[e][i]] = pts[i];
    }
    auto seg_of = [&](const LabelPair& p) -> std::optional<Seg> {
        auto a = lab.find(p.first), b = lab.find(p.second);
        if (a == lab.end() || b == lab.end() || a->second == b->second)
            return std::nullopt;
        return Seg(a->second, b->second).canonical();
    };
    auto same_set = [&](const std::vector<LabelPair>& pairs, const std::vector<Seg>& actual) {
        std::vector<Seg> want;
        for (const auto& p : pairs) {
            auto sg = seg_of(p);
            if (!sg)
                return false;
            want.push_back(*sg);
        }
        std::sort(want.begin(), want.end());
        return want == actual;
    };
    if (!same_set(s.S, arr.initial()) || !same_set(s.B, arr.blocking()))
        return std::nullopt;

    std::set<Point2> clause_points;
    for (const auto& g : s.groups) {
        auto s0 = seg_of(g[0]), s1 = seg_of(g[1]);
        auto hit = seg_intersection(*s0, *s1);
        auto* p = std::get_if<PointIntersection>(&hit);
        if (!p || arr.on_boundary(p->p))
            return std::nullopt;
        for (std::size_t i = 2; i < g.size(); ++i)
            if (!on_segment(p->p, *seg_of(g[i])))
                return std::nullopt;
        clause_points.insert(p->p);
    }
    for (const auto& q : interior_crossings)
        if (!clause_points.count(q))
            return std::nullopt;
    return lab;
}

} // namespace detail

/// Type of a triangle blocking arrangement, or nothing. Inputs that fail the
/// TBA check are never typed.
inline std::optional<Classification> classify(const TriangleArrangement& arr)
{
    if (!validate(arr, Level::TBA).pass)
        return std::nullopt;
    std::vector<Point2> crossings;
    for (const auto& [p, members] : closure_incidences(arr, all_closure_indices(arr)))
        if (!arr.on_boundary(p))
            crossings.push_back(p);

    std::optional<Classification> best;
    std::set<TypeTag> seen;
    for (auto& cand : detail::candidates(static_cast<int>(arr.initial().size()),
                                         static_cast<int>(arr.blocking().size()))) {
        if (seen.count(cand.tag))
            continue;
        auto lab = detail::match(arr, cand.schema, crossings);
        if (!lab)
            continue;
        seen.insert(cand.tag);
        if (!best) {
            best = Classification{cand.tag, std::move(*lab), {}};
        } else if (cand.tag < best->tag) {
            best->also.push_back(best->tag);
            best->tag = cand.tag;
            best->labeling = std::move(*lab);
        } else {
            best->also.push_back(cand.tag);
        }
    }
    if (best)
        std::sort(best->also.begin(), best->also.end());
    return best;
}

} // namespace tba
