#pragma once

// The (T, S, B) data model: a triangle, proper initial segments, and blocking
// segments, all with endpoints on the triangle boundary.

#include "tba/kernel.hpp"
#include "tba/polygon.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tba {

enum class BuildFailure {
    CollinearCorners,
    EndpointOffBoundary,
    InteriorTouchesBoundary,
    DuplicateSegment,
    InitialEndsAtCorner,
};

inline const char* describe(BuildFailure f)
{
    switch (f) {
    case BuildFailure::CollinearCorners: return "collinear corners";
    case BuildFailure::EndpointOffBoundary: return "endpoint off boundary";
    case BuildFailure::InteriorTouchesBoundary: return "interior touches boundary";
    case BuildFailure::DuplicateSegment: return "duplicate segment";
    case BuildFailure::InitialEndsAtCorner: return "proper initial segment ends at a corner";
    }
    return "?";
}

class BuildError : public std::runtime_error {
public:
    BuildError(BuildFailure f, Point2 witness)
        : std::runtime_error(std::string(describe(f)) + " at " + to_string(witness)), failure_(f),
          witness_(std::move(witness))
    {
    }

    BuildFailure failure() const { return failure_; }
    const Point2& witness() const { return witness_; }

private:
    BuildFailure failure_;
    Point2 witness_;
};

class TriangleArrangement;
TriangleArrangement build(const std::array<Point2, 3>& corners, std::vector<Seg> initial, std::vector<Seg> blocking);

/// Immutable after build. Segments are stored canonically: endpoints in
/// lexicographic order and each list sorted, so equality is structural.
///
/// Initial-closure indices: 0, 1, 2 are the edges x1x2, x2x3, x3x1; proper
/// initial segment i has index i + 3.
class TriangleArrangement {
public:
    const std::array<Point2, 3>& corners() const { return corners_; }
    const std::vector<Seg>& initial() const { return initial_; }
    const std::vector<Seg>& blocking() const { return blocking_; }
    std::size_t size() const { return initial_.size() + blocking_.size(); }

    Seg edge(int i) const { return Seg(corners_[i], corners_[(i + 1) % 3]); }

    /// All of S-bar: the three edges followed by S.
    std::vector<Seg> initial_closure() const
    {
        std::vector<Seg> out{edge(0), edge(1), edge(2)};
        out.insert(out.end(), initial_.begin(), initial_.end());
        return out;
    }
    std::size_t closure_size() const { return initial_.size() + 3; }
    Seg closure_member(std::size_t i) const { return i < 3 ? edge(static_cast<int>(i)) : initial_[i - 3]; }

    bool is_corner(const Point2& p) const { return p == corners_[0] || p == corners_[1] || p == corners_[2]; }

    /// Index of the edge whose relative interior contains p, or -1.
    int edge_interior_of(const Point2& p) const
    {
        for (int i = 0; i < 3; ++i)
            if (in_relative_interior(p, edge(i)))
                return i;
        return -1;
    }

    bool on_boundary(const Point2& p) const
    {
        for (int i = 0; i < 3; ++i)
            if (on_segment(p, edge(i)))
                return true;
        return false;
    }

    std::vector<Point2> polygon() const { return {corners_[0], corners_[1], corners_[2]}; }

    Rat area() const { return Rat(abs(area2(corners_[0], corners_[1], corners_[2])) / 2); }

    friend bool operator==(const TriangleArrangement& a, const TriangleArrangement& b)
    {
        return a.corners_ == b.corners_ && a.initial_ == b.initial_ && a.blocking_ == b.blocking_;
    }

private:
    friend TriangleArrangement build(const std::array<Point2, 3>&, std::vector<Seg>, std::vector<Seg>);
    TriangleArrangement() = default;

    std::array<Point2, 3> corners_;
    std::vector<Seg> initial_;
    std::vector<Seg> blocking_;
};

/// Checks the structural invariants and returns the canonical arrangement.
/// Throws BuildError with a witness point on the first violation.
inline TriangleArrangement build(const std::array<Point2, 3>& corners, std::vector<Seg> initial,
                                 std::vector<Seg> blocking)
{
    if (orient(corners[0], corners[1], corners[2]) == 0)
        throw BuildError(BuildFailure::CollinearCorners, corners[0]);

    TriangleArrangement arr;
    arr.corners_ = corners;

    auto check = [&](std::vector<Seg>& list, bool proper_initial) {
        for (auto& s : list) {
            s = s.canonical();
            for (const Point2* p : {&s.a, &s.b}) {
                if (!arr.on_boundary(*p))
                    throw BuildError(BuildFailure::EndpointOffBoundary, *p);
                if (proper_initial && arr.is_corner(*p))
                    throw BuildError(BuildFailure::InitialEndsAtCorner, *p);
            }
            for (int e = 0; e < 3; ++e)
                if (on_segment(s.a, arr.edge(e)) && on_segment(s.b, arr.edge(e)))
                    throw BuildError(BuildFailure::InteriorTouchesBoundary,
                                     lerp(s.a, s.b, Rat(1, 2)));
        }
        std::sort(list.begin(), list.end());
        for (std::size_t i = 1; i < list.size(); ++i)
            if (list[i] == list[i - 1])
                throw BuildError(BuildFailure::DuplicateSegment, list[i].a);
    };
    check(initial, true);
    check(blocking, false);
    for (const auto& s : initial)
        if (std::binary_search(blocking.begin(), blocking.end(), s))
            throw BuildError(BuildFailure::DuplicateSegment, s.a);

    arr.initial_ = std::move(initial);
    arr.blocking_ = std::move(blocking);
    return arr;
}

inline TriangleArrangement empty_arrangement(const std::array<Point2, 3>& corners) { return build(corners, {}, {}); }

// ---------------------------------------------------------------------------
// Vertices: intersections of pairs of S-bar members.

struct VertexRecord {
    Point2 location;
    std::vector<int> carriers_S; // initial-closure indices, ascending
    std::vector<int> carriers_B; // blocking indices, ascending
};

/// Every point where two members of the given S-bar subset meet.
inline std::map<Point2, std::vector<int>> closure_incidences(const TriangleArrangement& arr,
                                                             const std::vector<int>& members)
{
    std::map<Point2, std::vector<int>> at;
    for (std::size_t i = 0; i < members.size(); ++i) {
        Seg si = arr.closure_member(members[i]);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto hit = seg_intersection(si, arr.closure_member(members[j]));
            if (auto* p = std::get_if<PointIntersection>(&hit)) {
                at[p->p].push_back(members[i]);
                at[p->p].push_back(members[j]);
            }
        }
    }
    for (auto& [p, list] : at) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return at;
}

inline std::vector<int> all_closure_indices(const TriangleArrangement& arr)
{
    std::vector<int> idx(arr.closure_size());
    for (std::size_t i = 0; i < idx.size(); ++i)
        idx[i] = static_cast<int>(i);
    return idx;
}

inline std::vector<int> blocking_through(const TriangleArrangement& arr, const Point2& p)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.blocking().size(); ++i)
        if (on_segment(p, arr.blocking()[i]))
            out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<int> closure_through(const TriangleArrangement& arr, const Point2& p)
{
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.closure_size(); ++i)
        if (on_segment(p, arr.closure_member(i)))
            out.push_back(static_cast<int>(i));
    return out;
}

inline std::vector<VertexRecord> vertices(const TriangleArrangement& arr)
{
    std::vector<VertexRecord> out;
    for (auto& [p, list] : closure_incidences(arr, all_closure_indices(arr)))
        out.push_back({p, list, blocking_through(arr, p)});
    return out;
}

class BetaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index of the unique blocking segment through vertex v, if any.
inline std::optional<int> beta_index(const TriangleArrangement& arr, const Point2& v)
{
    if (closure_through(arr, v).size() < 2)
        throw BetaError("not a vertex: " + to_string(v));
    auto through = blocking_through(arr, v);
    if (through.size() > 1)
        throw BetaError("ambiguous: " + std::to_string(through.size()) + " blocking segments through " + to_string(v));
    if (through.empty())
        return std::nullopt;
    return through.front();
}

/// The unique blocking segment through vertex v, if any.
inline std::optional<Seg> beta(const TriangleArrangement& arr, const Point2& v)
{
    auto i = beta_index(arr, v);
    if (!i)
        return std::nullopt;
    return arr.blocking()[*i];
}

// ---------------------------------------------------------------------------
// Sub-arrangements induced by a triangle whose edges run along S-bar members.

inline std::optional<Seg> clip_to_polygon(const Seg& s, const std::vector<Point2>& poly)
{
    auto iv = clip_interval(s, poly);
    if (!iv || iv->first == iv->second)
        return std::nullopt;
    return Seg(lerp(s.a, s.b, iv->first), lerp(s.a, s.b, iv->second));
}

inline TriangleArrangement induce(const TriangleArrangement& arr, const std::array<Point2, 3>& inner)
{
    for (const auto& c : inner)
        if (!arr.on_boundary(c) && !strictly_inside(c, make_cell(arr.polygon(), {0, 1, 2})))
            throw std::invalid_argument("inner corner " + to_string(c) + " outside the triangle");
    if (orient(inner[0], inner[1], inner[2]) == 0)
        throw std::invalid_argument("inner triangle is degenerate");

    std::array<Seg, 3> inner_edges{Seg(inner[0], inner[1]), Seg(inner[1], inner[2]), Seg(inner[2], inner[0])};
    for (const auto& e : inner_edges) {
        bool carried = false;
        for (std::size_t i = 0; i < arr.closure_size() && !carried; ++i) {
            Seg m = arr.closure_member(i);
            carried = on_segment(e.a, m) && on_segment(e.b, m);
        }
        if (!carried)
            throw std::invalid_argument("inner edge " + to_string(e) + " is not carried by an initial segment");
    }

    std::vector<Point2> poly(inner.begin(), inner.end());
    auto is_inner_edge = [&](const Seg& s) {
        for (const auto& e : inner_edges)
            if (same_segment(s, e))
                return true;
        return false;
    };

    std::vector<Seg> initial, blocking;
    for (std::size_t i = 0; i < arr.closure_size(); ++i)
        if (auto c = clip_to_polygon(arr.closure_member(i), poly); c && !is_inner_edge(*c))
            initial.push_back(*c);
    for (const auto& b : arr.blocking())
        if (auto c = clip_to_polygon(b, poly); c && !is_inner_edge(*c))
            blocking.push_back(*c);
    return build(inner, std::move(initial), std::move(blocking));
}

} // namespace tba
