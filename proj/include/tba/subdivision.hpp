#pragma once

// Faces of T cut by a subset of S-bar. Every member runs boundary to boundary,
// so cutting by its full line is the same as cutting by the segment.

#include "tba/arrangement.hpp"
#include "tba/polygon.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace tba {

struct Region {
    std::vector<Point2> cycle;   // counterclockwise
    std::vector<int> carrier;    // closure index of the edge cycle[i] -> cycle[i+1]
    std::vector<bool> is_vertex; // incoming and outgoing carriers differ

    std::size_t size() const { return cycle.size(); }

    std::vector<Point2> vertex_cycle() const
    {
        std::vector<Point2> out;
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (is_vertex[i])
                out.push_back(cycle[i]);
        return out;
    }

    /// Carrier of the boundary edge leaving vertex position i (cycle index).
    int carrier_after(std::size_t i) const { return carrier[i % carrier.size()]; }

    ConvexCell cell() const { return {cycle, carrier}; }
    Rat area() const { return Rat(signed_area2(cycle) / 2); }

    bool has_on_boundary(const Point2& p) const
    {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (on_segment(p, Seg(cycle[i], cycle[(i + 1) % cycle.size()])))
                return true;
        return false;
    }
};

inline Region region_from_cell(const ConvexCell& c)
{
    Region r{c.pts, c.carrier, {}};
    std::size_t n = c.size();
    r.is_vertex.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        r.is_vertex[i] = c.carrier[(i + n - 1) % n] != c.carrier[i];
    return r;
}

struct Subdivision {
    std::vector<int> generators; // closure indices, ascending, always containing 0, 1, 2
    std::vector<Point2> vertices;
    std::vector<Region> faces;
    std::map<Point2, std::vector<int>> incidence; // vertex -> generators through it
};

inline std::vector<int> with_edges(std::vector<int> subset)
{
    subset.insert(subset.end(), {0, 1, 2});
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    return subset;
}

inline Subdivision subdivision(const TriangleArrangement& arr, const std::vector<int>& subset)
{
    Subdivision sd;
    sd.generators = with_edges(subset);
    for (int g : sd.generators)
        if (g < 0 || static_cast<std::size_t>(g) >= arr.closure_size())
            throw std::out_of_range("closure index " + std::to_string(g));

    std::vector<ConvexCell> cells{make_cell(arr.polygon(), {0, 1, 2})};
    for (int g : sd.generators) {
        if (g < 3)
            continue;
        HLine line = line_of(arr.closure_member(g));
        std::vector<ConvexCell> next;
        next.reserve(cells.size() + 4);
        for (auto& c : cells) {
            if (auto parts = split_cell(c, line, g)) {
                next.push_back(std::move(parts->first));
                next.push_back(std::move(parts->second));
            } else {
                next.push_back(std::move(c));
            }
        }
        cells = std::move(next);
    }

    for (const auto& c : cells)
        sd.faces.push_back(region_from_cell(c));
    std::sort(sd.faces.begin(), sd.faces.end(),
              [](const Region& a, const Region& b) { return vertex_centroid(a.cycle) < vertex_centroid(b.cycle); });

    sd.incidence = closure_incidences(arr, sd.generators);
    for (const auto& [p, _] : sd.incidence)
        sd.vertices.push_back(p);
    return sd;
}

inline std::vector<Region> minimal_regions(const TriangleArrangement& arr)
{
    return subdivision(arr, all_closure_indices(arr)).faces;
}

/// beta(v) exists and meets the open interior of the region.
inline bool blocks_internally(const TriangleArrangement& arr, const Region& region, const Point2& v)
{
    auto b = beta(arr, v);
    return b && segment_meets_interior(*b, region.cell());
}

inline std::size_t internally_blocked_count(const TriangleArrangement& arr, const Region& region)
{
    std::size_t n = 0;
    for (const auto& v : region.vertex_cycle())
        n += blocks_internally(arr, region, v);
    return n;
}

} // namespace tba
