#pragma once

// Recogniser for triangular arrangements in which every crossing of two S-bar
// members carries a third one: such an arrangement is a hexagonal grid.

#include "tba/arrangement.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tba {

struct HexResult {
    bool ok = false;
    int k = 0;
    std::optional<Point2> witness;
    std::string message;
};

/// Three-pencil grid x = i, y = j, x + y = m (i, j, m in [k]) on (0,0), (k+1,0), (0,k+1).
inline std::vector<Seg> pencil_grid(int k)
{
    long M = k + 1;
    std::vector<Seg> out;
    for (long i = 1; i <= k; ++i) {
        out.push_back(Seg(pt(i, 0), pt(i, M - i)));
        out.push_back(Seg(pt(0, i), pt(M - i, i)));
        out.push_back(Seg(pt(i, 0), pt(0, i)));
    }
    return out;
}

inline HexResult hexagrid_recognize(const std::array<Point2, 3>& corners, const std::vector<Seg>& S)
{
    auto fail = [](const Point2& p, std::string why) { return HexResult{false, 0, p, std::move(why)}; };
    std::optional<TriangleArrangement> built;
    try {
        built = build(corners, S, {});
    } catch (const BuildError& e) {
        return fail(e.witness(), e.what());
    }
    const auto& arr = *built;
    auto inc = closure_incidences(arr, all_closure_indices(arr));

    // stage 1: every crossing carries a third member
    for (const auto& [p, members] : inc) {
        if (arr.is_corner(p)) {
            if (members.size() > 3)
                return fail(p, "too many segments at a corner");
        } else if (members.size() != 3) {
            return fail(p, std::to_string(members.size()) + " segments through a crossing");
        }
    }
    if (arr.initial().empty())
        return {true, 0, std::nullopt, "empty"};

    // stage 2: three families by the corner each segment cuts off
    const auto& init = arr.initial();
    std::vector<int> family(init.size()), index(init.size());
    std::array<std::vector<int>, 3> members;
    for (std::size_t i = 0; i < init.size(); ++i) {
        int ea = arr.edge_interior_of(init[i].a), eb = arr.edge_interior_of(init[i].b);
        int lo = std::min(ea, eb), hi = std::max(ea, eb);
        int corner = (lo == 0 && hi == 2) ? 0 : hi;
        family[i] = corner;
        members[corner].push_back(static_cast<int>(i));
    }
    std::size_t k = members[0].size();
    for (int c = 0; c < 3; ++c)
        if (members[c].size() != k)
            return fail(arr.corners()[c], "family sizes differ");
    for (int c = 0; c < 3; ++c) {
        const Point2& apex = arr.corners()[c];
        Seg out_edge = arr.edge(c);
        auto depth = [&](int i) {
            const Seg& s = init[i];
            const Point2& p = on_segment(s.a, out_edge) ? s.a : s.b;
            return dot(p - apex, out_edge.b - apex);
        };
        auto& fam = members[c];
        std::sort(fam.begin(), fam.end(), [&](int a, int b) { return depth(a) < depth(b); });
        for (std::size_t j = 0; j < fam.size(); ++j)
            index[fam[j]] = static_cast<int>(j) + 1;
        for (std::size_t a = 0; a < fam.size(); ++a)
            for (std::size_t b = a + 1; b < fam.size(); ++b) {
                auto hit = seg_intersection(init[fam[a]], init[fam[b]]);
                if (auto* p = std::get_if<PointIntersection>(&hit))
                    return fail(p->p, "segments of one family cross");
            }
    }

    int K = static_cast<int>(k);
    std::size_t interior = 0;
    for (const auto& [p, ms] : inc) {
        if (arr.on_boundary(p))
            continue;
        ++interior;
        std::array<int, 3> idx{0, 0, 0};
        for (int m : ms)
            idx[family[m - 3]] = index[m - 3];
        if (!idx[0] || !idx[1] || !idx[2] || idx[0] + idx[1] + idx[2] != 2 * K + 2)
            return fail(p, "triple point off the grid pattern");
    }
    std::size_t expected = 0;
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            int c = 2 * K + 2 - a - b;
            if (c < 1 || c > K)
                continue;
            ++expected;
            auto hit = seg_intersection(init[members[0][a - 1]], init[members[1][b - 1]]);
            auto* p = std::get_if<PointIntersection>(&hit);
            if (!p || arr.on_boundary(p->p))
                return fail(p ? p->p : init[members[0][a - 1]].a, "missing triple point");
        }
    if (interior != expected)
        return fail(arr.corners()[0], "wrong number of triple points");
    return {true, K, std::nullopt, "hexagonal grid"};
}

} // namespace tba
