#pragma once

// Conditions (i), (ii) and (A), and the parity audit over random sub-subdivisions.

#include "tba/subdivision.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace tba {

enum class Condition { I, II, A, PARITY };

inline const char* tag_of(Condition c)
{
    switch (c) {
    case Condition::I: return "I";
    case Condition::II: return "II";
    case Condition::A: return "A";
    case Condition::PARITY: return "PARITY";
    }
    return "?";
}

struct ViolationReport {
    Condition condition;
    std::vector<Point2> points;
    std::vector<Seg> segments;
    std::string message;
    bool wrapped = false;

    std::string line() const
    {
        std::ostringstream os;
        os << "COND " << tag_of(condition) << " AT ";
        for (std::size_t i = 0; i < points.size(); ++i)
            os << (i ? " " : "") << to_string(points[i]);
        os << " " << message;
        for (const auto& s : segments)
            os << " SEG " << to_string(s);
        if (wrapped)
            os << " (wrapped window)";
        return os.str();
    }
};

inline std::vector<ViolationReport> check_condition_i(const TriangleArrangement& arr)
{
    std::vector<ViolationReport> out;
    for (const auto& [p, members] : closure_incidences(arr, all_closure_indices(arr))) {
        std::vector<Seg> segs;
        for (int m : members)
            segs.push_back(arr.closure_member(m));
        if (members.size() >= 3)
            out.push_back({Condition::I, {p}, segs, std::to_string(members.size()) + " initial segments concurrent"});
        auto through = blocking_through(arr, p);
        bool corner = arr.is_corner(p);
        if (through.size() > 1) {
            std::vector<Seg> bs;
            for (int b : through)
                bs.push_back(arr.blocking()[b]);
            out.push_back({Condition::I, {p}, bs, std::to_string(through.size()) + " blocking segments through vertex"});
        } else if (through.empty() && !corner) {
            out.push_back({Condition::I, {p}, segs, "unblocked vertex"});
        }
    }
    return out;
}

inline std::vector<ViolationReport> check_condition_ii(const TriangleArrangement& arr)
{
    std::vector<ViolationReport> out;
    for (const auto& b : arr.blocking()) {
        std::set<Point2> seen;
        for (std::size_t i = 0; i < arr.closure_size(); ++i) {
            auto hit = seg_intersection(b, arr.closure_member(i));
            if (auto* ov = std::get_if<OverlapIntersection>(&hit)) {
                out.push_back({Condition::II, {ov->sub.a, ov->sub.b}, {b, arr.closure_member(i)},
                               "blocking segment overlaps an initial segment"});
                continue;
            }
            auto* p = std::get_if<PointIntersection>(&hit);
            if (!p || !seen.insert(p->p).second)
                continue;
            auto through = closure_through(arr, p->p);
            if (through.size() != 2)
                out.push_back({Condition::II, {p->p}, {b},
                               "blocking meets " + std::to_string(through.size()) + " initial segments"});
        }
    }
    return out;
}

/// Assumption (A) on every minimal region, both orientations, cyclic windows.
inline std::vector<ViolationReport> check_condition_A(const TriangleArrangement& arr)
{
    std::vector<ViolationReport> out;
    for (const auto& region : minimal_regions(arr)) {
        // vertex positions inside the region cycle
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < region.size(); ++i)
            if (region.is_vertex[i])
                pos.push_back(i);
        std::size_t m = pos.size();
        if (m < 3)
            continue;
        ConvexCell cell = region.cell();
        bool wrapped = m < 5;

        // carrier of the side between vertex slots a and a+dir
        auto side = [&](std::size_t a, int dir) {
            std::size_t from = dir > 0 ? pos[a] : pos[(a + m - 1) % m];
            return arr.closure_member(region.carrier_after(from));
        };
        for (int dir : {+1, -1}) {
            for (std::size_t i = 0; i < m; ++i) {
                auto slot = [&](std::size_t j) { return (i + m + dir * static_cast<long>(j)) % m; };
                const Point2& v3 = region.cycle[pos[slot(2)]];
                auto b = beta(arr, v3);
                if (!b)
                    continue;
                Seg s12 = side(slot(0), dir);
                Seg s45 = side(slot(3), dir);
                if (!segments_meet(s12, *b) || !segment_meets_interior(*b, cell))
                    continue;
                if (concurrent_det(line_of(s12), line_of(*b), line_of(s45)))
                    continue;
                std::vector<Point2> window;
                for (std::size_t j = 0; j < 5; ++j)
                    window.push_back(region.cycle[pos[slot(j)]]);
                out.push_back({Condition::A, window, {s12, *b, s45}, "l(v1v2), beta(v3), l(v4v5) not concurrent",
                               wrapped});
            }
        }
    }
    return out;
}

enum class Level { TBA, STRONG };

struct Verdict {
    bool pass = true;
    std::vector<ViolationReport> reports;

    std::string text() const
    {
        std::string s = pass ? "PASS\n" : "FAIL\n";
        for (const auto& r : reports)
            s += r.line() + "\n";
        return s;
    }
};

inline Verdict validate(const TriangleArrangement& arr, Level level)
{
    Verdict v;
    v.reports = check_condition_i(arr);
    auto ii = check_condition_ii(arr);
    v.reports.insert(v.reports.end(), ii.begin(), ii.end());
    // (A) needs beta to be well defined
    if (level == Level::STRONG && v.reports.empty())
        v.reports = check_condition_A(arr);
    v.pass = v.reports.empty();
    return v;
}

struct ParityReport {
    std::size_t subdivisions = 0;
    std::size_t faces = 0;
    std::vector<ViolationReport> odd;

    bool pass() const { return odd.empty(); }
};

namespace detail {
inline void audit_faces(const TriangleArrangement& arr, const Subdivision& sd, ParityReport& rep)
{
    ++rep.subdivisions;
    for (const auto& f : sd.faces) {
        ++rep.faces;
        std::size_t n = internally_blocked_count(arr, f);
        if (n % 2)
            rep.odd.push_back({Condition::PARITY, f.vertex_cycle(), {},
                               std::to_string(n) + " internally blocked vertices"});
    }
}
} // namespace detail

/// Random subsets keep each proper initial segment with probability 1/2.
/// beta always comes from the full arrangement.
inline ParityReport parity_audit(const TriangleArrangement& arr, std::uint64_t seed, std::size_t samples)
{
    ParityReport rep;
    detail::audit_faces(arr, subdivision(arr, all_closure_indices(arr)), rep);
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::vector<int> subset;
        for (std::size_t i = 3; i < arr.closure_size(); ++i)
            if (rng() & 1)
                subset.push_back(static_cast<int>(i));
        detail::audit_faces(arr, subdivision(arr, subset), rep);
    }
    return rep;
}

} // namespace tba
