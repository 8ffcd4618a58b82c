#include "tba/classify.hpp"
#include "tba/subdivision.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace tba;

namespace {

std::array<Point2, 3> tri() { return {pt(0, 0), pt(12, 0), pt(0, 12)}; }

Generated gen(const std::string& tag, std::uint64_t seed = 1) { return generate(parse_tag(tag), seed); }

/// Bounded faces of the planar graph of the chosen S-bar members, by V - E + F = 1.
std::size_t euler_faces(const TriangleArrangement& arr, const std::vector<int>& subset)
{
    std::vector<Seg> segs;
    for (int i : with_edges(subset))
        segs.push_back(arr.closure_member(static_cast<std::size_t>(i)));
    std::set<Point2> V;
    std::size_t E = 0;
    for (const auto& s : segs) {
        std::set<Point2> on{s.a, s.b};
        for (const auto& t : segs) {
            auto hit = seg_intersection(s, t);
            if (auto* p = std::get_if<PointIntersection>(&hit))
                on.insert(p->p);
        }
        V.insert(on.begin(), on.end());
        E += on.size() - 1;
    }
    return E + 1 - V.size();
}

std::optional<Region> region_with(const std::vector<Region>& rs, const std::vector<Point2>& pts)
{
    for (const auto& r : rs) {
        auto vc = r.vertex_cycle();
        std::set<Point2> have(vc.begin(), vc.end());
        if (have.size() == pts.size() && std::all_of(pts.begin(), pts.end(), [&](const Point2& p) { return have.count(p); }))
            return r;
    }
    return std::nullopt;
}

void expect_partition(const TriangleArrangement& arr, const Subdivision& sd)
{
    Rat total = 0;
    for (const auto& f : sd.faces) {
        total += f.area();
        auto c = f.cell();
        for (std::size_t i = 0; i < c.size(); ++i)
            EXPECT_GT(orient(c.at(i), c.at(i + 1), c.at(i + 2)), 0) << "face not strictly convex";
    }
    EXPECT_EQ(total, area2(arr.corners()[0], arr.corners()[1], arr.corners()[2]) / 2);
}

} // namespace

TEST(Build, EmptyArrangement)
{
    auto arr = empty_arrangement(tri());
    EXPECT_EQ(arr.size(), 0u);
    EXPECT_EQ(arr.closure_size(), 3u);
}

TEST(Build, Errors)
{
    auto failure = [](auto&& f) {
        try {
            f();
        } catch (const BuildError& e) {
            return e.failure();
        }
        ADD_FAILURE() << "no BuildError";
        return BuildFailure::CollinearCorners;
    };
    EXPECT_EQ(failure([] { build({pt(0, 0), pt(1, 1), pt(2, 2)}, {}, {}); }), BuildFailure::CollinearCorners);
    EXPECT_EQ(failure([] { build(tri(), {Seg(pt(1, 0), pt(3, 3))}, {}); }), BuildFailure::EndpointOffBoundary);
    EXPECT_EQ(failure([] { build(tri(), {Seg(pt(2, 0), pt(4, 0))}, {}); }), BuildFailure::InteriorTouchesBoundary);
    EXPECT_EQ(failure([] { build(tri(), {Seg(pt(2, 0), pt(0, 2)), Seg(pt(0, 2), pt(2, 0))}, {}); }),
              BuildFailure::DuplicateSegment);
    EXPECT_EQ(failure([] { build(tri(), {Seg(pt(2, 0), pt(0, 2))}, {Seg(pt(2, 0), pt(0, 2))}); }),
              BuildFailure::DuplicateSegment);
    EXPECT_EQ(failure([] { build(tri(), {Seg(pt(0, 0), pt(6, 6))}, {}); }), BuildFailure::InitialEndsAtCorner);
    // blocking segments may end at corners
    EXPECT_NO_THROW(build(tri(), {}, {Seg(pt(0, 0), pt(6, 6))}));
}

TEST(Build, WitnessPoint)
{
    try {
        build(tri(), {Seg(pt(1, 0), pt(3, 3))}, {});
        FAIL();
    } catch (const BuildError& e) {
        EXPECT_EQ(e.witness(), pt(3, 3));
        EXPECT_NE(std::string(e.what()).find("endpoint off boundary"), std::string::npos);
    }
}

TEST(Build, CanonicalStorage)
{
    auto a = build(tri(), {Seg(pt(0, 3), pt(3, 0)), Seg(pt(5, 0), pt(0, 5))}, {});
    auto b = build(tri(), {Seg(pt(0, 5), pt(5, 0)), Seg(pt(3, 0), pt(0, 3))}, {});
    EXPECT_TRUE(a == b);
}

TEST(Subdivision, EdgesOnly)
{
    auto arr = gen("B1{first=x1,n=2}").arr;
    auto sd = subdivision(arr, {});
    EXPECT_EQ(sd.faces.size(), 1u);
    EXPECT_EQ(sd.vertices.size(), 3u);
}

TEST(Subdivision, EulerOracleOnGallery)
{
    for (const char* t : {"B1{first=x1,n=2}", "B1{first=x2,n=3}", "B2{first=x1,second=x3,n=2,m=4}", "B3{k=1,l=1,m=1}",
                          "B3{k=2,l=2,m=2}", "I1{y1=x1,y2=x2,k=1,inner=0}", "I1{y1=x2,y2=x3,k=2,inner=2}",
                          "I2{y1=x1,k=1,l=2,inner=0,bprime=straight}", "T{k=2,inners=0/0/0}", "T{k=3,inners=0/2/0}"}) {
        auto arr = gen(t).arr;
        auto sd = subdivision(arr, all_closure_indices(arr));
        EXPECT_EQ(sd.faces.size(), euler_faces(arr, all_closure_indices(arr))) << t;
        expect_partition(arr, sd);
    }
}

TEST(Subdivision, RandomSubsetsPartition)
{
    auto arr = gen("T{k=2,inners=2/0/0}", 3).arr;
    std::mt19937_64 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> subset;
        for (std::size_t i = 3; i < arr.closure_size(); ++i)
            if (g() & 1)
                subset.push_back(static_cast<int>(i));
        auto sd = subdivision(arr, subset);
        EXPECT_EQ(sd.faces.size(), euler_faces(arr, subset));
        expect_partition(arr, sd);
    }
}

TEST(Subdivision, VertexFlagsAndIncidence)
{
    auto arr = gen("I2{y1=x2,k=1,l=1,inner=2,bprime=cross}", 4).arr;
    auto sd = subdivision(arr, all_closure_indices(arr));
    for (const auto& f : sd.faces) {
        std::size_t n = f.size();
        for (std::size_t i = 0; i < n; ++i) {
            int before = f.carrier[(i + n - 1) % n], after = f.carrier[i];
            EXPECT_EQ(static_cast<bool>(f.is_vertex[i]), before != after);
        }
        // every subdivision vertex on the closed boundary shows up in the cycle
        std::set<Point2> cyc(f.cycle.begin(), f.cycle.end());
        for (const auto& v : sd.vertices)
            EXPECT_EQ(f.has_on_boundary(v), cyc.count(v) == 1);
    }
}

TEST(Regions, EmptyArrangementIsOneRegion)
{
    auto arr = empty_arrangement(tri());
    auto rs = minimal_regions(arr);
    ASSERT_EQ(rs.size(), 1u);
    EXPECT_EQ(rs[0].vertex_cycle().size(), 3u);
    EXPECT_FALSE(beta(arr, pt(0, 0)));
}

TEST(Regions, B3OddHasCentralHexagon)
{
    auto arr = gen("B3{k=1,l=1,m=1}").arr;
    auto rs = minimal_regions(arr);
    std::multiset<std::size_t> sizes;
    for (const auto& r : rs)
        sizes.insert(r.vertex_cycle().size());
    EXPECT_EQ(sizes, (std::multiset<std::size_t>{3, 3, 3, 6}));
    for (const auto& r : rs)
        if (r.vertex_cycle().size() == 6) {
            for (const auto& v : r.vertex_cycle())
                EXPECT_TRUE(blocks_internally(arr, r, v));
        }
}

TEST(Beta, TypeB1AndT)
{
    auto b1 = gen("B1{first=x1,n=2}");
    auto bv = beta(b1.arr, b1.labels.at("v1"));
    ASSERT_TRUE(bv);
    EXPECT_TRUE(same_segment(*bv, Seg(b1.labels.at("v1"), b1.labels.at("u2"))));

    auto t = gen("T{k=2,inners=0/0/0}");
    auto bt = beta(t.arr, t.labels.at("u2"));
    ASSERT_TRUE(bt);
    EXPECT_TRUE(same_segment(*bt, Seg(t.labels.at("u2"), t.labels.at("w3"))));
}

TEST(Beta, AmbiguousAndNonVertex)
{
    auto arr = build(tri(), {Seg(pt(4, 0), pt(0, 4))}, {Seg(pt(4, 0), pt(0, 8)), Seg(pt(4, 0), pt(0, 10))});
    EXPECT_THROW(beta(arr, pt(4, 0)), BetaError);
    EXPECT_THROW(beta(arr, pt(1, 1)), BetaError);
}

TEST(BlocksInternally, B1Quad)
{
    auto g = gen("B1{first=x1,n=2}");
    const auto& L = g.labels;
    auto rs = minimal_regions(g.arr);
    auto quad = region_with(rs, {L.at("v1"), L.at("v2"), L.at("u2"), L.at("u1")});
    ASSERT_TRUE(quad);
    EXPECT_TRUE(blocks_internally(g.arr, *quad, L.at("v1")));
    auto corner = region_with(rs, {L.at("y1"), L.at("v1"), L.at("u1")});
    ASSERT_TRUE(corner);
    EXPECT_FALSE(blocks_internally(g.arr, *corner, L.at("y1")));
}

TEST(Induce, IdentityAndIdempotent)
{
    auto arr = gen("T{k=2,inners=0/2/0}", 2).arr;
    EXPECT_TRUE(induce(arr, arr.corners()) == arr);
    auto g = gen("I1{y1=x1,y2=x2,k=1,inner=2}", 2);
    std::array<Point2, 3> inner{g.labels.at("y1"), g.labels.at("z2"), g.labels.at("z3")};
    auto sub = induce(g.arr, inner);
    EXPECT_TRUE(induce(sub, inner) == sub);
}

TEST(Induce, I1InnerTriangleIsB1)
{
    auto g = gen("I1{y1=x1,y2=x2,k=1,inner=2}", 2);
    auto sub = induce(g.arr, {g.labels.at("y1"), g.labels.at("z2"), g.labels.at("z3")});
    auto c = classify(sub);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->tag.kind, Kind::B1);
    EXPECT_EQ(c->tag.n, 2);

    auto g0 = gen("I1{y1=x1,y2=x2,k=1,inner=0}", 2);
    auto sub0 = induce(g0.arr, {g0.labels.at("y1"), g0.labels.at("z2"), g0.labels.at("z3")});
    EXPECT_EQ(sub0.size(), 0u);
}

TEST(Induce, TCornerTriangleIsB0)
{
    auto g = gen("T{k=2,inners=0/0/0}");
    auto sub = induce(g.arr, {g.labels.at("y1"), g.labels.at("u1"), g.labels.at("w4")});
    EXPECT_EQ(sub.size(), 0u);
    auto c = classify(sub);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->tag.kind, Kind::B0);
}

TEST(Induce, EdgeNotCarried)
{
    auto arr = gen("B1{first=x1,n=1}").arr;
    EXPECT_THROW(induce(arr, {pt(1, 1), pt(5, 1), pt(1, 5)}), std::invalid_argument);
}
