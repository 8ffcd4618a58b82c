#include "tba/kernel.hpp"
#include "tba/polygon.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tba;

namespace {

Point2 P(long x, long y) { return pt(x, y); }

Rat rnd(std::mt19937_64& g) { return rat(static_cast<long>(g() % 41) - 20, 1 + static_cast<long>(g() % 7)); }

} // namespace

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
    EXPECT_EQ(parse_rat("-4"), Rat(-4));
    EXPECT_EQ(parse_rat("+2/4"), Rat(1, 2));
    EXPECT_EQ(to_string(rat(-6, 4)), "-3/2");
    EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rat("1.5"), std::invalid_argument);
    EXPECT_THROW(parse_rat(""), std::invalid_argument);
    EXPECT_THROW(parse_rat("1/-2"), std::invalid_argument);
}

TEST(Kernel, Orientation)
{
    EXPECT_EQ(orient(P(0, 0), P(1, 0), P(0, 1)), 1);
    EXPECT_EQ(orient(P(0, 0), P(0, 1), P(1, 0)), -1);
    EXPECT_EQ(orient(P(0, 0), P(1, 1), P(3, 3)), 0);
}

TEST(Kernel, DegenerateSegmentThrows) { EXPECT_THROW(Seg(P(1, 1), P(1, 1)), std::invalid_argument); }

TEST(Kernel, ProperCrossing)
{
    auto r = seg_intersection(Seg(P(0, 0), P(2, 2)), Seg(P(0, 2), P(2, 0)));
    auto* p = std::get_if<PointIntersection>(&r);
    ASSERT_NE(p, nullptr);
    EXPECT_EQ(p->p, P(1, 1));
}

TEST(Kernel, TouchingAndDisjoint)
{
    auto touch = seg_intersection(Seg(P(0, 0), P(2, 0)), Seg(P(2, 0), P(3, 5)));
    ASSERT_TRUE(std::holds_alternative<PointIntersection>(touch));
    EXPECT_EQ(std::get<PointIntersection>(touch).p, P(2, 0));
    EXPECT_TRUE(std::holds_alternative<NoIntersection>(seg_intersection(Seg(P(0, 0), P(1, 0)), Seg(P(0, 1), P(1, 1)))));
    EXPECT_TRUE(std::holds_alternative<NoIntersection>(seg_intersection(Seg(P(0, 0), P(1, 0)), Seg(P(2, 0), P(3, 0)))));
}

TEST(Kernel, CollinearOverlap)
{
    auto r = seg_intersection(Seg(P(0, 0), P(4, 0)), Seg(P(2, 0), P(6, 0)));
    auto* o = std::get_if<OverlapIntersection>(&r);
    ASSERT_NE(o, nullptr);
    EXPECT_TRUE(same_segment(o->sub, Seg(P(2, 0), P(4, 0))));
}

TEST(Kernel, RelativeInterior)
{
    Seg s(P(0, 0), P(4, 0));
    EXPECT_TRUE(in_relative_interior(P(1, 0), s));
    EXPECT_FALSE(in_relative_interior(P(0, 0), s));
    EXPECT_TRUE(on_segment(P(0, 0), s));
    EXPECT_FALSE(on_segment(P(5, 0), s));
}

TEST(Projective, CanonicalScale)
{
    EXPECT_EQ(HPoint(rat(2), rat(4), rat(6)), HPoint(rat(1), rat(2), rat(3)));
    EXPECT_EQ(HPoint(rat(0), rat(-3), rat(3)), HPoint(rat(0), rat(1), rat(-1)));
    EXPECT_THROW(HPoint(rat(0), rat(0), rat(0)), std::invalid_argument);
}

TEST(Projective, JoinMeet)
{
    HLine x_axis = line_join(P(0, 0), P(1, 0));
    HLine y_axis = line_join(P(0, 0), P(0, 1));
    EXPECT_EQ(line_meet(x_axis, y_axis), lift(P(0, 0)));
    HLine y1 = line_join(P(0, 1), P(1, 1));
    HPoint inf = line_meet(x_axis, y1);
    EXPECT_FALSE(is_finite(inf));
    EXPECT_THROW(affine(inf), std::domain_error);
    EXPECT_THROW(line_meet(x_axis, x_axis), std::invalid_argument);
}

TEST(Projective, Concurrency)
{
    HLine a = line_join(P(0, 0), P(1, 1)), b = line_join(P(0, 2), P(2, 0)), c = line_join(P(1, 0), P(1, 5));
    EXPECT_TRUE(concurrent(a, b, c));
    HLine d = line_join(P(0, 0), P(1, 0));
    EXPECT_FALSE(concurrent(a, b, d));
    EXPECT_THROW(concurrent(a, a, b), std::invalid_argument);
}

TEST(Projective, PolarityPreservesIncidence)
{
    std::mt19937_64 g(42);
    int collinear_seen = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::array<HPoint, 3> p{HPoint(rnd(g), rnd(g), rat(1)), HPoint(rnd(g), rnd(g), rat(1)),
                                HPoint(rnd(g), rnd(g), rat(1))};
        if (trial % 3 == 0) {
            // force a collinear triple
            auto a = affine(p[0]), b = affine(p[1]);
            if (a == b)
                continue;
            p[2] = lift(lerp(a, b, rat(3, 7)));
        }
        bool col = collinear(p[0], p[1], p[2]);
        collinear_seen += col;
        EXPECT_EQ(col, concurrent_det(dual_point(p[0]), dual_point(p[1]), dual_point(p[2])));
        EXPECT_EQ(dual_line(dual_point(p[0])), p[0]);
    }
    EXPECT_GT(collinear_seen, 50);
}

TEST(Projective, TransformKeepsIncidence)
{
    std::mt19937_64 g(7);
    for (int trial = 0; trial < 50; ++trial) {
        Mat3 m;
        for (auto& row : m.m)
            for (auto& v : row)
                v = rnd(g);
        if (m.det() == 0)
            continue;
        Mat3 inv = m.inverse();
        Point2 a{rnd(g), rnd(g)}, b{rnd(g), rnd(g)};
        if (a == b)
            continue;
        HLine l = line_join(a, b);
        HPoint q = lift(lerp(a, b, rat(2, 5)));
        EXPECT_TRUE(incident(transform(m, q), transform(m, l)));
        EXPECT_EQ(transform(inv, transform(m, q)), q);
    }
}

TEST(Polygon, SplitKeepsArea)
{
    ConvexCell sq = make_cell({P(0, 0), P(4, 0), P(4, 4), P(0, 4)}, {0, 1, 2, 3});
    auto parts = split_cell(sq, line_join(P(0, 1), P(4, 3)), 9);
    ASSERT_TRUE(parts);
    EXPECT_EQ(area(parts->first) + area(parts->second), area(sq));
    EXPECT_GT(area(parts->first), 0);
    EXPECT_GT(area(parts->second), 0);
    EXPECT_FALSE(split_cell(sq, line_join(P(0, 0), P(0, 4)), 9));
}

TEST(Polygon, MakeCellOrientsCounterclockwise)
{
    ConvexCell c = make_cell({P(0, 0), P(0, 3), P(3, 0)}, {5, 6, 7});
    EXPECT_GT(signed_area2(c.pts), 0);
    // carrier follows its edge through the reversal
    for (std::size_t i = 0; i < 3; ++i) {
        Seg e(c.pts[i], c.pts[(i + 1) % 3]);
        if (same_segment(e, Seg(P(0, 0), P(0, 3)))) {
            EXPECT_EQ(c.carrier[i], 5);
        }
        if (same_segment(e, Seg(P(0, 3), P(3, 0)))) {
            EXPECT_EQ(c.carrier[i], 6);
        }
    }
}

TEST(Polygon, SegmentMeetsInterior)
{
    ConvexCell sq = make_cell({P(0, 0), P(4, 0), P(4, 4), P(0, 4)}, {0, 1, 2, 3});
    EXPECT_TRUE(segment_meets_interior(Seg(P(0, 0), P(4, 4)), sq));
    EXPECT_FALSE(segment_meets_interior(Seg(P(0, 0), P(4, 0)), sq)); // along an edge
    EXPECT_FALSE(segment_meets_interior(Seg(P(4, 4), P(6, 6)), sq)); // touches a corner
    EXPECT_TRUE(segment_meets_interior(Seg(P(1, 1), P(2, 2)), sq));
}
