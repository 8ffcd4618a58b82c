#include "tba/fuzz.hpp"
#include "tba/hexagrid.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace tba;

namespace {

Generated gen(const std::string& tag, std::uint64_t seed = 1) { return generate(parse_tag(tag), seed); }

Point2 mid(const Point2& a, const Point2& b) { return lerp(a, b, rat(1, 2)); }

TriangleArrangement affine_image(const TriangleArrangement& arr)
{
    auto f = [](const Point2& p) { return Point2{Rat(2 * p.x + p.y + 3), Rat(p.x / 3 + p.y - 1)}; };
    std::vector<Seg> S, B;
    for (const auto& s : arr.initial())
        S.push_back(Seg(f(s.a), f(s.b)));
    for (const auto& b : arr.blocking())
        B.push_back(Seg(f(b.a), f(b.b)));
    const auto& c = arr.corners();
    return build({f(c[0]), f(c[1]), f(c[2])}, S, B);
}

/// Interior points lying on at least three members of S and B, at least one from S.
std::size_t interior_triple_points(const TriangleArrangement& arr)
{
    std::vector<Seg> all = arr.initial();
    all.insert(all.end(), arr.blocking().begin(), arr.blocking().end());
    std::map<Point2, std::set<std::size_t>> on;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            auto hit = seg_intersection(all[i], all[j]);
            if (auto* p = std::get_if<PointIntersection>(&hit))
                if (!arr.on_boundary(p->p)) {
                    on[p->p].insert(i);
                    on[p->p].insert(j);
                }
        }
    std::size_t n = 0;
    for (const auto& [p, segs] : on)
        n += segs.size() >= 3 && *segs.begin() < arr.initial().size();
    return n;
}

} // namespace

TEST(Generate, GalleryIsStrongAndRoundTrips)
{
    for (const auto& tag : gallery()) {
        for (std::uint64_t seed : {1u, 7u}) {
            auto g = generate(tag, seed);
            EXPECT_TRUE(validate(g.arr, Level::STRONG).pass) << to_string(tag);
            auto c = classify(g.arr);
            ASSERT_TRUE(c) << to_string(tag);
            EXPECT_EQ(c->tag, tag) << to_string(tag) << " came back as " << to_string(c->tag);
            EXPECT_TRUE(c->also.empty()) << to_string(tag);
        }
    }
}

TEST(Generate, TagTextRoundTrip)
{
    for (const auto& tag : gallery())
        EXPECT_EQ(parse_tag(to_string(tag)), tag);
    EXPECT_THROW(parse_tag("B7{n=1}"), std::invalid_argument);
    EXPECT_THROW(check_tag(parse_tag("B2{first=x1,second=x2,n=1,m=2}")), std::invalid_argument);
    EXPECT_THROW(check_tag(parse_tag("T{k=1,inners=0/0/0}")), std::invalid_argument);
}

TEST(Generate, SizeAccounting)
{
    for (int n = 1; n <= 4; ++n) {
        auto arr = gen("B1{first=x2,n=" + std::to_string(n) + "}").arr;
        EXPECT_EQ(arr.initial().size(), std::size_t(n));
        EXPECT_EQ(arr.blocking().size(), std::size_t(n % 2 ? n + 1 : n));
    }
    for (int n : {2, 4})
        for (int m : {2, 4}) {
            auto arr = gen("B2{first=x1,second=x3,n=" + std::to_string(n) + ",m=" + std::to_string(m) + "}").arr;
            EXPECT_EQ(arr.initial().size(), std::size_t(n + m));
            EXPECT_EQ(arr.blocking().size(), std::size_t(n + m));
        }
    for (int k : {2, 3}) {
        auto arr = gen("T{k=" + std::to_string(k) + ",inners=0/0/0}").arr;
        EXPECT_EQ(arr.initial().size(), std::size_t(3 * k));
        EXPECT_EQ(arr.blocking().size(), std::size_t(3 * k));
    }
}

TEST(Generate, B1OddUsesCorners)
{
    auto g = gen("B1{first=x1,n=1}");
    EXPECT_EQ(g.arr.initial().size(), 1u);
    ASSERT_EQ(g.arr.blocking().size(), 2u);
    std::set<Point2> ends;
    for (const auto& b : g.arr.blocking())
        for (const auto& p : {b.a, b.b})
            if (g.arr.is_corner(p))
                ends.insert(p);
    EXPECT_EQ(ends, (std::set<Point2>{g.labels.at("y2"), g.labels.at("y3")}));
}

TEST(Generate, B3OddMainDiagonals)
{
    auto arr = gen("B3{k=1,l=1,m=1}").arr;
    EXPECT_EQ(arr.initial().size(), 3u);
    ASSERT_EQ(arr.blocking().size(), 3u);
    std::optional<Region> hex;
    for (const auto& r : minimal_regions(arr))
        if (r.vertex_cycle().size() == 6)
            hex = r;
    ASSERT_TRUE(hex);
    auto vc = hex->vertex_cycle();
    std::size_t diagonals = 0;
    for (const auto& b : arr.blocking())
        for (std::size_t i = 0; i < 3; ++i)
            diagonals += same_segment(b, Seg(vc[i], vc[i + 3]));
    EXPECT_EQ(diagonals, 3u);
}

TEST(Generate, TTriplePoints)
{
    auto arr = gen("T{k=2,inners=0/0/0}").arr;
    EXPECT_EQ(arr.initial().size(), 6u);
    EXPECT_EQ(arr.blocking().size(), 6u);
    EXPECT_EQ(interior_triple_points(arr), 3u);

    // count the index triples directly
    std::size_t expect = 0;
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                expect += a + b + c == 10 && (a % 2) + (b % 2) + (c % 2) == 2;
    EXPECT_EQ(expect, 3u);
}

TEST(Generate, SeedsGiveDifferentGeometry)
{
    auto a = gen("I1{y1=x1,y2=x2,k=2,inner=2}", 1).arr, b = gen("I1{y1=x1,y2=x2,k=2,inner=2}", 2).arr;
    EXPECT_FALSE(a == b);
    EXPECT_TRUE(gen("I1{y1=x1,y2=x2,k=2,inner=2}", 1).arr == a);
}

TEST(Classify, EmptyIsB0)
{
    auto c = classify(empty_arrangement(default_corners()));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->tag.kind, Kind::B0);
}

TEST(Classify, ReroutedBlockingIsUntyped)
{
    auto g = gen("B1{first=x1,n=2}");
    const auto& L = g.labels;
    std::vector<Seg> B;
    for (const auto& b : g.arr.blocking())
        B.push_back(same_segment(b, Seg(L.at("v1"), L.at("u2"))) ? Seg(L.at("v1"), mid(L.at("u1"), L.at("u2"))) : b);
    auto arr = build(g.arr.corners(), g.arr.initial(), B);
    EXPECT_FALSE(validate(arr, Level::TBA).pass);
    EXPECT_FALSE(classify(arr));
}

TEST(Classify, AffineInvariant)
{
    for (const char* t : {"B1{first=x3,n=3}", "B2{first=x1,second=x2,n=2,m=4}", "B3{k=2,l=4,m=2}",
                          "I1{y1=x2,y2=x1,k=1,inner=2}", "I2{y1=x1,k=2,l=1,inner=2,bprime=cross}",
                          "T{k=2,inners=0/2/0}"}) {
        auto tag = parse_tag(t);
        auto c = classify(affine_image(generate(tag, 5).arr));
        ASSERT_TRUE(c) << t;
        EXPECT_EQ(c->tag, tag) << t;
    }
}

TEST(Classify, LabelingReproducesArrangement)
{
    auto g = gen("I2{y1=x2,k=1,l=2,inner=0,bprime=straight}", 3);
    auto c = classify(g.arr);
    ASSERT_TRUE(c);
    auto s = schema_for(c->tag);
    EXPECT_TRUE(realize(s, g.arr.corners(), c->labeling) == g.arr);
}

TEST(Hexagrid, PencilsRecognized)
{
    for (int k = 1; k <= 4; ++k) {
        long M = k + 1;
        auto r = hexagrid_recognize({pt(0, 0), pt(M, 0), pt(0, M)}, pencil_grid(k));
        EXPECT_TRUE(r.ok) << r.message;
        EXPECT_EQ(r.k, k);
    }
}

TEST(Hexagrid, EmptyIsZero)
{
    auto r = hexagrid_recognize(default_corners(), {});
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.k, 0);
}

TEST(Hexagrid, ShiftedLineRejected)
{
    for (int k = 2; k <= 3; ++k) {
        long M = k + 1;
        auto S = pencil_grid(k);
        for (std::size_t i = 0; i < S.size(); ++i) {
            auto T = S;
            // slide both endpoints along their edges by 1/7 in x
            Point2 a = T[i].a, b = T[i].b;
            Point2 d{rat(1, 7), Rat(0)};
            if (a.y == 0 && b.x == 0) { // x + y = i
                a = a + d;
                b = Point2{b.x, b.y + rat(1, 7)};
            } else if (a.y == 0) { // x = i
                a = a + d;
                b = b + Point2{rat(1, 7), rat(-1, 7)};
            } else { // y = i
                a = Point2{a.x, a.y + rat(1, 7)};
                b = b + Point2{rat(-1, 7), rat(1, 7)};
            }
            T[i] = Seg(a, b);
            auto r = hexagrid_recognize({pt(0, 0), pt(M, 0), pt(0, M)}, T);
            EXPECT_FALSE(r.ok) << "k=" << k << " line " << i;
            EXPECT_TRUE(r.witness) << "k=" << k << " line " << i;
        }
    }
}

TEST(Mutation, SuiteRejectsEverything)
{
    for (const char* t : {"B0", "B1{first=x1,n=2}", "B3{k=1,l=1,m=1}", "T{k=2,inners=0/0/0}"}) {
        auto st = mutation_suite(gen(t).arr, 11, 20);
        EXPECT_EQ(st.mutants, 20u) << t;
        EXPECT_EQ(st.rejected, 20u) << t;
        EXPECT_EQ(st.escaped, 0u) << t;
    }
}
