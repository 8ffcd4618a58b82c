#include "tba/tba.hpp"

#include <gtest/gtest.h>

using namespace tba;

namespace {

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1))
        ++n;
    return n;
}

std::string parse_error(const std::string& text)
{
    try {
        parse_tba(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST(TbaFile, EmptyArrangement)
{
    auto text = emit_tba(empty_arrangement(default_corners()));
    EXPECT_EQ(text, "tba 1\nT 0/1 0/1 12/1 0/1 0/1 12/1\nS 0\nB 0\n");
    EXPECT_TRUE(parse_tba(text) == empty_arrangement(default_corners()));
}

TEST(TbaFile, RoundTripGallery)
{
    for (const auto& tag : gallery()) {
        auto arr = generate(tag, 4).arr;
        auto text = emit_tba(arr);
        auto back = parse_tba(text);
        EXPECT_TRUE(back == arr) << to_string(tag);
        EXPECT_EQ(emit_tba(back), text);
    }
}

TEST(TbaFile, CommentsAndBlankLines)
{
    auto arr = parse_tba("# hello\ntba 1\n\nT 0 0 4 0 0 4  # triangle\nS 1\n1 0 0 1\nB 0\n");
    EXPECT_EQ(arr.initial().size(), 1u);
    EXPECT_EQ(arr.corners()[1], pt(4, 0));
}

TEST(TbaFile, ParseErrors)
{
    EXPECT_NE(parse_error("tba 1\nT 0 0 12 0 0 12\nS 1\nB 0\n").find("expected 1 segment line"), std::string::npos);
    EXPECT_NE(parse_error("tba 2\n").find("line 1"), std::string::npos);
    EXPECT_NE(parse_error("tba 1\nT 0 0 12 0 0 12\nS 0\nB 0\nX 1\n").find("unexpected line"), std::string::npos);
    auto e = parse_error("tba 1\nT 0 0 12 0 zero 12\nS 0\nB 0\n");
    EXPECT_NE(e.find("line 2, column"), std::string::npos) << e;
    EXPECT_FALSE(parse_error("").empty());
}

TEST(TbaFile, BuildErrorsPropagate)
{
    EXPECT_THROW(parse_tba("tba 1\nT 0 0 12 0 0 12\nS 1\n1 0 3 3\nB 0\n"), BuildError);
}

TEST(ConfigFile, RoundTrip)
{
    auto q = quadrangle_example();
    auto f = parse_config(emit_config(q));
    EXPECT_TRUE(f.has_primal);
    EXPECT_EQ(f.primal.points, q.points);
    EXPECT_EQ(f.primal.blockers, q.blockers);

    auto d = dualize_config(q);
    auto g = parse_config(emit_config(d));
    EXPECT_TRUE(g.has_lines);
    EXPECT_EQ(g.lines.L, d.L);
    EXPECT_EQ(g.lines.Bl, d.Bl);
    EXPECT_THROW(parse_config("Q [1:2:3]\n"), ParseError);
    EXPECT_THROW(parse_config("P [1:2]\n"), ParseError);
}

TEST(Render, EmptyHasThreeEdges)
{
    auto svg = render_svg(empty_arrangement(default_corners()));
    EXPECT_EQ(count(svg, "<path"), 3u);
    EXPECT_EQ(count(svg, "stroke-dasharray"), 0u);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Render, B3OddCounts)
{
    auto arr = generate(parse_tag("B3{k=1,l=1,m=1}"), 1).arr;
    auto svg = render_svg(arr);
    EXPECT_EQ(count(svg, "class=\"edge\""), 3u);
    EXPECT_EQ(count(svg, "class=\"initial\""), 3u);
    EXPECT_EQ(count(svg, "class=\"blocking\""), 3u);
    EXPECT_EQ(count(svg, "stroke-dasharray"), 3u);
    // edges, then initial, then blocking
    EXPECT_LT(svg.rfind("class=\"edge\""), svg.find("class=\"initial\""));
    EXPECT_LT(svg.rfind("class=\"initial\""), svg.find("class=\"blocking\""));
}

TEST(Render, Deterministic)
{
    auto arr = generate(parse_tag("T{k=2,inners=2/0/0}"), 3).arr;
    EXPECT_EQ(render_svg(arr), render_svg(arr));
    EXPECT_EQ(render_svg(arr), render_svg(parse_tba(emit_tba(arr))));
}

TEST(Fuzz, ZeroIterations)
{
    auto s = fuzz_driver(1, 0);
    EXPECT_EQ(s.generated, 0u);
    EXPECT_EQ(s.round_trips, 0u);
    EXPECT_TRUE(s.failures.empty());
    EXPECT_TRUE(s.pass());
}

TEST(Fuzz, SeedOneFiftyIterations)
{
    auto s = fuzz_driver(1, 50);
    EXPECT_TRUE(s.pass()) << s.text();
    EXPECT_EQ(s.round_trips, 50u);
    EXPECT_EQ(s.mutants_rejected, 50u);
}

TEST(Fuzz, Deterministic)
{
    EXPECT_EQ(fuzz_driver(9, 12).text(), fuzz_driver(9, 12).text());
}
