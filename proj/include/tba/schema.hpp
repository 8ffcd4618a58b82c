#pragma once

// Symbolic description of each type: labelled points along the three directed
// edges, the S and B pairs, and the concurrency groups. Generators place the
// labels; the classifier matches them against an arrangement.

#include <array>
#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tba {

enum class Kind { B0, B1, B2, B3, I1, I2, T };

inline const char* kind_name(Kind k)
{
    static const char* names[] = {"B0", "B1", "B2", "B3", "I1", "I2", "T"};
    return names[static_cast<int>(k)];
}

/// Canonical type tag. Corner fields hold physical corner indices 0..2 (x1..x3).
///   B1: first, n                     B2: first < second, n at first, m at second
///   B3: k, l, m at x1, x2, x3        I1: first = y1, second = y2, k, inner
///   I2: first = y1, k at the lower remaining corner, l at the higher, inner, cross
///   T:  k, inners at x1, x2, x3
struct TypeTag {
    Kind kind = Kind::B0;
    int first = 0, second = 0;
    int n = 0, m = 0, k = 0, l = 0;
    int inner = 0;
    bool cross = true;
    std::array<int, 3> inners{0, 0, 0};

    friend bool operator==(const TypeTag&, const TypeTag&) = default;
    friend auto operator<=>(const TypeTag&, const TypeTag&) = default;
};

inline std::string corner_name(int i) { return "x" + std::to_string(i + 1); }

inline std::string to_string(const TypeTag& t)
{
    auto par = [](int v) { return v % 2 ? "odd" : "even"; };
    auto s = [](int v) { return std::to_string(v); };
    switch (t.kind) {
    case Kind::B0: return "B0";
    case Kind::B1: return "B1{first=" + corner_name(t.first) + ",n=" + s(t.n) + ",parity=" + par(t.n) + "}";
    case Kind::B2:
        return "B2{first=" + corner_name(t.first) + ",second=" + corner_name(t.second) + ",n=" + s(t.n) +
               ",m=" + s(t.m) + "}";
    case Kind::B3:
        return "B3{k=" + s(t.k) + ",l=" + s(t.l) + ",m=" + s(t.m) + ",parity=" + par(t.k) + "}";
    case Kind::I1:
        return "I1{y1=" + corner_name(t.first) + ",y2=" + corner_name(t.second) + ",k=" + s(t.k) +
               ",inner=" + s(t.inner) + "}";
    case Kind::I2:
        return "I2{y1=" + corner_name(t.first) + ",k=" + s(t.k) + ",l=" + s(t.l) + ",inner=" + s(t.inner) +
               ",bprime=" + (t.cross ? "cross" : "straight") + "}";
    case Kind::T:
        return "T{k=" + s(t.k) + ",inners=" + s(t.inners[0]) + "/" + s(t.inners[1]) + "/" + s(t.inners[2]) + "}";
    }
    return "?";
}

/// Throws std::invalid_argument when the parameters break the type's constraints.
inline void check_tag(const TypeTag& t)
{
    auto fail = [&](const std::string& why) { throw std::invalid_argument(to_string(t) + ": " + why); };
    auto corner_ok = [](int c) { return c >= 0 && c < 3; };
    auto inner_ok = [](int v) { return v >= 0 && v % 2 == 0; };
    switch (t.kind) {
    case Kind::B0: break;
    case Kind::B1:
        if (!corner_ok(t.first) || t.n < 1)
            fail("needs a corner and n >= 1");
        break;
    case Kind::B2:
        if (!corner_ok(t.first) || !corner_ok(t.second) || t.first >= t.second)
            fail("needs first < second");
        if (t.n < 2 || t.m < 2 || t.n % 2 || t.m % 2)
            fail("n and m must be even and >= 2");
        break;
    case Kind::B3:
        if (t.k < 1 || t.l < 1 || t.m < 1)
            fail("k, l, m must be >= 1");
        if (t.k % 2 != t.l % 2 || t.l % 2 != t.m % 2)
            fail("k, l, m must share parity");
        break;
    case Kind::I1:
        if (!corner_ok(t.first) || !corner_ok(t.second) || t.first == t.second)
            fail("needs two distinct corners");
        if (t.k < 1 || !inner_ok(t.inner))
            fail("needs k >= 1 and an even inner size");
        break;
    case Kind::I2:
        if (!corner_ok(t.first) || t.k < 1 || t.l < 1 || !inner_ok(t.inner))
            fail("needs k, l >= 1 and an even inner size");
        break;
    case Kind::T:
        if (t.k < 2)
            fail("needs k >= 2");
        for (int v : t.inners)
            if (!inner_ok(v))
                fail("inner sizes must be even");
        break;
    }
}

namespace detail {
inline std::vector<std::string> split_top(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}
} // namespace detail

/// Parses the to_string form. Parity keys are checked against n (or k) when present.
inline TypeTag parse_tag(const std::string& text)
{
    auto bad = [&](const std::string& why) { return std::invalid_argument("bad tag '" + text + "': " + why); };
    std::string head = text.substr(0, text.find('{'));
    TypeTag t;
    bool found = false;
    for (int i = 0; i < 7; ++i)
        if (head == kind_name(static_cast<Kind>(i))) {
            t.kind = static_cast<Kind>(i);
            found = true;
        }
    if (!found)
        throw bad("unknown type");
    std::map<std::string, std::string> kv;
    if (auto open = text.find('{'); open != std::string::npos) {
        auto close = text.rfind('}');
        if (close == std::string::npos || close < open)
            throw bad("unbalanced braces");
        for (const auto& item : detail::split_top(text.substr(open + 1, close - open - 1), ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos)
                throw bad("expected key=value in '" + item + "'");
            kv[item.substr(0, eq)] = item.substr(eq + 1);
        }
    }
    auto take = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end())
            throw bad("missing " + key);
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    auto num = [&](const std::string& key) {
        std::string v = take(key);
        try {
            std::size_t used = 0;
            int r = std::stoi(v, &used);
            if (used != v.size())
                throw bad(key + " is not an integer");
            return r;
        } catch (const std::logic_error&) {
            throw bad(key + " is not an integer");
        }
    };
    auto corner = [&](const std::string& key) {
        std::string v = take(key);
        if (v.size() != 2 || (v[0] != 'x' && v[0] != 'y') || v[1] < '1' || v[1] > '3')
            throw bad(key + " must name a corner x1..x3");
        return v[1] - '1';
    };
    auto parity = [&](int v) {
        if (kv.count("parity")) {
            std::string p = take("parity");
            if (p != (v % 2 ? "odd" : "even"))
                throw bad("parity does not match");
        }
    };
    switch (t.kind) {
    case Kind::B0: break;
    case Kind::B1:
        t.first = corner("first");
        t.n = num("n");
        parity(t.n);
        break;
    case Kind::B2:
        t.first = corner("first");
        t.second = corner("second");
        t.n = num("n");
        t.m = num("m");
        break;
    case Kind::B3:
        t.k = num("k");
        t.l = num("l");
        t.m = num("m");
        parity(t.k);
        break;
    case Kind::I1:
        t.first = corner("y1");
        t.second = corner("y2");
        t.k = num("k");
        t.inner = kv.count("inner") ? num("inner") : 0;
        break;
    case Kind::I2: {
        t.first = corner("y1");
        t.k = num("k");
        t.l = num("l");
        t.inner = kv.count("inner") ? num("inner") : 0;
        std::string b = kv.count("bprime") ? take("bprime") : "cross";
        if (b != "cross" && b != "straight")
            throw bad("bprime must be cross or straight");
        t.cross = b == "cross";
        break;
    }
    case Kind::T: {
        t.k = num("k");
        if (kv.count("inners")) {
            auto parts = detail::split_top(take("inners"), '/');
            if (parts.size() != 3)
                throw bad("inners needs three values a/b/c");
            for (int i = 0; i < 3; ++i) {
                kv["_"] = parts[i];
                t.inners[i] = num("_");
            }
        }
        break;
    }
    }
    if (!kv.empty())
        throw bad("unknown key " + kv.begin()->first);
    check_tag(t);
    return t;
}

using LabelPair = std::pair<std::string, std::string>;

struct Schema {
    std::array<int, 3> y{0, 1, 2};                    // physical corners playing y1, y2, y3
    std::array<std::vector<std::string>, 3> edges;    // interior labels along y1->y2, y2->y3, y3->y1
    std::vector<LabelPair> S, B;
    std::vector<std::vector<LabelPair>> groups;        // each group meets at one interior point
    std::vector<std::pair<std::string, std::array<std::string, 3>>> subtriangles; // inner B1 corners
};

namespace detail {
inline std::string lab(const std::string& base, int i) { return base + std::to_string(i); }

/// base1 .. baseN
inline std::vector<std::string> up(const std::string& base, int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(lab(base, i));
    return out;
}

/// baseN .. base1
inline std::vector<std::string> down(const std::string& base, int n)
{
    std::vector<std::string> out;
    for (int i = n; i >= 1; --i)
        out.push_back(lab(base, i));
    return out;
}

inline void append(std::vector<std::string>& a, const std::vector<std::string>& b) { a.insert(a.end(), b.begin(), b.end()); }

/// Even B1 pattern: chords (v_i, u_i); blocking (v_{2j-1}, u_{2j}), (v_{2j}, u_{2j-1}).
inline void even_pairs(Schema& s, const std::string& v, const std::string& u, int n)
{
    for (int i = 1; i <= n; ++i)
        s.S.push_back({lab(v, i), lab(u, i)});
    for (int j = 1; 2 * j <= n; ++j) {
        s.B.push_back({lab(v, 2 * j - 1), lab(u, 2 * j)});
        s.B.push_back({lab(v, 2 * j), lab(u, 2 * j - 1)});
    }
}

/// X pattern: (u_{2i-1}, v_{2i}), (u_{2i}, v_{2i-1}) in S; (u1, v1) and the
/// shifted pairs (u_{2i}, v_{2i+1}), (u_{2i+1}, v_{2i}) in B.
inline void x_family(Schema& s, const std::string& u, const std::string& v, int k, const LabelPair& transversal)
{
    for (int i = 1; i <= k; ++i) {
        s.S.push_back({lab(u, 2 * i - 1), lab(v, 2 * i)});
        s.S.push_back({lab(u, 2 * i), lab(v, 2 * i - 1)});
        s.groups.push_back({{lab(u, 2 * i - 1), lab(v, 2 * i)}, {lab(u, 2 * i), lab(v, 2 * i - 1)}, transversal});
    }
    s.B.push_back({lab(u, 1), lab(v, 1)});
    for (int i = 1; i < k; ++i) {
        s.B.push_back({lab(u, 2 * i), lab(v, 2 * i + 1)});
        s.B.push_back({lab(u, 2 * i + 1), lab(v, 2 * i)});
    }
}
} // namespace detail

inline Schema schema_b0(std::array<int, 3> y) { return Schema{y, {}, {}, {}, {}, {}}; }

inline Schema schema_b1(std::array<int, 3> y, int n)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    s.edges[0] = up("v", n);
    s.edges[2] = down("u", n);
    for (int i = 1; i <= n; ++i)
        s.S.push_back({lab("v", i), lab("u", i)});
    auto V = [&](int i) { return i == n + 1 ? std::string("y2") : lab("v", i); };
    auto U = [&](int i) { return i == n + 1 ? std::string("y3") : lab("u", i); };
    for (int j = 1; 2 * j - 1 <= n; ++j) {
        s.B.push_back({V(2 * j - 1), U(2 * j)});
        s.B.push_back({V(2 * j), U(2 * j - 1)});
    }
    return s;
}

/// n chords at y1, m chords at y3.
inline Schema schema_b2(std::array<int, 3> y, int n, int m)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    s.edges[0] = up("v", n);
    s.edges[1] = down("w", m);
    s.edges[2] = up("u'", m);
    append(s.edges[2], down("u", n));
    even_pairs(s, "v", "u", n);
    even_pairs(s, "u'", "w", m);
    return s;
}

/// k chords at y1, l at y2, m at y3.
inline Schema schema_b3(std::array<int, 3> y, int k, int l, int m)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    s.edges[0] = up("v", k);
    append(s.edges[0], down("v'", l));
    s.edges[1] = up("w", l);
    append(s.edges[1], down("w'", m));
    s.edges[2] = up("u", m);
    append(s.edges[2], down("u'", k));
    if (k % 2 == 0) {
        even_pairs(s, "v", "u'", k);
        even_pairs(s, "w", "v'", l);
        even_pairs(s, "u", "w'", m);
    } else {
        auto odd = [&](const std::string& a, const std::string& b, int c) {
            for (int i = 1; i <= c; ++i)
                s.S.push_back({lab(a, i), lab(b, i)});
            for (int j = 1; 2 * j < c; ++j) {
                s.B.push_back({lab(a, 2 * j - 1), lab(b, 2 * j)});
                s.B.push_back({lab(a, 2 * j), lab(b, 2 * j - 1)});
            }
        };
        odd("v", "u'", k);
        odd("w", "v'", l);
        odd("u", "w'", m);
        s.B.push_back({lab("v", k), lab("w'", m)});
        s.B.push_back({lab("v'", l), lab("u", m)});
        s.B.push_back({lab("w", l), lab("u'", k)});
    }
    return s;
}

namespace detail {
/// Even B1 of size n in the corner triangle at y1 with apexes a (towards y2) and b (towards y3).
inline void inner_b1(Schema& s, const std::string& prefix, int n, const std::string& apex, const std::string& a,
                     const std::string& b)
{
    even_pairs(s, prefix + "v", prefix + "u", n);
    s.subtriangles.push_back({prefix, {apex, a, b}});
}
} // namespace detail

inline Schema schema_i1(std::array<int, 3> y, int k, int inner)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    s.edges[0] = up("in.v", inner);
    s.edges[0].push_back("z2");
    append(s.edges[0], down("v", 2 * k));
    s.edges[1] = up("u", 2 * k);
    s.edges[2] = {"z3"};
    append(s.edges[2], down("in.u", inner));
    s.S.push_back({"z2", "z3"});
    inner_b1(s, "in.", inner, "y1", "z2", "z3");
    x_family(s, "u", "v", k, {"y2", "z3"});
    s.B.push_back({"y2", "z3"});
    s.B.push_back({"y3", lab("v", 2 * k)});
    s.B.push_back({"z2", lab("u", 2 * k)});
    return s;
}

/// k crossings near y2, l near y3.
inline Schema schema_i2(std::array<int, 3> y, int k, int l, int inner, bool cross)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    s.edges[0] = up("in.v", inner);
    s.edges[0].push_back("z2");
    append(s.edges[0], down("u", 2 * k));
    s.edges[1] = up("v", 2 * k);
    append(s.edges[1], down("w", 2 * l));
    s.edges[2] = up("t", 2 * l);
    s.edges[2].push_back("z3");
    append(s.edges[2], down("in.u", inner));
    s.S.push_back({"z2", "z3"});
    inner_b1(s, "in.", inner, "y1", "z2", "z3");
    x_family(s, "u", "v", k, {"y2", lab("t", 2 * l)});
    x_family(s, "w", "t", l, {"y3", lab("u", 2 * k)});
    s.B.push_back({lab("u", 2 * k), "y3"});
    s.B.push_back({lab("t", 2 * l), "y2"});
    if (cross) {
        s.B.push_back({lab("v", 2 * k), "z3"});
        s.B.push_back({lab("w", 2 * l), "z2"});
    } else {
        s.B.push_back({lab("v", 2 * k), "z2"});
        s.B.push_back({lab("w", 2 * l), "z3"});
    }
    return s;
}

/// inners[i] is the inner size at y_{i+1}.
inline Schema schema_t(std::array<int, 3> y, int k, std::array<int, 3> inners)
{
    using namespace detail;
    Schema s{y, {}, {}, {}, {}, {}};
    const std::string in[3] = {"i1.", "i2.", "i3."};
    const std::string fam[3] = {"u", "v", "w"};
    int K = 2 * k;
    for (int e = 0; e < 3; ++e) {
        s.edges[e] = up(in[e] + "v", inners[e]);
        append(s.edges[e], up(fam[e], K));
        append(s.edges[e], down(in[(e + 1) % 3] + "u", inners[(e + 1) % 3]));
    }
    // family e joins fam[e]_a on edge e with fam[e-1]_{2k+1-a} on edge e-1
    auto member = [&](int e, int a) { return LabelPair{lab(fam[e], a), lab(fam[(e + 2) % 3], K + 1 - a)}; };
    for (int i = 1; i <= k; ++i)
        for (int e = 0; e < 3; ++e)
            s.S.push_back(member(e, 2 * i - 1));
    for (int i = 1; i <= k; ++i)
        for (int e = 0; e < 3; ++e)
            s.B.push_back(member(e, 2 * i));
    for (int e = 0; e < 3; ++e)
        inner_b1(s, in[e], inners[e], "y" + std::to_string(e + 1), lab(fam[e], 1),
                 lab(fam[(e + 2) % 3], K));
    for (int a = 1; a <= K; ++a)
        for (int b = 1; b <= K; ++b) {
            int c = 2 * K + 2 - a - b;
            if (c < 1 || c > K || (a % 2 == 0 && b % 2 == 0 && c % 2 == 0))
                continue;
            s.groups.push_back({member(0, a), member(1, b), member(2, c)});
        }
    return s;
}

inline std::array<int, 3> others(int c)
{
    return {c, c == 0 ? 1 : 0, c == 2 ? 1 : 2};
}

/// Schema and corner ordering realising a canonical tag.
inline Schema schema_for(const TypeTag& t)
{
    check_tag(t);
    switch (t.kind) {
    case Kind::B0: return schema_b0({0, 1, 2});
    case Kind::B1: return schema_b1(others(t.first), t.n);
    case Kind::B2: return schema_b2({t.first, 3 - t.first - t.second, t.second}, t.n, t.m);
    case Kind::B3: return schema_b3({0, 1, 2}, t.k, t.l, t.m);
    case Kind::I1: return schema_i1({t.first, t.second, 3 - t.first - t.second}, t.k, t.inner);
    case Kind::I2: return schema_i2(others(t.first), t.k, t.l, t.inner, t.cross);
    case Kind::T: return schema_t({0, 1, 2}, t.k, t.inners);
    }
    throw std::logic_error("unreachable");
}

} // namespace tba
