#pragma once

// Type gallery, seeded mutations and the fuzz driver.

#include "tba/classify.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace tba {

/// The fixed list of tags every generator is exercised on.
inline std::vector<TypeTag> gallery()
{
    std::vector<std::string> src{"B0"};
    for (int n = 1; n <= 4; ++n)
        src.push_back("B1{first=x1,n=" + std::to_string(n) + "}");
    for (int n : {2, 4})
        for (int m : {2, 4})
            src.push_back("B2{first=x1,second=x2,n=" + std::to_string(n) + ",m=" + std::to_string(m) + "}");
    for (const auto& vals : {std::vector<int>{2, 4}, std::vector<int>{1, 3}})
        for (int k : vals)
            for (int l : vals)
                for (int m : vals)
                    src.push_back("B3{k=" + std::to_string(k) + ",l=" + std::to_string(l) + ",m=" + std::to_string(m) + "}");
    for (int k = 1; k <= 2; ++k)
        for (int inner : {0, 2})
            src.push_back("I1{y1=x1,y2=x2,k=" + std::to_string(k) + ",inner=" + std::to_string(inner) + "}");
    for (const char* b : {"cross", "straight"})
        for (const char* p : {"k=1,l=1,inner=0", "k=1,l=2,inner=0", "k=2,l=1,inner=2"})
            src.push_back(std::string("I2{y1=x1,") + p + ",bprime=" + b + "}");
    for (int k = 2; k <= 3; ++k)
        src.push_back("T{k=" + std::to_string(k) + ",inners=0/0/0}");
    src.push_back("T{k=2,inners=2/0/0}");
    std::vector<TypeTag> out;
    for (const auto& s : src)
        out.push_back(parse_tag(s));
    return out;
}

enum class Mutation { DeleteBlocking, DeleteInitial, Perturb, AddBlocking };

inline const char* mutation_name(Mutation m)
{
    switch (m) {
    case Mutation::DeleteBlocking: return "delete-blocking";
    case Mutation::DeleteInitial: return "delete-initial";
    case Mutation::Perturb: return "perturb";
    case Mutation::AddBlocking: return "add-blocking";
    }
    return "?";
}

struct Mutant {
    Mutation kind;
    std::string detail;
    std::optional<TriangleArrangement> arr; // empty when build rejects it
    std::string build_error;
};

/// One random mutation. Endpoints move along their edge by 1/1009 of its length.
inline Mutant mutate(const TriangleArrangement& arr, std::mt19937_64& rng)
{
    std::vector<Seg> S = arr.initial(), B = arr.blocking();
    std::vector<Mutation> kinds;
    if (!B.empty())
        kinds.push_back(Mutation::DeleteBlocking);
    if (!S.empty())
        kinds.push_back(Mutation::DeleteInitial);
    if (!S.empty() || !B.empty())
        kinds.push_back(Mutation::Perturb);
    else
        kinds.push_back(Mutation::AddBlocking);
    auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
    Mutant m{kinds[below(kinds.size())], "", std::nullopt, ""};
    switch (m.kind) {
    case Mutation::DeleteBlocking: {
        auto i = below(B.size());
        m.detail = to_string(B[i]);
        B.erase(B.begin() + static_cast<long>(i));
        break;
    }
    case Mutation::DeleteInitial: {
        auto i = below(S.size());
        m.detail = to_string(S[i]);
        S.erase(S.begin() + static_cast<long>(i));
        break;
    }
    case Mutation::Perturb: {
        auto i = below(S.size() + B.size());
        Seg& s = i < S.size() ? S[i] : B[i - S.size()];
        Point2& p = rng() & 1 ? s.a : s.b;
        Seg e = arr.edge(0);
        for (int k = 0; k < 3; ++k)
            if (on_segment(p, arr.edge(k)))
                e = arr.edge(k);
        Point2 step = Rat(1, 1009) * (e.b - e.a);
        Point2 q = rng() & 1 ? p + step : p - step;
        if (!on_segment(q, e))
            q = q == p + step ? p - step : p + step;
        m.detail = to_string(p) + " -> " + to_string(q);
        p = q;
        break;
    }
    case Mutation::AddBlocking: {
        int e = static_cast<int>(below(3));
        Point2 a = lerp(arr.edge(e).a, arr.edge(e).b, rat(1 + static_cast<long>(below(7)), 9));
        Point2 b = lerp(arr.edge((e + 1) % 3).a, arr.edge((e + 1) % 3).b, rat(1 + static_cast<long>(below(7)), 9));
        B.push_back(Seg(a, b));
        m.detail = to_string(B.back());
        break;
    }
    }
    try {
        m.arr = build(arr.corners(), std::move(S), std::move(B));
    } catch (const BuildError& e) {
        m.build_error = e.what();
    }
    return m;
}

/// A mutant is rejected when it fails to build, fails STRONG validation or has no type.
inline bool rejected(const Mutant& m)
{
    if (!m.arr)
        return true;
    if (!validate(*m.arr, Level::STRONG).pass)
        return true;
    return !classify(*m.arr);
}

struct MutationStats {
    std::size_t mutants = 0;
    std::size_t rejected = 0;
    std::size_t redrawn = 0; // mutants that stayed valid and typed
    std::size_t escaped = 0; // no rejectable mutant found within the redraw budget
};

/// `count` rejectable mutants of arr; a mutant that stays valid is redrawn, up to 20 times.
inline MutationStats mutation_suite(const TriangleArrangement& arr, std::uint64_t seed, std::size_t count)
{
    MutationStats st;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < count; ++i) {
        bool done = false;
        for (int attempt = 0; attempt < 20 && !done; ++attempt) {
            auto m = mutate(arr, rng);
            if (rejected(m)) {
                ++st.rejected;
                done = true;
            } else {
                ++st.redrawn;
            }
        }
        ++st.mutants;
        if (!done)
            ++st.escaped;
    }
    return st;
}

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::size_t iterations = 0;
    std::size_t generated = 0;
    std::size_t round_trips = 0;
    std::size_t mutants_rejected = 0;
    std::size_t redrawn = 0;
    std::vector<std::string> failures; // first few, in order

    bool pass() const
    {
        return generated == iterations && round_trips == iterations && mutants_rejected == iterations;
    }

    std::string text() const
    {
        std::string s = "seed " + std::to_string(seed) + " iterations " + std::to_string(iterations) + "\n";
        s += "generated " + std::to_string(generated) + "/" + std::to_string(iterations) + "\n";
        s += "round-trips " + std::to_string(round_trips) + "/" + std::to_string(iterations) + "\n";
        s += "mutation rejections " + std::to_string(mutants_rejected) + "/" + std::to_string(iterations) + "\n";
        s += "redrawn mutants " + std::to_string(redrawn) + "\n";
        for (const auto& f : failures)
            s += "failure " + f + "\n";
        return s;
    }
};

inline FuzzSummary fuzz_driver(std::uint64_t seed, std::size_t iters)
{
    FuzzSummary sum;
    sum.seed = seed;
    sum.iterations = iters;
    auto tags = gallery();
    std::mt19937_64 rng(seed);
    auto note = [&](const std::string& f) {
        if (sum.failures.size() < 10)
            sum.failures.push_back(f);
    };
    for (std::size_t it = 0; it < iters; ++it) {
        const TypeTag& tag = tags[rng() % tags.size()];
        std::uint64_t gseed = rng();
        std::string who = "#" + std::to_string(it) + " " + to_string(tag) + " seed " + std::to_string(gseed);
        std::optional<Generated> g;
        try {
            g = generate(tag, gseed);
        } catch (const std::exception& e) {
            note(who + ": " + e.what());
            continue;
        }
        if (!validate(g->arr, Level::STRONG).pass) {
            note(who + ": generated instance fails validation");
            continue;
        }
        ++sum.generated;
        auto cls = classify(g->arr);
        if (cls && cls->tag == tag)
            ++sum.round_trips;
        else
            note(who + ": classified as " + (cls ? to_string(cls->tag) : std::string("nothing")));
        auto st = mutation_suite(g->arr, rng(), 1);
        sum.redrawn += st.redrawn;
        if (st.rejected == 1)
            ++sum.mutants_rejected;
        else
            note(who + ": mutant survived");
    }
    return sum;
}

} // namespace tba
