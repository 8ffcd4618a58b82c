// tba: generate, check, classify and draw triangle blocking arrangements.
// Exit codes: 0 pass, 1 violations found, 2 bad input.

#include "tba/tba.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write " + path);
    out << text;
}

tba::TriangleArrangement load(const std::string& path)
{
    try {
        return tba::parse_tba(slurp(path));
    } catch (const tba::ParseError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const tba::BuildError& e) {
        throw InputError(path + ": " + e.what());
    }
}

tba::ConfigFile load_config(const std::string& path)
{
    try {
        return tba::parse_config(slurp(path));
    } catch (const tba::ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// Line configuration from a file of either kind; point files are dualized.
tba::BlockingConfig lines_of(const tba::ConfigFile& f)
{
    if (f.has_lines)
        return f.lines;
    try {
        return tba::dualize_config(f.primal);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"triangle blocking arrangements"};
    app.require_subcommand(1);
    int code = 0;

    std::string tag_text, out_path, in_path;
    std::uint64_t seed = 1;
    std::size_t samples = 100, iters = 50;
    bool strong = false, labels = false;
    int n = 5, pencil = 0;

    auto* gen = app.add_subcommand("gen", "generate an arrangement of a given type");
    gen->add_option("--type", tag_text, "type tag, e.g. B1{first=x1,n=3}")->required();
    gen->add_option("--seed", seed, "geometry seed");
    gen->add_option("-o,--output", out_path, "output file (default stdout)");
    gen->add_flag("--labels", labels, "print the point labels to stderr");
    gen->callback([&] {
        tba::TypeTag tag;
        try {
            tag = tba::parse_tag(tag_text);
            tba::check_tag(tag);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        auto g = tba::generate(tag, seed);
        spit(out_path, tba::emit_tba(g.arr));
        if (labels)
            std::cerr << tba::dump_labeling(g.labels);
    });

    auto* val = app.add_subcommand("validate", "check conditions (i), (ii) and optionally (A)");
    val->add_option("file", in_path)->required();
    val->add_flag("--strong", strong, "also check assumption (A)");
    val->callback([&] {
        auto v = tba::validate(load(in_path), strong ? tba::Level::STRONG : tba::Level::TBA);
        std::cout << v.text();
        code = v.pass ? 0 : 1;
    });

    auto* cls = app.add_subcommand("classify", "recognise the type");
    cls->add_option("file", in_path)->required();
    cls->callback([&] {
        auto arr = load(in_path);
        auto c = tba::classify(arr);
        if (!c) {
            auto v = tba::validate(arr, tba::Level::TBA);
            std::cout << "UNTYPED\n";
            if (!v.pass)
                std::cout << v.text();
            code = 1;
            return;
        }
        std::cout << tba::to_string(c->tag) << "\n";
        for (const auto& t : c->also)
            std::cout << "also " << tba::to_string(t) << "\n";
        std::cout << tba::dump_labeling(c->labeling);
    });

    auto* reg = app.add_subcommand("regions", "list the minimal regions");
    reg->add_option("file", in_path)->required();
    reg->callback([&] {
        auto arr = load(in_path);
        auto rs = tba::minimal_regions(arr);
        std::cout << "regions " << rs.size() << "\n";
        for (const auto& r : rs) {
            std::cout << "area " << tba::to_string(r.area()) << " internal " << tba::internally_blocked_count(arr, r)
                      << " :";
            for (const auto& p : r.vertex_cycle())
                std::cout << " " << tba::to_string(p);
            std::cout << "\n";
        }
    });

    auto* par = app.add_subcommand("audit-parity", "count internally blocked vertices over random subdivisions");
    par->add_option("file", in_path)->required();
    par->add_option("--samples", samples);
    par->add_option("--seed", seed);
    par->callback([&] {
        auto rep = tba::parity_audit(load(in_path), seed, samples);
        std::cout << "subdivisions " << rep.subdivisions << " faces " << rep.faces << " odd " << rep.odd.size() << "\n";
        for (const auto& r : rep.odd)
            std::cout << r.line() << "\n";
        code = rep.pass() ? 0 : 1;
    });

    auto* ren = app.add_subcommand("render", "draw as SVG");
    ren->add_option("file", in_path)->required();
    ren->add_option("-o,--output", out_path);
    ren->callback([&] { spit(out_path, tba::render_svg(load(in_path))); });

    auto* dual = app.add_subcommand("dual", "blocking points and blocking line configurations");
    dual->require_subcommand(1);
    auto* quad = dual->add_subcommand("quadrangle", "the four-point example");
    quad->add_option("-o,--output", out_path);
    quad->callback([&] {
        auto q = tba::quadrangle_example();
        spit(out_path, tba::emit_config(q));
        if (!out_path.empty())
            std::cout << tba::verify_primal_blocking(q).text();
    });
    auto* ngon = dual->add_subcommand("ngon", "regular n-gon certificate in the group model");
    ngon->add_option("--n", n)->required();
    ngon->callback([&] {
        if (n < 3)
            throw InputError("--n must be at least 3");
        auto r = tba::ngon_certificate(n);
        std::cout << r.text();
        code = r.covered && r.equal ? 0 : 1;
    });
    auto* ver = dual->add_subcommand("verify", "check a point or line configuration");
    ver->add_option("file", in_path)->required();
    ver->callback([&] {
        auto f = load_config(in_path);
        if (f.has_lines) {
            auto probs = tba::check_blocking_config(f.lines);
            for (const auto& p : probs)
                std::cout << p << "\n";
            std::cout << (probs.empty() ? "PASS\n" : "FAIL\n");
            code = probs.empty() ? 0 : 1;
        } else {
            auto r = tba::verify_primal_blocking(f.primal);
            std::cout << r.text();
            code = r.ok() ? 0 : 1;
        }
    });
    auto* pipe = dual->add_subcommand("pipeline", "reduce a line configuration to three arrangements");
    pipe->add_option("file", in_path)->required();
    pipe->callback([&] {
        auto cfg = lines_of(load_config(in_path));
        if (cfg.L.size() < 4)
            throw InputError("pipeline needs at least 4 initial lines");
        auto r = tba::pipeline_classify(cfg);
        std::cout << r.text();
        code = r.ok ? 0 : 1;
    });
    auto* aud = dual->add_subcommand("audit", "check blocking on every minimal region");
    aud->add_option("file", in_path)->required();
    aud->callback([&] {
        auto r = tba::region_blocking_audit(lines_of(load_config(in_path)));
        std::cout << r.text();
        code = r.pass() ? 0 : 1;
    });

    auto* fz = app.add_subcommand("fuzz", "generate, classify and mutate random gallery instances");
    fz->add_option("--seed", seed);
    fz->add_option("--iters", iters);
    fz->callback([&] {
        auto s = tba::fuzz_driver(seed, iters);
        std::cout << s.text();
        code = s.pass() ? 0 : 1;
    });

    auto* hex = app.add_subcommand("hexgrid", "recognise a hexagonal grid");
    hex->add_option("file", in_path);
    hex->add_option("--pencil", pencil, "write the k-th three-pencil grid instead");
    hex->add_option("-o,--output", out_path);
    hex->callback([&] {
        if (pencil > 0) {
            long M = pencil + 1;
            spit(out_path, tba::emit_tba(tba::build({tba::pt(0, 0), tba::pt(M, 0), tba::pt(0, M)},
                                                    tba::pencil_grid(pencil), {})));
            return;
        }
        if (in_path.empty())
            throw InputError("hexgrid needs a file or --pencil");
        auto arr = load(in_path);
        auto r = tba::hexagrid_recognize(arr.corners(), arr.initial());
        std::cout << (r.ok ? "GRID k=" + std::to_string(r.k) : "NOT A GRID") << " " << r.message;
        if (r.witness)
            std::cout << " AT " << tba::to_string(*r.witness);
        std::cout << "\n";
        code = r.ok ? 0 : 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}
