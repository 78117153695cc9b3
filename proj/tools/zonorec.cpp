#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "zonorec/json_io.hpp"
#include "zonorec/svg.hpp"

using namespace zonorec;

namespace {

json read_json(const std::string& path)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(ErrorKind::BadInput, "cannot read " + path);
        buf << in.rdbuf();
    }
    try {
        return json::parse(buf.str());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::BadInput, path + ": " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::BadInput, "cannot write " + path);
    out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(1) + "\n"); }

Point parse_point(const std::string& s, const ZonogonSpec& spec)
{
    Point p;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            p.push_back(std::stoi(part));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::BadInput, "bad point \"" + s + "\"");
        }
    }
    if (static_cast<int>(p.size()) != spec.n()) throw Error(ErrorKind::BadInput, "point \"" + s + "\" has wrong length");
    if (!spec.contains(p)) throw Error(ErrorKind::BadInput, "point " + point_str(p) + " outside the box");
    return p;
}

Tiling load_tiling(const std::string& path)
{
    Tiling t = tiling_from_json(read_json(path));
    auto rep = validate_tiling(t);
    if (!rep.ok) throw Error(ErrorKind::BadInput, "invalid tiling: " + rep.message);
    return t;
}

int finish(const Report& rep, const std::string& name)
{
    if (rep.ok) {
        std::cout << name << ": pass\n";
        return 0;
    }
    std::cout << name << ": FAIL " << rep.message << "\n";
    return 1;
}

struct TileOpts {
    std::vector<int> A;
    bool min = false, enumerate = false;
    std::string through, cube, side = "bottom";
    std::vector<int> dirs;
    std::size_t cap = 10000;
    std::string out;
};

int cmd_tile(const TileOpts& o, std::uint64_t seed)
{
    ZonogonSpec spec(o.A);
    if (o.enumerate) {
        auto all = enumerate_tilings(spec, o.cap);
        json arr = json::array();
        for (const auto& t : all) arr.push_back(to_json(t));
        write_json(o.out, arr);
        std::cerr << all.size() << " tilings\n";
        return 0;
    }
    Tiling t;
    if (!o.through.empty()) {
        t = tiling_through_vertex(spec, parse_point(o.through, spec), seed);
    } else if (!o.cube.empty()) {
        if (o.dirs.size() != 3) throw Error(ErrorKind::BadInput, "--dirs needs three directions");
        if (o.side != "bottom" && o.side != "top") throw Error(ErrorKind::BadInput, "--side must be bottom or top");
        Cube c{parse_point(o.cube, spec), o.dirs[0] - 1, o.dirs[1] - 1, o.dirs[2] - 1};
        if (c.j < 0 || c.l >= spec.n() || !(c.j < c.k && c.k < c.l))
            throw Error(ErrorKind::BadInput, "--dirs must be increasing and in range");
        t = tiling_with_cube_faces(spec, c, o.side == "top" ? CubeSide::Top : CubeSide::Bottom, seed);
    } else {
        t = t_min(spec);
    }
    write_json(o.out, to_json(t));
    return 0;
}

struct FlipOpts {
    std::string tiling, at, out;
    bool list = false;
};

int cmd_flip(const FlipOpts& o)
{
    Tiling t = load_tiling(o.tiling);
    if (o.list || o.at.empty()) {
        auto f = flippable_vertices(t);
        json j{{"up", json::array()}, {"down", json::array()}};
        for (const auto& p : f.up) j["up"].push_back(p);
        for (const auto& p : f.down) j["down"].push_back(p);
        write_json(o.out, j);
        return 0;
    }
    auto [next, move] = apply_flip(t, parse_point(o.at, t.spec()));
    std::cerr << "flip " << to_json(move).dump() << "\n";
    write_json(o.out, to_json(next));
    return 0;
}

struct RunOpts {
    std::string tiling, labeling, domain, path, out;
    bool check = false;
};

template <class D>
Labeling<D> run_domain(const Labeling<D>& lab0, const RunOpts& o, std::uint64_t seed)
{
    if (!o.path.empty()) {
        FlipPath p = path_from_json(read_json(o.path));
        if (!o.tiling.empty() && !(load_tiling(o.tiling) == p.start))
            throw Error(ErrorKind::BadInput, "path does not start at the given tiling");
        return evaluate_path(lab0, p);
    }
    if (o.tiling.empty()) throw Error(ErrorKind::BadInput, "--tiling is required for a lattice run");
    ExtendOptions opt;
    opt.seed = seed;
    opt.check_rate = o.check ? 1.0 : 0.0;
    return extend_to_lattice(lab0, load_tiling(o.tiling), opt);
}

int cmd_run(const RunOpts& o, std::uint64_t seed)
{
    std::string domain = o.domain;
    json lj;
    if (!o.labeling.empty()) {
        lj = read_json(o.labeling);
        const std::string given = labeling_domain(lj);
        if (!domain.empty() && domain != given)
            throw Error(ErrorKind::BadInput, "labeling is " + given + ", not " + domain);
        domain = given;
    }
    if (domain == "rational") {
        write_json(o.out, to_json(run_domain(rational_labeling_from_json(lj), o, seed)));
    } else if (domain == "tropical") {
        write_json(o.out, to_json(run_domain(tropical_labeling_from_json(lj), o, seed)));
    } else if (domain == "laurent") {
        VarSet vars;
        Labeling<LaurentDomain> lab0;
        if (o.labeling.empty()) {
            if (o.tiling.empty()) throw Error(ErrorKind::BadInput, "symbolic run needs --tiling");
            lab0 = symbolic_labeling(load_tiling(o.tiling), vars);
        } else {
            lab0 = laurent_labeling_from_json(lj, vars);
        }
        write_json(o.out, to_json(run_domain(lab0, o, seed), vars));
    } else {
        throw Error(ErrorKind::BadInput, "need --labeling or --domain laurent");
    }
    return 0;
}

struct VerifyOpts {
    std::vector<int> A;
    std::size_t trials = 20, points = 5, samples = 0;
    int s = 1, c = 1, n = 3;
    std::string cutcurve;
};

int verify_tropical(const VerifyOpts& o, std::uint64_t seed)
{
    ZonogonSpec spec(o.A);
    Wall w{o.s - 1, o.c};
    Cutcurve only;
    if (!o.cutcurve.empty()) {
        auto [w2, g] = wall_from_json(read_json(o.cutcurve));
        w = w2;
        only = g;
    }
    check_wall(spec, w);
    if (!only.empty()) {
        auto rep = validate_cutcurve(spec, w, only);
        if (!rep.ok) throw Error(ErrorKind::BadInput, "cutcurve: " + rep.message);
    }
    const std::size_t wanted = o.samples ? o.samples : 100;
    auto r = run_propagation_trials(spec, w, wanted, seed, 200 * wanted, only);
    std::cout << "samples " << r.samples << ", hypothesis met " << r.hypothesis_met << ", wall edges checked "
              << r.edges_checked << ", violations " << r.violations << (r.used_affine ? " (affine data)" : "")
              << "\n";
    if (!r.first_failure.empty()) return finish(Report::fail(r.first_failure), "tropical");
    if (r.hypothesis_met == 0) {
        std::cout << "tropical: hypothesis not met (" << r.witness << ")\n";
        return 0;
    }
    return finish(Report::pass(), "tropical");
}

int verify_grassmann(const VerifyOpts& o, std::uint64_t seed)
{
    if (o.n < 3 || o.n > 8) throw Error(ErrorKind::BadInput, "--n must be between 3 and 8");
    const std::size_t samples = o.samples ? o.samples : 25;
    auto fwd = check_grassmann_forward(o.n, samples, seed);
    if (!fwd.ok) return finish(fwd, "grassmann");
    std::cout << "bilinear relations: " << samples << " samples, all residuals zero\n";
    return finish(check_grassmann_converse(o.n, samples, seed), "grassmann");
}

struct RenderOpts {
    std::string tiling, out;
    double scale = 40;
    bool labels = false, forest = false;
};

int cmd_render(const RenderOpts& o)
{
    if (o.scale <= 0) throw Error(ErrorKind::BadInput, "--scale must be positive");
    write_text(o.out, render_svg(load_tiling(o.tiling), {o.scale, o.labels, o.forest}));
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cube recurrence on rhombus tilings of zonogons"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for all randomness")->envname("ZONOREC_SEED");

    TileOpts to;
    auto* tile = app.add_subcommand("tile", "Construct tilings");
    tile->add_option("--A", to.A, "Side multiplicities a_1,...,a_n")->delimiter(',')->required();
    auto* mode = tile->add_option_group("mode");
    mode->add_flag("--min", to.min, "Minimal tiling");
    mode->add_option("--through", to.through, "Tiling containing vertex i_1,...,i_n");
    mode->add_option("--cube", to.cube, "Tiling containing the faces of the unit cube at this base");
    mode->add_flag("--enumerate", to.enumerate, "All tilings");
    mode->require_option(0, 1);
    tile->add_option("--dirs", to.dirs, "Cube directions j,k,l")->delimiter(',');
    tile->add_option("--side", to.side, "Cube side: bottom or top");
    tile->add_option("--cap", to.cap, "Enumeration limit");
    tile->add_option("--out", to.out, "Output file");

    FlipOpts fo;
    auto* flip = app.add_subcommand("flip", "Flip a tiling at a vertex");
    flip->add_option("--tiling", fo.tiling, "Tiling JSON")->required();
    flip->add_option("--at", fo.at, "Vertex i_1,...,i_n");
    flip->add_flag("--list", fo.list, "List flippable vertices");
    flip->add_option("--out", fo.out, "Output file");

    RunOpts ro;
    auto* run = app.add_subcommand("run", "Run the cube recurrence");
    run->add_option("--tiling", ro.tiling, "Initial tiling JSON");
    run->add_option("--labeling", ro.labeling, "Initial labeling JSON");
    run->add_option("--domain", ro.domain, "rational, laurent or tropical")
        ->check(CLI::IsMember({"rational", "laurent", "tropical"}));
    run->add_option("--path", ro.path, "Flip path JSON; default is the whole box");
    run->add_flag("--check", ro.check, "Recompute cached values along every path");
    run->add_option("--out", ro.out, "Output file");

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->require_subcommand(1);
    auto* conf = verify->add_subcommand("confluence", "Path independence of rational values");
    conf->add_option("--A", vo.A)->delimiter(',')->required();
    conf->add_option("--trials", vo.trials);
    auto* laur = verify->add_subcommand("laurent", "Symbolic run with exact divisions");
    laur->add_option("--A", vo.A)->delimiter(',')->required();
    laur->add_option("--points", vo.points, "Random evaluation points");
    auto* trop = verify->add_subcommand("tropical", "Propagation of wall inequalities");
    trop->add_option("--A", vo.A)->delimiter(',')->required();
    trop->add_option("--s", vo.s, "Wall direction (1-based)");
    trop->add_option("--c", vo.c, "Wall offset");
    trop->add_option("--cutcurve", vo.cutcurve, "Wall/cutcurve JSON");
    trop->add_option("--samples", vo.samples, "Labelings meeting the hypothesis");
    auto* grass = verify->add_subcommand("grassmann", "Spin coordinates and purity");
    grass->add_option("--n", vo.n)->required();
    grass->add_option("--samples", vo.samples);

    RenderOpts rdo;
    auto* render = app.add_subcommand("render", "Draw a tiling as SVG");
    render->add_option("--tiling", rdo.tiling, "Tiling JSON")->required();
    render->add_option("--out", rdo.out, "Output SVG file");
    render->add_option("--scale", rdo.scale, "Pixels per longest edge");
    render->add_flag("--labels", rdo.labels, "Vertex labels");
    render->add_flag("--forest", rdo.forest, "Highlight the fundamental forest");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*tile) return cmd_tile(to, seed);
        if (*flip) return cmd_flip(fo);
        if (*run) return cmd_run(ro, seed);
        if (*render) return cmd_render(rdo);
        if (*conf) return finish(check_confluence(ZonogonSpec(vo.A), vo.trials, seed), "confluence");
        if (*laur) return finish(check_laurent(t_min(ZonogonSpec(vo.A)), vo.points, seed), "laurent");
        if (*trop) return verify_tropical(vo, seed);
        if (*grass) return verify_grassmann(vo, seed);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    }
    return 0;
}
