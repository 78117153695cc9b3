#include <doctest.h>

#include "support.hpp"
#include "zonorec/json_io.hpp"
#include "zonorec/spinor.hpp"
#include "zonorec/svg.hpp"
#include "zonorec/tropical.hpp"

using namespace zonorec;

namespace {

int count(const std::string& hay, const std::string& needle)
{
    int c = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("tiling json")
{
    ZonogonSpec s({1, 1, 1});
    auto j = to_json(t_min(s));
    CHECK(j["A"] == json::array({1, 1, 1}));
    CHECK(j["rhombi"].size() == 3);
    // directions are 1-based
    for (const auto& r : j["rhombi"]) {
        CHECK(r["dirs"][0].get<int>() >= 1);
        CHECK(r["dirs"][1].get<int>() <= 3);
    }
    std::mt19937_64 rng(1);
    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1, 1}}) {
        ZonogonSpec sa(a);
        for (int trial = 0; trial < 5; ++trial) {
            Tiling t = oracle::random_tiling(sa, rng);
            CHECK(tiling_from_json(json::parse(to_json(t).dump())) == t);
        }
    }
    CHECK_THROWS_AS(tiling_from_json(json::parse(R"({"A":[1,1,1]})")), Error);
    CHECK_THROWS_AS(tiling_from_json(json::parse(R"({"A":[1,1,1],"rhombi":[{"base":[0,0],"dirs":[1,2]}]})")), Error);
    CHECK_THROWS_AS(tiling_from_json(json::parse(R"({"A":[1,1],"rhombi":[]})")), Error);
    try {
        tiling_from_json(json::parse(R"({"A":"x"})"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::BadInput);
    }
}

TEST_CASE("flip path json")
{
    ZonogonSpec s({2, 1, 1, 1});
    std::mt19937_64 rng(2);
    Tiling a = oracle::random_tiling(s, rng), b = oracle::random_tiling(s, rng);
    FlipPath p = connect(a, b);
    auto back = path_from_json(json::parse(to_json(p).dump()));
    CHECK(back.start == p.start);
    CHECK(back.moves == p.moves);
    for (const auto& m : p.moves) CHECK(move_from_json(to_json(m)) == m);
    CHECK_THROWS_AS(move_from_json(json::parse(R"({"base":[0,0,0,0],"dirs":[1,2,3],"dir":"sideways"})")), Error);
}

TEST_CASE("labeling json")
{
    ZonogonSpec s({2, 2, 1});
    std::mt19937_64 rng(3);
    Tiling t = oracle::random_tiling(s, rng);
    auto rat = extend_to_lattice(random_positive_labeling(t, rng), t);
    auto jr = to_json(rat);
    CHECK(labeling_domain(jr) == "rational");
    CHECK(rational_labeling_from_json(json::parse(jr.dump())).values == rat.values);

    TropicalLabeling trop{s, {}};
    for (const auto& v : t.vertices()) trop.values[v] = mpq_class(static_cast<int>(rng() % 11) - 5, 1 + rng() % 2);
    for (auto& [p, v] : trop.values) v.canonicalize();
    auto jt = to_json(trop);
    CHECK(labeling_domain(jt) == "tropical");
    CHECK(tropical_labeling_from_json(json::parse(jt.dump())).values == trop.values);

    Tiling tm = t_min(ZonogonSpec({1, 1, 1, 1}));
    VarSet vars;
    auto sym = apply_schedule(symbolic_labeling(tm, vars), lattice_schedule(tm));
    auto jl = to_json(sym, vars);
    CHECK(labeling_domain(jl) == "laurent");
    VarSet vars2;
    auto back = laurent_labeling_from_json(json::parse(jl.dump()), vars2);
    CHECK(vars2 == vars);
    CHECK(back.values == sym.values);

    CHECK(rational_str(mpq_class(-3, 4)) == "-3/4");
    CHECK(rational_str(mpq_class(5)) == "5");
    CHECK(rational_from_json(json("6/8")) == mpq_class(3, 4));
    CHECK(rational_from_json(json(7)) == 7);
    CHECK_THROWS_AS(rational_from_json(json("1/0")), Error);
    CHECK_THROWS_AS(rational_from_json(json("abc")), Error);
    CHECK_THROWS_AS(labeling_domain(json::parse(R"({"domain":"complex"})")), Error);
}

TEST_CASE("wall and report json")
{
    ZonogonSpec s({2, 2, 2});
    Wall w{1, 1};
    for (const auto& g : all_cutcurves(s, w)) {
        auto j = to_json(w, g);
        CHECK(j["s"] == 2);
        auto [w2, g2] = wall_from_json(json::parse(j.dump()));
        CHECK(w2.s == w.s);
        CHECK(w2.c == w.c);
        CHECK(g2 == g);
    }
    TropicalLabeling zero{s, {}};
    for (const auto& p : s.lattice_points()) zero.values[p] = 0;
    auto rep = to_json(check_propagation(zero, w, all_cutcurves(s, w).front()));
    CHECK(rep["hypothesis_met"] == true);
    CHECK(rep["violations"].empty());
}

TEST_CASE("spin point json")
{
    std::mt19937_64 rng(4);
    for (int n = 3; n <= 5; ++n) {
        auto p = spin_coordinates(random_isotropic(n, n - 1, rng), n);
        auto q = spin_point_from_json(json::parse(to_json(p).dump()));
        CHECK(q.n == p.n);
        CHECK(q.even == p.even);
        CHECK(q.odd == p.odd);
    }
    CHECK_THROWS_AS(spin_point_from_json(json::parse(R"({"n":3,"even":{"001":"1"},"odd":{}})")), Error);
    CHECK_THROWS_AS(spin_point_from_json(json::parse(R"({"n":3,"even":{"0000":"1"},"odd":{}})")), Error);
    CHECK_THROWS_AS(spin_point_from_json(json::parse(R"({"n":3,"even":{"012":"1"},"odd":{}})")), Error);
}

TEST_CASE("svg rendering")
{
    ZonogonSpec s({1, 1, 1});
    Tiling tm = t_min(s);
    auto svg = render_svg(tm);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count(svg, "class=\"rhombus\"") == 3);
    CHECK(count(svg, "class=\"forest-edge\"") == 0);

    auto [top, m] = apply_flip(tm, {0, 1, 0});
    SvgOptions opt;
    opt.forest = true;
    CHECK(count(render_svg(top, opt), "class=\"forest-edge\"") == 1);
    CHECK(count(render_svg(tm, opt), "class=\"forest-edge\"") == 0);

    opt.labels = true;
    auto labelled = render_svg(top, opt);
    CHECK(count(labelled, "<text") == 7);
    CHECK(labelled == render_svg(top, opt));

    // forest edges in the render match the forest
    ZonogonSpec s5({2, 2, 1, 1});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 5; ++trial) {
        Tiling t = oracle::random_tiling(s5, rng);
        SvgOptions f;
        f.forest = true;
        auto out = render_svg(t, f);
        CHECK(count(out, "class=\"rhombus\"") == static_cast<int>(t.rhombi().size()));
        CHECK(count(out, "class=\"forest-edge\"") == static_cast<int>(fundamental_forest(t).edges.size()));
        CHECK(out == render_svg(t, f));
    }
}
