// JSON strings in and out; the Python package decodes them.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zonorec/engine.hpp"
#include "zonorec/forest.hpp"
#include "zonorec/json_io.hpp"
#include "zonorec/spinor.hpp"
#include "zonorec/svg.hpp"
#include "zonorec/tropical.hpp"

namespace py = pybind11;
using namespace zonorec;

namespace {

using Ints = std::vector<int>;

Tiling tiling_in(const std::string& text) { return tiling_from_json(json::parse(text)); }

std::string report_out(const Report& r) { return json{{"ok", r.ok}, {"message", r.message}}.dump(); }

json points_out(const std::set<Point>& ps)
{
    json a = json::array();
    for (const auto& p : ps) a.push_back(p);
    return a;
}

std::string extend(const std::string& tiling, const std::string& labeling, std::uint64_t seed, bool check)
{
    Tiling t = tiling_in(tiling);
    ExtendOptions opt;
    opt.seed = seed;
    opt.check_rate = check ? 1.0 : 0.0;
    if (labeling.empty()) {
        VarSet vars;
        auto lab0 = symbolic_labeling(t, vars);
        return to_json(extend_to_lattice(lab0, t, opt), vars).dump();
    }
    const json lj = json::parse(labeling);
    const std::string domain = labeling_domain(lj);
    if (domain == "rational") return to_json(extend_to_lattice(rational_labeling_from_json(lj), t, opt)).dump();
    if (domain == "tropical") return to_json(extend_to_lattice(tropical_labeling_from_json(lj), t, opt)).dump();
    VarSet vars;
    auto lab0 = laurent_labeling_from_json(lj, vars);
    return to_json(extend_to_lattice(lab0, t, opt), vars).dump();
}

std::string evaluate_path_json(const std::string& path, const std::string& labeling)
{
    const FlipPath p = path_from_json(json::parse(path));
    const json lj = json::parse(labeling);
    const std::string domain = labeling_domain(lj);
    if (domain == "rational") return to_json(evaluate_path(rational_labeling_from_json(lj), p)).dump();
    if (domain == "tropical") return to_json(evaluate_path(tropical_labeling_from_json(lj), p)).dump();
    VarSet vars;
    auto lab0 = laurent_labeling_from_json(lj, vars);
    return to_json(evaluate_path(lab0, p), vars).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Zonogon tilings, cube recurrence and spinor checks";
    m.attr("__version__") = "0.1.0";

    static py::exception<Error> error(m, "ZonorecError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        } catch (const json::exception& e) {
            py::set_error(error, (std::string("bad input: ") + e.what()).c_str());
        }
    });

    m.def("t_min", [](const Ints& a) { return to_json(t_min(ZonogonSpec(a))).dump(); });
    m.def("enumerate_tilings", [](const Ints& a, std::size_t cap) {
        json arr = json::array();
        for (const auto& t : enumerate_tilings(ZonogonSpec(a), cap)) arr.push_back(to_json(t));
        return arr.dump();
    });
    m.def("tiling_through_vertex", [](const Ints& a, const Ints& at, std::uint64_t seed) {
        return to_json(tiling_through_vertex(ZonogonSpec(a), Point(at), seed)).dump();
    });
    m.def("validate_tiling", [](const std::string& t) {
        return report_out(validate_tiling(tiling_in(t)));
    });
    m.def("flippable", [](const std::string& t) {
        auto f = flippable_vertices(tiling_in(t));
        return json{{"up", points_out(f.up)}, {"down", points_out(f.down)}}.dump();
    });
    m.def("flip", [](const std::string& t, const Ints& at) {
        auto [next, move] = apply_flip(tiling_in(t), Point(at));
        return json{{"tiling", to_json(next)}, {"move", to_json(move)}}.dump();
    });
    m.def("forest", [](const std::string& t) {
        auto f = fundamental_forest(tiling_in(t));
        json edges = json::array();
        for (const auto& e : f.edges) edges.push_back({{"base", e.base}, {"dir", e.dir + 1}});
        return json{{"edges", edges}, {"leaves", points_out(f.leaves())}, {"roots", points_out(f.roots())}}.dump();
    });
    m.def("connect", [](const std::string& a, const std::string& b) { return to_json(connect(tiling_in(a), tiling_in(b))).dump(); });
    m.def("connect_through", [](const std::string& a, const std::string& b, const Ints& at) {
        return to_json(connect_through(tiling_in(a), tiling_in(b), Point(at))).dump();
    });
    m.def("replay", [](const std::string& p) { return to_json(replay(path_from_json(json::parse(p)))).dump(); });
    m.def("extend", &extend, py::arg("tiling"), py::arg("labeling") = "", py::arg("seed") = 0, py::arg("check") = false);
    m.def("evaluate_path", &evaluate_path_json);
    m.def("render_svg", [](const std::string& t, bool labels, bool forest, double scale) {
        SvgOptions o;
        o.labels = labels;
        o.forest = forest;
        o.scale = scale;
        return render_svg(tiling_in(t), o);
    });

    m.def("check_confluence", [](const Ints& a, std::size_t trials, std::uint64_t seed) {
        return report_out(check_confluence(ZonogonSpec(a), trials, seed));
    });
    m.def("check_laurent", [](const Ints& a, std::size_t points, std::uint64_t seed) {
        return report_out(check_laurent(t_min(ZonogonSpec(a)), points, seed));
    });
    m.def("check_grassmann", [](int n, std::size_t samples, std::uint64_t seed) {
        auto f = check_grassmann_forward(n, samples, seed);
        return report_out(f.ok ? check_grassmann_converse(n, samples, seed) : f);
    });
    m.def("propagation_trials", [](const Ints& a, int s, int c, std::size_t wanted, std::uint64_t seed) {
        // s is 1-based here, as at the command line
        ZonogonSpec spec(a);
        Wall w{s - 1, c};
        check_wall(spec, w);
        auto r = run_propagation_trials(spec, w, wanted, seed, 200 * wanted);
        return json{{"samples", r.samples},
                    {"hypothesis_met", r.hypothesis_met},
                    {"edges_checked", r.edges_checked},
                    {"violations", r.violations},
                    {"first_failure", r.first_failure}}
            .dump();
    });
    m.def("random_spin_point", [](int n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return to_json(spin_coordinates(random_isotropic(n, n - 1, rng), n)).dump();
    });
    m.def("sign_twist", [](const std::string& p) { return to_json(sign_twist(spin_point_from_json(json::parse(p)))).dump(); });
    m.def("verify_spin_point", [](const std::string& p) {
        auto sp = spin_point_from_json(json::parse(p));
        // the cube relation holds after the sign twist
        auto a = verify_trbi(sp);
        return report_out(a.ok ? verify_trc(sign_twist(sp)) : a);
    });
}
