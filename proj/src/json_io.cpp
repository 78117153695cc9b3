#include "zonorec/json_io.hpp"

#include <set>
#include <sstream>

namespace zonorec {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadInput, "json: " + what); }

const json& field(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

std::vector<int> int_list(const json& j, const char* what)
{
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) bad(std::string(what) + " must contain integers");
        out.push_back(x.get<int>());
    }
    return out;
}

ZonogonSpec spec_from(const json& j) { return ZonogonSpec(int_list(field(j, "A"), "A")); }

Point point_from(const json& j, const ZonogonSpec& spec)
{
    Point p = int_list(j, "point");
    if (static_cast<int>(p.size()) != spec.n()) bad("point " + point_str(p) + " has the wrong length");
    return p;
}

int dir_from(const json& j, int n)
{
    if (!j.is_number_integer()) bad("direction must be an integer");
    int d = j.get<int>();
    if (d < 1 || d > n) bad("direction " + std::to_string(d) + " out of range");
    return d - 1;
}

std::string point_key(const Point& p)
{
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s;
}

Point key_point(const std::string& key)
{
    Point p;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t used = 0;
            p.push_back(std::stoi(part, &used));
            if (used != part.size()) bad("bad point key \"" + key + "\"");
        } catch (const std::logic_error&) {
            bad("bad point key \"" + key + "\"");
        }
    }
    return p;
}

json point_json(const Point& p) { return json(p); }

}  // namespace

json to_json(const Tiling& t)
{
    json rh = json::array();
    for (const auto& r : t.rhombi()) rh.push_back({{"base", point_json(r.base)}, {"dirs", {r.j + 1, r.k + 1}}});
    return {{"A", t.spec().a()}, {"rhombi", rh}};
}

Tiling tiling_from_json(const json& j)
{
    ZonogonSpec spec = spec_from(j);
    const json& rh = field(j, "rhombi");
    if (!rh.is_array()) bad("rhombi must be an array");
    std::vector<Rhombus> out;
    for (const auto& r : rh) {
        const json& d = field(r, "dirs");
        if (!d.is_array() || d.size() != 2) bad("dirs must have two entries");
        out.emplace_back(point_from(field(r, "base"), spec), dir_from(d[0], spec.n()), dir_from(d[1], spec.n()));
    }
    return Tiling(spec, std::move(out));
}

json to_json(const FlipMove& m)
{
    return {{"base", point_json(m.base)},
            {"dirs", {m.j + 1, m.k + 1, m.l + 1}},
            {"dir", m.dir == FlipDir::Up ? "up" : "down"}};
}

namespace {

FlipMove move_from(const json& j, const ZonogonSpec* spec)
{
    FlipMove m;
    m.base = spec ? point_from(field(j, "base"), *spec) : int_list(field(j, "base"), "base");
    const int n = static_cast<int>(m.base.size());
    const json& d = field(j, "dirs");
    if (!d.is_array() || d.size() != 3) bad("dirs must have three entries");
    m.j = dir_from(d[0], n);
    m.k = dir_from(d[1], n);
    m.l = dir_from(d[2], n);
    if (!(m.j < m.k && m.k < m.l)) bad("flip directions must be increasing");
    const json& dir = field(j, "dir");
    if (dir == "up") m.dir = FlipDir::Up;
    else if (dir == "down") m.dir = FlipDir::Down;
    else bad("dir must be \"up\" or \"down\"");
    return m;
}

}  // namespace

FlipMove move_from_json(const json& j) { return move_from(j, nullptr); }

json to_json(const FlipPath& p)
{
    json moves = json::array();
    for (const auto& m : p.moves) moves.push_back(to_json(m));
    return {{"start", to_json(p.start)}, {"moves", moves}};
}

FlipPath path_from_json(const json& j)
{
    FlipPath p;
    p.start = tiling_from_json(field(j, "start"));
    const json& moves = field(j, "moves");
    if (!moves.is_array()) bad("moves must be an array");
    for (const auto& m : moves) p.moves.push_back(move_from(m, &p.start.spec()));
    return p;
}

json to_json(const LaurentPoly& p, const VarSet& vars)
{
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json exps = json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) exps[point_key(vars.at(i))] = e[i];
        terms.push_back({{"coeff", c.get_str()}, {"exps", exps}});
    }
    return {{"terms", terms}};
}

LaurentPoly poly_from_json(const json& j, const VarSet& vars)
{
    const json& terms = field(j, "terms");
    if (!terms.is_array()) bad("terms must be an array");
    LaurentPoly p(vars.size());
    for (const auto& t : terms) {
        const json& c = field(t, "coeff");
        mpz_class coeff;
        if (c.is_number_integer()) coeff = c.get<long>();
        else if (!c.is_string() || coeff.set_str(c.get<std::string>(), 10) != 0) bad("coeff must be a decimal string");
        Exponents e(vars.size(), 0);
        const json& exps = field(t, "exps");
        if (!exps.is_object()) bad("exps must be an object");
        for (const auto& [key, val] : exps.items()) {
            int i = vars.index(key_point(key));
            if (i < 0) bad("unknown variable \"" + key + "\"");
            if (!val.is_number_integer()) bad("exponents must be integers");
            e[i] += val.get<int>();
        }
        p.add_term(e, coeff);
    }
    return p;
}

std::string rational_str(const mpq_class& q)
{
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_str();
}

mpq_class rational_from_json(const json& j)
{
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) bad("rational must be an integer or a \"p/q\" string");
    mpq_class q;
    if (q.set_str(j.get<std::string>(), 10) != 0 || q.get_den() == 0) bad("bad rational \"" + j.get<std::string>() + "\"");
    q.canonicalize();
    return q;
}

namespace {

template <class D, class F>
json labeling_json(const Labeling<D>& lab, F&& value)
{
    json vals = json::array();
    for (const auto& [p, v] : lab.values) vals.push_back({{"vertex", point_json(p)}, {"value", value(v)}});
    return {{"A", lab.spec.a()}, {"domain", D::name}, {"values", vals}};
}

template <class D, class F>
Labeling<D> labeling_from(const json& j, F&& value)
{
    const std::string dom = labeling_domain(j);
    if (dom != D::name) bad("expected a " + std::string(D::name) + " labeling, got " + dom);
    Labeling<D> lab{spec_from(j), {}};
    const json& vals = field(j, "values");
    if (!vals.is_array()) bad("values must be an array");
    for (const auto& e : vals) {
        Point p = point_from(field(e, "vertex"), lab.spec);
        if (!lab.spec.contains(p)) bad("vertex " + point_str(p) + " outside the box");
        if (!lab.values.emplace(p, value(field(e, "value"))).second) bad("duplicate vertex " + point_str(p));
    }
    return lab;
}

}  // namespace

json to_json(const Labeling<RationalDomain>& lab)
{
    return labeling_json(lab, [](const mpq_class& q) { return json(rational_str(q)); });
}

json to_json(const Labeling<TropicalDomain>& lab)
{
    return labeling_json(lab, [](const mpq_class& q) {
        if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
        return json(rational_str(q));
    });
}

json to_json(const Labeling<LaurentDomain>& lab, const VarSet& vars)
{
    json out = labeling_json(lab, [&](const LaurentPoly& p) { return to_json(p, vars); });
    json vs = json::array();
    for (const auto& p : vars.points()) vs.push_back(point_json(p));
    out["variables"] = vs;
    return out;
}

std::string labeling_domain(const json& j)
{
    const json& d = field(j, "domain");
    if (!d.is_string()) bad("domain must be a string");
    auto s = d.get<std::string>();
    if (s != "rational" && s != "laurent" && s != "tropical") bad("unknown domain \"" + s + "\"");
    return s;
}

Labeling<RationalDomain> rational_labeling_from_json(const json& j)
{
    return labeling_from<RationalDomain>(j, rational_from_json);
}

Labeling<TropicalDomain> tropical_labeling_from_json(const json& j)
{
    return labeling_from<TropicalDomain>(j, rational_from_json);
}

Labeling<LaurentDomain> laurent_labeling_from_json(const json& j, VarSet& vars)
{
    if (vars.size() == 0) {
        std::vector<Point> pts;
        if (j.contains("variables")) {
            for (const auto& p : j.at("variables")) pts.push_back(int_list(p, "variable"));
        } else {
            std::set<Point> seen;
            for (const auto& e : field(j, "values"))
                for (const auto& t : field(field(e, "value"), "terms"))
                    for (const auto& [key, val] : field(t, "exps").items()) seen.insert(key_point(key));
            pts.assign(seen.begin(), seen.end());
        }
        vars = VarSet(pts);
    }
    return labeling_from<LaurentDomain>(j, [&](const json& v) { return poly_from_json(v, vars); });
}

json to_json(const Wall& w, const Cutcurve& g)
{
    json pts = json::array();
    for (const auto& p : g) pts.push_back(point_json(p));
    return {{"s", w.s + 1}, {"c", w.c}, {"cutcurve", pts}};
}

std::pair<Wall, Cutcurve> wall_from_json(const json& j)
{
    Wall w;
    const json& s = field(j, "s");
    const json& c = field(j, "c");
    if (!s.is_number_integer() || !c.is_number_integer()) bad("s and c must be integers");
    w.s = s.get<int>() - 1;
    w.c = c.get<int>();
    Cutcurve g;
    if (j.contains("cutcurve"))
        for (const auto& p : j.at("cutcurve")) g.push_back(int_list(p, "cutcurve point"));
    return {w, g};
}

json to_json(const PropagationReport& r)
{
    json viol = json::array();
    for (const auto& e : r.violations) viol.push_back({{"base", point_json(e.base)}, {"dir", e.dir + 1}});
    return {{"recurrence_ok", r.recurrence_ok},
            {"hypothesis_met", r.hypothesis_met},
            {"conclusion_ok", r.conclusion_ok},
            {"edges_checked", r.edges_checked},
            {"violations", viol},
            {"message", r.message}};
}

json to_json(const SpinPoint& p)
{
    json even = json::object(), odd = json::object();
    for (const auto& [I, v] : p.even) even[point_key(I)] = rational_str(v);
    for (const auto& [I, v] : p.odd) odd[point_key(I)] = rational_str(v);
    return {{"n", p.n}, {"even", even}, {"odd", odd}};
}

SpinPoint spin_point_from_json(const json& j)
{
    SpinPoint p;
    const json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<int>() < 1) bad("n must be a positive integer");
    p.n = n.get<int>();
    for (const char* side : {"even", "odd"}) {
        const json& vals = field(j, side);
        if (!vals.is_object()) bad(std::string(side) + " must be an object");
        for (const auto& [key, v] : vals.items()) {
            Point I = key_point(key);
            if (static_cast<int>(I.size()) != p.n) bad("key \"" + key + "\" has the wrong length");
            for (int x : I)
                if (x != 0 && x != 1) bad("key \"" + key + "\" is not a cube vertex");
            if ((phi(I) % 2 == 1) != (std::string(side) == "odd")) bad("key \"" + key + "\" has the wrong parity");
            p.set(I, rational_from_json(v));
        }
    }
    return p;
}

}  // namespace zonorec
