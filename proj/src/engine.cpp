#include "zonorec/engine.hpp"

#include <algorithm>
#include <set>

namespace zonorec {

std::vector<Point> cyclic_neighbors(const Tiling& t, const Point& J)
{
    // up-edges have angles theta_d, down-edges theta_d + pi
    auto s = t.star(J);
    std::vector<Point> out;
    for (int d : s.up) out.push_back(plus(J, d));
    for (int d : s.down) out.push_back(plus(J, d, -1));
    return out;
}

namespace {

std::optional<Rhombus> rhombus_of(const Point& J, const Point& a, const Point& b)
{
    int da = -1, db = -1;
    for (std::size_t i = 0; i < J.size(); ++i) {
        if (a[i] != J[i]) da = static_cast<int>(i);
        if (b[i] != J[i]) db = static_cast<int>(i);
    }
    if (da == db) return std::nullopt;
    Point base = J;
    for (std::size_t i = 0; i < J.size(); ++i) base[i] = std::min({J[i], a[i], b[i]});
    return Rhombus(base, da, db);
}

std::size_t var_of(const VarSet& vars, const std::map<Point, Point>& rename, const Point& p)
{
    auto it = rename.find(p);
    int i = vars.index(it == rename.end() ? p : it->second);
    if (i < 0) throw Error(ErrorKind::Precondition, "no variable for vertex " + point_str(p));
    return static_cast<std::size_t>(i);
}

}  // namespace

LaurentPoly exchange_polynomial(const Tiling& t, const Point& J, const VarSet& vars,
                                const std::map<Point, Point>& rename)
{
    const auto a = cyclic_neighbors(t, J);
    const std::size_t r = a.size(), nv = vars.size();
    std::vector<LaurentPoly> xa;
    for (const auto& p : a) xa.push_back(LaurentPoly::variable(nv, var_of(vars, rename, p)));
    LaurentPoly all = LaurentPoly::constant(nv, 1);
    for (const auto& x : xa) all = mul(all, x);

    LaurentPoly p(nv);
    for (std::size_t i = 0; i < r; ++i) {
        const std::size_t nx = (i + 1) % r;
        auto rh = rhombus_of(J, a[i], a[nx]);
        // a face must fill the counterclockwise sector from a_i to a_{i+1}
        const Vec2 c = project(t.spec(), J), u = project(t.spec(), a[i]), w = project(t.spec(), a[nx]);
        const bool convex = cross(Vec2{u.x - c.x, u.y - c.y}, Vec2{w.x - c.x, w.y - c.y}) > 0;
        if (!rh || !convex || !t.has_rhombus(*rh)) {
            // missing fourth vertex: x_b := x_{a_i} x_{a_{i+1}}
            p = add(p, all);
            continue;
        }
        Point b = a[i];
        for (std::size_t c = 0; c < b.size(); ++c) b[c] += a[nx][c] - J[c];
        LaurentPoly term = LaurentPoly::variable(nv, var_of(vars, rename, b));
        for (std::size_t m = 0; m < r; ++m)
            if (m != i && m != nx) term = mul(term, xa[m]);
        p = add(p, term);
    }
    return p;
}

Condition3 check_condition3(const Tiling& tk, const Point& j, const Point& i)
{
    if (i == j) throw Error(ErrorKind::Precondition, "condition 3 needs two distinct vertices");
    auto [tk1, move] = apply_flip(tk, j);
    const auto vs = tk.vertices();
    std::vector<Point> pts(vs.begin(), vs.end());
    VarSet vars(pts);
    const std::size_t xi = static_cast<std::size_t>(vars.index(i));
    const std::size_t xj = static_cast<std::size_t>(vars.index(j));
    const std::map<Point, Point> rename{{move.inserted(), j}};

    const LaurentPoly P = exchange_polynomial(tk, i, vars);
    const LaurentPoly Q = exchange_polynomial(tk, j, vars);
    const LaurentPoly R = exchange_polynomial(tk1, i, vars, rename);
    const LaurentPoly Q0 = set_zero(Q, xi);
    const LaurentPoly lhs = substitute_over(R, xj, Q0);

    Condition3 out;
    bool same_rhombus = false, joined = false;
    for (const auto& r : tk.rhombi()) {
        auto c = r.corners();
        bool hi = std::find(c.begin(), c.end(), i) != c.end();
        bool hj = std::find(c.begin(), c.end(), j) != c.end();
        if (hi && hj) same_rhombus = true;
    }
    int diff = 0;
    for (std::size_t c = 0; c < i.size(); ++c) diff += std::abs(i[c] - j[c]);
    joined = same_rhombus && diff == 1;

    const std::size_t nv = vars.size();
    if (!same_rhombus) {
        out.which_case = 1;
        out.holds = lhs == P;
    } else if (joined) {
        out.which_case = 2;
        out.holds = lhs == mul(LaurentPoly::variable(nv, xj, -1), P);
    } else {
        // L = x_j^-1 and m = 1
        out.which_case = 3;
        out.holds = lhs == mul(LaurentPoly::variable(nv, xj, -1), mul(Q0, P));
    }
    return out;
}

std::vector<FlipMove> lattice_schedule(const Tiling& T0, std::uint64_t seed)
{
    const auto& spec = T0.spec();
    std::set<Point> known = T0.vertices();
    std::vector<FlipMove> out;
    std::uint64_t salt = 0;
    for (const auto& I : spec.lattice_points()) {
        ++salt;
        if (known.count(I)) continue;
        Tiling target = tiling_through_vertex(spec, I, seed * 1000003u + salt);
        for (const auto& m : connect(T0, target).moves)
            if (known.insert(m.inserted()).second) out.push_back(m);
        if (!known.count(I)) throw Error(ErrorKind::Internal, "path missed " + point_str(I));
    }
    return out;
}

Labeling<RationalDomain> random_positive_labeling(const Tiling& T0, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> digit(1, 9);
    Labeling<RationalDomain> lab{T0.spec(), {}};
    for (const auto& v : T0.vertices()) {
        int p = digit(rng), q = digit(rng);
        lab.values[v] = mpq_class(p, q);
        lab.values[v].canonicalize();
    }
    return lab;
}

namespace {

Tiling random_tiling(const ZonogonSpec& spec, std::mt19937_64& rng)
{
    const auto pts = spec.lattice_points();
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    return tiling_through_vertex(spec, pts[pick(rng)], rng());
}

}  // namespace

Report check_confluence(const ZonogonSpec& spec, std::size_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Tiling t = random_tiling(spec, rng), t2 = random_tiling(spec, rng), via = random_tiling(spec, rng);
        const auto lab0 = random_positive_labeling(t, rng);
        FlipPath direct = connect(t, t2);
        FlipPath detour = connect(t, via);
        for (const auto& m : connect(via, t2).moves) detour.moves.push_back(m);
        if (!(replay(direct) == t2) || !(replay(detour) == t2))
            return Report::fail("trial " + std::to_string(trial) + ": path does not end at the target");
        const auto a = evaluate_path(lab0, direct), b = evaluate_path(lab0, detour);
        for (const auto& [p, v] : a.values)
            if (b.at(p) != v)
                return Report::fail("trial " + std::to_string(trial) + ": values differ at " + point_str(p) + " (" +
                                    v.get_str() + " vs " + b.at(p).get_str() + ")");
    }
    return Report::pass();
}

Report check_laurent(const Tiling& T0, std::size_t points, std::uint64_t seed)
{
    VarSet vars;
    const auto sym0 = symbolic_labeling(T0, vars);
    const auto schedule = lattice_schedule(T0, seed);
    Labeling<LaurentDomain> sym;
    try {
        sym = apply_schedule(sym0, schedule);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Domain) return Report::fail(e.what());
        throw;
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (std::size_t k = 0; k < points; ++k) {
        const auto lab0 = random_positive_labeling(T0, rng);
        std::vector<mpq_class> at(vars.size());
        for (std::size_t i = 0; i < vars.size(); ++i) at[i] = lab0.at(vars.at(i));
        const auto num = apply_schedule(lab0, schedule);
        for (const auto& [p, poly] : sym.values)
            if (evaluate(poly, at) != num.at(p))
                return Report::fail("evaluation differs from rational mode at " + point_str(p));
    }
    return Report::pass();
}

}  // namespace zonorec
