#include "zonorec/tropical.hpp"

#include <random>

namespace zonorec {

void check_wall(const ZonogonSpec& spec, const Wall& w)
{
    if (w.s < 0 || w.s >= spec.n()) throw Error(ErrorKind::BadInput, "wall direction out of range");
    if (w.c < 1 || w.c > spec.a()[w.s] - 1)
        throw Error(ErrorKind::BadInput, "wall offset must satisfy 1 <= c <= a_s - 1");
}

namespace {

Point curve_start(const ZonogonSpec& spec, const Wall& w)
{
    Point p = spec.zero();
    for (int i = 0; i < w.s; ++i) p[i] = spec.a()[i];
    p[w.s] = w.c;
    return p;
}

Point curve_end(const ZonogonSpec& spec, const Wall& w)
{
    Point p = spec.zero();
    for (int i = w.s + 1; i < spec.n(); ++i) p[i] = spec.a()[i];
    p[w.s] = w.c;
    return p;
}

// Direction of a legal step, or -1.
int legal_step(const Wall& w, const Point& from, const Point& to)
{
    int dir = -1, count = 0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        int d = to[i] - from[i];
        if (d == 0) continue;
        ++count;
        const int ii = static_cast<int>(i);
        if ((ii > w.s && d == 1) || (ii < w.s && d == -1)) dir = ii;
        else return -1;
    }
    return count == 1 ? dir : -1;
}

}  // namespace

Report validate_cutcurve(const ZonogonSpec& spec, const Wall& w, const Cutcurve& g)
{
    if (g.empty()) return Report::fail("endpoint: empty cutcurve");
    for (const auto& p : g)
        if (static_cast<int>(p.size()) != spec.n()) return Report::fail("point " + point_str(p) + " has wrong dimension");
    for (std::size_t t = 1; t < g.size(); ++t)
        if (legal_step(w, g[t - 1], g[t]) < 0)
            return Report::fail("illegal step " + point_str(g[t - 1]) + " -> " + point_str(g[t]));
    for (const auto& p : g) {
        if (!spec.contains(p)) return Report::fail("point " + point_str(p) + " outside box");
        if (p[w.s] != w.c) return Report::fail("point " + point_str(p) + " off the wall");
    }
    if (g.front() != curve_start(spec, w) || g.back() != curve_end(spec, w))
        return Report::fail("endpoint mismatch");
    return Report::pass();
}

Cutcurve elementary_move(const ZonogonSpec& spec, const Wall& w, const Cutcurve& g, std::size_t t0)
{
    if (t0 == 0 || t0 + 1 >= g.size()) throw Error(ErrorKind::Precondition, "move index must be interior");
    Point moved(g[t0].size());
    bool collinear = true;
    for (std::size_t i = 0; i < moved.size(); ++i) {
        moved[i] = g[t0 - 1][i] + g[t0 + 1][i] - g[t0][i];
        if (g[t0][i] - g[t0 - 1][i] != g[t0 + 1][i] - g[t0][i]) collinear = false;
    }
    if (collinear) throw Error(ErrorKind::Precondition, "collinear triple");
    Cutcurve out = g;
    out[t0] = moved;
    auto rep = validate_cutcurve(spec, w, out);
    if (!rep.ok) throw Error(ErrorKind::Precondition, "move leaves cutcurves: " + rep.message);
    return out;
}

std::vector<Cutcurve> all_cutcurves(const ZonogonSpec& spec, const Wall& w)
{
    check_wall(spec, w);
    std::vector<Cutcurve> out;
    const Point goal = curve_end(spec, w);
    Cutcurve cur{curve_start(spec, w)};
    auto rec = [&](auto&& self) -> void {
        const Point p = cur.back();
        if (p == goal) {
            out.push_back(cur);
            return;
        }
        for (int i = 0; i < spec.n(); ++i) {
            Point q = p;
            if (i > w.s && p[i] < spec.a()[i]) ++q[i];
            else if (i < w.s && p[i] > 0) --q[i];
            else continue;
            cur.push_back(q);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

std::vector<Edge> wall_edges(const ZonogonSpec& spec, const Wall& w)
{
    std::vector<Edge> out;
    for (const auto& I : spec.lattice_points()) {
        if (I[w.s] != w.c) continue;
        for (int i = 0; i < spec.n(); ++i)
            if (i != w.s && spec.contains(plus(I, i))) out.push_back({I, i});
    }
    return out;
}

std::vector<Edge> cutcurve_edges(const Cutcurve& g)
{
    std::vector<Edge> out;
    for (std::size_t t = 1; t < g.size(); ++t)
        for (std::size_t i = 0; i < g[t].size(); ++i) {
            int d = g[t][i] - g[t - 1][i];
            if (d == 1) out.push_back({g[t - 1], static_cast<int>(i)});
            if (d == -1) out.push_back({g[t], static_cast<int>(i)});
        }
    return out;
}

bool w_inequalities_hold(const TropicalLabeling& lab, const Wall& w, const Edge& e)
{
    const auto& spec = lab.spec;
    const Point& I = e.base;
    const int i = e.dir;
    if (i == w.s || I[w.s] != w.c || !spec.contains(I) || !spec.contains(plus(I, i)))
        throw Error(ErrorKind::Precondition, "malformed wall edge at " + point_str(I));
    const Point Ii = plus(I, i);
    const mpq_class lhs = lab.at(I) + lab.at(Ii);
    // comparison points outside the box make an inequality vacuous
    auto side = [&](int sign) {
        const Point a = plus(I, w.s, sign), b = plus(Ii, w.s, -sign);
        if (!spec.contains(a) || !spec.contains(b)) return true;
        return lhs >= lab.at(a) + lab.at(b);
    };
    return side(1) && side(-1);
}

PropagationReport check_propagation(const TropicalLabeling& lab, const Wall& w, const Cutcurve& g)
{
    PropagationReport rep;
    auto rec = verify_cube_relations(lab);
    if (!rec.ok) {
        rep.recurrence_ok = false;
        rep.message = "precondition: recurrence violated (" + rec.message + ")";
        return rep;
    }
    auto gv = validate_cutcurve(lab.spec, w, g);
    if (!gv.ok) {
        rep.message = "invalid cutcurve: " + gv.message;
        return rep;
    }
    for (const auto& e : cutcurve_edges(g))
        if (!w_inequalities_hold(lab, w, e)) {
            rep.message = "hypothesis not met at edge " + point_str(e.base) + " dir " + std::to_string(e.dir + 1);
            return rep;
        }
    rep.hypothesis_met = true;
    for (const auto& e : wall_edges(lab.spec, w)) {
        ++rep.edges_checked;
        if (!w_inequalities_hold(lab, w, e)) rep.violations.push_back(e);
    }
    rep.conclusion_ok = rep.violations.empty();
    rep.message = rep.conclusion_ok ? "ok" : std::to_string(rep.violations.size()) + " wall edges violate";
    return rep;
}

bool mabc_holds(const MabcValues& x)
{
    return x.w + x.s == std::max({x.v + x.r, x.z + x.q, x.y + x.p}) &&
           x.q + x.d == std::max({x.p + x.c, x.s + x.b, x.r + x.a});
}

bool local_step_check(const MabcValues& x)
{
    if (!mabc_holds(x)) throw Error(ErrorKind::Precondition, "values do not satisfy the local relations");
    const bool A = x.p + x.q >= x.a + x.w, B = x.p + x.q >= x.b + x.v;
    const bool C = x.q + x.r >= x.c + x.w, D = x.q + x.r >= x.b + x.y;
    const bool E = x.p + x.s >= x.a + x.z, F = x.p + x.s >= x.d + x.v;
    const bool G = x.s + x.r >= x.c + x.z, H = x.s + x.r >= x.d + x.y;
    return !(A && B && C && D) || (E && F && G && H);
}

PropagationTrials run_propagation_trials(const ZonogonSpec& spec, const Wall& w, std::size_t wanted,
                                         std::uint64_t seed, std::size_t max_samples, const Cutcurve& only)
{
    check_wall(spec, w);
    const Tiling T0 = t_min(spec);
    const auto schedule = lattice_schedule(T0, seed);
    const auto curves = only.empty() ? all_cutcurves(spec, w) : std::vector<Cutcurve>{only};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> wide(-5, 5), noise(-1, 1);
    PropagationTrials out;
    while (out.hypothesis_met < wanted && out.samples < max_samples) {
        if (!out.used_affine && out.samples >= 200 && out.hypothesis_met * 5 < out.samples) out.used_affine = true;
        ++out.samples;
        std::vector<int> slope(spec.n());
        for (auto& c : slope) c = wide(rng);
        TropicalLabeling lab0{spec, {}};
        for (const auto& v : T0.vertices()) {
            int x = 0;
            if (out.used_affine) {
                for (int i = 0; i < spec.n(); ++i) x += slope[i] * v[i];
                x += noise(rng);
            } else {
                x = wide(rng);
            }
            lab0.values[v] = x;
        }
        const auto lab = apply_schedule(lab0, schedule);
        bool met = false;
        for (const auto& g : curves) {
            auto rep = check_propagation(lab, w, g);
            if (!rep.recurrence_ok) {
                out.first_failure = rep.message;
                return out;
            }
            if (!rep.hypothesis_met) {
                out.witness = rep.message;
                continue;
            }
            met = true;
            out.edges_checked += rep.edges_checked;
            out.violations += rep.violations.size();
            if (!rep.conclusion_ok && out.first_failure.empty())
                out.first_failure = rep.message + " (first at " + point_str(rep.violations[0].base) + " dir " +
                                    std::to_string(rep.violations[0].dir + 1) + ")";
            break;
        }
        if (met) ++out.hypothesis_met;
    }
    return out;
}

}  // namespace zonorec
