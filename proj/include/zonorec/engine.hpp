#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>

#include <gmpxx.h>

#include "zonorec/forest.hpp"
#include "zonorec/laurent.hpp"

namespace zonorec {

struct RationalDomain {
    using value_type = mpq_class;
    static constexpr const char* name = "rational";
    static value_type mul(const value_type& a, const value_type& b) { return a * b; }
    static value_type add3(const value_type& a, const value_type& b, const value_type& c) { return a + b + c; }
    static value_type div(const value_type& a, const value_type& b)
    {
        if (b == 0) throw Error(ErrorKind::Domain, "zero divisor");
        return a / b;
    }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool valid(const value_type& a) { return a != 0; }
};

struct LaurentDomain {
    using value_type = LaurentPoly;
    static constexpr const char* name = "laurent";
    static value_type mul(const value_type& a, const value_type& b) { return zonorec::mul(a, b); }
    static value_type add3(const value_type& a, const value_type& b, const value_type& c)
    {
        return zonorec::add(zonorec::add(a, b), c);
    }
    static value_type div(const value_type& a, const value_type& b) { return exact_div(a, b); }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool valid(const value_type& a) { return !a.is_zero(); }
};

// Max-plus semiring over the rationals.
struct TropicalDomain {
    using value_type = mpq_class;
    static constexpr const char* name = "tropical";
    static value_type mul(const value_type& a, const value_type& b) { return a + b; }
    static value_type add3(const value_type& a, const value_type& b, const value_type& c)
    {
        return std::max({a, b, c});
    }
    static value_type div(const value_type& a, const value_type& b) { return a - b; }
    static bool eq(const value_type& a, const value_type& b) { return a == b; }
    static bool valid(const value_type&) { return true; }
};

template <class D>
struct Labeling {
    using value_type = typename D::value_type;
    ZonogonSpec spec;
    std::map<Point, value_type> values;

    bool has(const Point& p) const { return values.count(p) != 0; }
    const value_type& at(const Point& p) const
    {
        auto it = values.find(p);
        if (it == values.end()) throw Error(ErrorKind::Precondition, "unlabeled vertex " + point_str(p));
        return it->second;
    }
};

namespace detail {

inline std::string cube_str(const Point& I, int j, int k, int l)
{
    return "cube " + point_str(I) + " dirs (" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
           std::to_string(l + 1) + ")";
}

// Right-hand side of the cube relation, without the divisor.
template <class D>
typename D::value_type numerator(const std::function<const typename D::value_type&(const Point&)>& x,
                                 const Point& I, int j, int k, int l)
{
    const Point ej = plus(I, j), el = plus(I, l);
    const Point ejk = plus(ej, k), ekl = plus(plus(I, k), l), ejkl = plus(ejk, l);
    return D::add3(D::mul(x(I), x(ejkl)), D::mul(x(ejk), x(el)), D::mul(x(ekl), x(ej)));
}

}  // namespace detail

// Value at the vertex inserted by `move`.
template <class D>
typename D::value_type flip_value(const Labeling<D>& lab, const FlipMove& move)
{
    auto x = [&](const Point& p) -> const typename D::value_type& { return lab.at(p); };
    const auto num = detail::numerator<D>(x, move.base, move.j, move.k, move.l);
    const auto& divisor = lab.at(move.removed());
    if (!D::valid(divisor))
        throw Error(ErrorKind::Domain, "invalid divisor at " + detail::cube_str(move.base, move.j, move.k, move.l));
    try {
        return D::div(num, divisor);
    } catch (const Error& e) {
        throw Error(e.kind(), std::string(e.what()) + " at " + detail::cube_str(move.base, move.j, move.k, move.l));
    }
}

// Labeling of the end tiling obtained by running the recurrence along `path`.
template <class D>
Labeling<D> evaluate_path(const Labeling<D>& lab0, const FlipPath& path)
{
    Labeling<D> lab = lab0;
    for (const auto& v : path.start.vertices()) lab.at(v);
    Tiling cur = path.start;
    for (const auto& m : path.moves) {
        lab.values[m.inserted()] = flip_value(lab, m);
        cur = apply_move(cur, m);
    }
    Labeling<D> out{lab.spec, {}};
    for (const auto& v : cur.vertices()) out.values[v] = lab.values.at(v);
    return out;
}

struct ExtendOptions {
    std::uint64_t seed = 0;
    double check_rate = 1.0;  // fraction of re-derivations compared against the cache
};

// Values on all of the box, routing through a tiling that contains each target.
template <class D>
Labeling<D> extend_to_lattice(const Labeling<D>& lab0, const Tiling& T0, const ExtendOptions& opt = {})
{
    Labeling<D> lab{lab0.spec, {}};
    // invalid values surface as divisors, naming the cube
    for (const auto& v : T0.vertices()) lab.values[v] = lab0.at(v);
    std::mt19937_64 rng(opt.seed);
    std::bernoulli_distribution sample(std::clamp(opt.check_rate, 0.0, 1.0));
    std::uint64_t salt = 0;
    for (const auto& I : lab.spec.lattice_points()) {
        ++salt;
        if (lab.has(I)) continue;
        Tiling target = tiling_through_vertex(lab.spec, I, opt.seed * 1000003u + salt);
        FlipPath path = connect(T0, target);
        for (const auto& m : path.moves) {
            const Point p = m.inserted();
            auto it = lab.values.find(p);
            if (it == lab.values.end()) {
                lab.values.emplace(p, flip_value(lab, m));
            } else if (sample(rng)) {
                auto again = flip_value(lab, m);
                if (!D::eq(again, it->second))
                    throw Error(ErrorKind::Internal, "consistency violation at " + point_str(p));
            }
        }
        if (!lab.has(I)) throw Error(ErrorKind::Internal, "path missed " + point_str(I));
    }
    return lab;
}

// Flips whose inserted vertices cover the box outside vert(T0), each vertex once, in dependency order.
std::vector<FlipMove> lattice_schedule(const Tiling& T0, std::uint64_t seed = 0);

template <class D>
Labeling<D> apply_schedule(const Labeling<D>& lab0, const std::vector<FlipMove>& schedule)
{
    Labeling<D> lab = lab0;
    for (const auto& m : schedule) lab.values[m.inserted()] = flip_value(lab, m);
    return lab;
}

template <class D>
Report verify_cube_relations(const Labeling<D>& lab)
{
    const auto& spec = lab.spec;
    const int n = spec.n();
    auto x = [&](const Point& p) -> const typename D::value_type& { return lab.at(p); };
    for (const auto& I : spec.lattice_points())
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    Point far = plus(plus(plus(I, j), k), l);
                    if (!spec.contains(far)) continue;
                    auto lhs = D::mul(x(plus(plus(I, j), l)), x(plus(I, k)));
                    auto rhs = detail::numerator<D>(x, I, j, k, l);
                    if (!D::eq(lhs, rhs)) return Report::fail("relation fails at " + detail::cube_str(I, j, k, l));
                }
    return Report::pass();
}

// Positive rationals p/q with 1 <= p, q <= 9 on the vertices of T0.
Labeling<RationalDomain> random_positive_labeling(const Tiling& T0, std::mt19937_64& rng);

// Pairs of random tilings; each pair is joined by two different flip paths whose rational
// labelings must agree.
Report check_confluence(const ZonogonSpec& spec, std::size_t trials, std::uint64_t seed);

// Symbolic extension from T0 with exact divisions, then agreement with rational mode at
// `points` random positive points.
Report check_laurent(const Tiling& T0, std::size_t points, std::uint64_t seed);

// Initial data x_J = variable J on the vertices of T0.
inline Labeling<LaurentDomain> symbolic_labeling(const Tiling& T0, VarSet& vars)
{
    const auto vs = T0.vertices();
    std::vector<Point> pts(vs.begin(), vs.end());
    vars = VarSet(pts);
    Labeling<LaurentDomain> lab{T0.spec(), {}};
    for (std::size_t i = 0; i < pts.size(); ++i) lab.values[pts[i]] = LaurentPoly::variable(pts.size(), i);
    return lab;
}

// Edge-label polynomial at vertex J; `rename` maps tiling vertices to variable names.
LaurentPoly exchange_polynomial(const Tiling& t, const Point& J, const VarSet& vars,
                                const std::map<Point, Point>& rename = {});

// Neighbors of J in counterclockwise order.
std::vector<Point> cyclic_neighbors(const Tiling& t, const Point& J);

struct Condition3 {
    int which_case = 0;  // 1, 2 or 3
    bool holds = false;
};

// Caterpillar Condition 3 for the flip at j in tk and a further vertex i of tk.
Condition3 check_condition3(const Tiling& tk, const Point& j, const Point& i);

}  // namespace zonorec
