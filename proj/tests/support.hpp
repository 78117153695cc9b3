// Independent reference computations shared by the test programs.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "zonorec/engine.hpp"
#include "zonorec/forest.hpp"

namespace oracle {

using namespace zonorec;

// All tilings by sweeping a monotone path from the word 1^a1..n^an to n^an..1^a1;
// each swap (j,k) -> (k,j) at position p lays the rhombus based at the path point before p.
inline std::set<std::vector<Rhombus>> sweep_tilings(const ZonogonSpec& spec)
{
    std::vector<int> word;
    for (int d = 0; d < spec.n(); ++d) word.insert(word.end(), spec.a()[d], d);
    std::set<std::vector<Rhombus>> done;
    std::set<std::pair<std::vector<int>, std::vector<Rhombus>>> seen;
    std::vector<Rhombus> placed;
    auto rec = [&](auto&& self) -> void {
        std::vector<Rhombus> key = placed;
        std::sort(key.begin(), key.end());
        if (!seen.insert({word, key}).second) return;
        bool any = false;
        Point at = spec.zero();
        for (std::size_t p = 0; p + 1 < word.size(); ++p) {
            if (word[p] < word[p + 1]) {
                any = true;
                placed.emplace_back(at, word[p], word[p + 1]);
                std::swap(word[p], word[p + 1]);
                self(self);
                std::swap(word[p], word[p + 1]);
                placed.pop_back();
            }
            at[word[p]]++;
        }
        if (!any) done.insert(key);
    };
    rec(rec);
    return done;
}

inline std::vector<std::pair<Tiling, FlipMove>> flip_neighbors(const Tiling& t)
{
    std::vector<std::pair<Tiling, FlipMove>> out;
    auto f = flippable_vertices(t);
    for (const auto* side : {&f.down, &f.up})
        for (const auto& v : *side) out.push_back(apply_flip(t, v));
    return out;
}

// Breadth-first path in the flip graph, neighbors visited in random order.
inline FlipPath bfs_path(const Tiling& from, const Tiling& to, std::mt19937_64& rng)
{
    std::map<Tiling, std::pair<Tiling, FlipMove>> back;
    std::deque<Tiling> queue{from};
    std::set<Tiling> seen{from};
    while (!queue.empty()) {
        Tiling cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        auto nb = flip_neighbors(cur);
        std::shuffle(nb.begin(), nb.end(), rng);
        for (auto& [next, move] : nb)
            if (seen.insert(next).second) {
                back.emplace(next, std::make_pair(cur, move));
                queue.push_back(next);
            }
    }
    FlipPath path{from, {}};
    for (Tiling cur = to; !(cur == from);) {
        const auto& [prev, move] = back.at(cur);
        path.moves.push_back(move);
        cur = prev;
    }
    std::reverse(path.moves.begin(), path.moves.end());
    return path;
}

inline long vertex_count_formula(const ZonogonSpec& spec)
{
    long s = 1;
    for (int i = 0; i < spec.n(); ++i) {
        s += spec.a()[i];
        for (int j = i + 1; j < spec.n(); ++j) s += long(spec.a()[i]) * spec.a()[j];
    }
    return s;
}

inline Tiling random_tiling(const ZonogonSpec& spec, std::mt19937_64& rng)
{
    auto pts = spec.lattice_points();
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    return tiling_through_vertex(spec, pts[pick(rng)], rng());
}

// The 8-cycle of flips around the octagon A=(1,1,1,1), followed symbolically. Letters a..k name the
// start tiling's vertices, i,j,k its interior ones removed in that order; the remaining letters are
// read off the flip numerators, then every intermediate value is compared with its closed form.
struct OctagonCycle {
    bool ok = false;
    std::string message;
    LaurentPoly l;
};

inline OctagonCycle octagon_cycle()
{
    ZonogonSpec spec({1, 1, 1, 1});
    OctagonCycle out;
    out.message = "no start tiling and direction fits the cycle pattern";
    for (const auto& T : enumerate_tilings(spec, 100)) {
        for (const auto& first : flip_neighbors(T)) {
            // walk around the cycle
            std::vector<FlipMove> moves{first.second};
            Tiling prev = T, cur = first.first;
            while (moves.size() < 8) {
                auto nb = flip_neighbors(cur);
                if (nb.size() != 2) return {false, "octagon tiling without exactly two flips", {}};
                auto& pick = nb[0].first == prev ? nb[1] : nb[0];
                moves.push_back(pick.second);
                prev = cur;
                cur = pick.first;
            }
            if (!(cur == T)) return {false, "eight flips do not close up", {}};
            std::vector<Point> rem, ins;
            for (const auto& m : moves) {
                rem.push_back(m.removed());
                ins.push_back(m.inserted());
            }
            bool pattern = !spec.on_boundary(rem[0]) && !spec.on_boundary(rem[1]) && !spec.on_boundary(rem[2]);
            for (int t = 0; t < 5; ++t) pattern = pattern && rem[t + 3] == ins[t];
            if (!pattern) continue;

            std::map<char, Point> L;
            L['i'] = rem[0], L['j'] = rem[1], L['k'] = rem[2];
            const Point pl = ins[0];
            auto pairs = [](const FlipMove& m) {
                const Point I = m.base, ej = plus(I, m.j), el = plus(I, m.l);
                const Point ejk = plus(ej, m.k), ekl = plus(plus(I, m.k), m.l);
                return std::vector<std::pair<Point, Point>>{{I, plus(ejk, m.l)}, {ejk, el}, {ekl, ej}};
            };
            auto partner = [&](const FlipMove& m, const Point& v) -> std::optional<Point> {
                for (auto [x, y] : pairs(m)) {
                    if (x == v) return y;
                    if (y == v) return x;
                }
                return std::nullopt;
            };
            auto rest = [&](const FlipMove& m, const Point& u, const Point& v) {
                for (auto [x, y] : pairs(m))
                    if (x != u && y != u && x != v && y != v) return std::make_pair(x, y);
                return std::make_pair(u, u);
            };
            auto pa = partner(moves[0], L['j']), pb = partner(moves[0], L['k']);
            auto pd = partner(moves[1], L['k']), pe = partner(moves[1], pl);
            if (!pa || !pb || !pd || !pe) continue;
            L['a'] = *pa, L['b'] = *pb, L['d'] = *pd, L['e'] = *pe;
            auto ch = rest(moves[0], L['j'], L['k']);
            auto cf = rest(moves[1], L['k'], pl);
            if (ch.first == cf.first || ch.first == cf.second) {
                L['c'] = ch.first;
                L['h'] = ch.second;
            } else {
                L['c'] = ch.second;
                L['h'] = ch.first;
            }
            L['f'] = cf.first == L['c'] ? cf.second : cf.first;
            auto pg = partner(moves[2], pl);
            if (!pg) continue;
            L['g'] = *pg;

            std::set<Point> distinct;
            for (auto& [c, p] : L) distinct.insert(p);
            if (distinct.size() != 11 || distinct != T.vertices())
                return {false, "letters a..k do not name the eleven vertices", {}};

            VarSet vars;
            auto lab = symbolic_labeling(T, vars);
            auto x = [&](char c) { return LaurentPoly::variable(vars.size(), vars.index(L.at(c))); };
            std::vector<LaurentPoly> got;
            for (const auto& m : moves) {
                got.push_back(flip_value(lab, m));
                lab.values[m.inserted()] = got.back();
            }
            auto a = x('a'), b = x('b'), c = x('c'), d = x('d'), e = x('e'), f = x('f'), g = x('g'), h = x('h'),
                 i = x('i'), j = x('j'), k = x('k');
            std::vector<std::pair<const char*, LaurentPoly>> want{
                {"l", exact_div(a * j + b * k + c * h, i)},
                {"m", exact_div(c * f * i + d * k * i + e * a * j + e * b * k + e * c * h, i * j)},
                {"n", exact_div(f * a * i * j + g * a * j * j + g * b * k * j + g * c * h * j + h * c * f * i +
                                    h * d * k * i + h * e * a * j + h * e * b * k + e * c * h * h,
                                i * j * k)},
                {"o", exact_div(b * e * k + d * i * k + c * g * j + c * f * i + c * e * h, j * k)},
                {"p", exact_div(e * h + f * i + g * j, k)},
                {"q", i},
                {"r", j},
                {"s", k}};
            for (std::size_t t = 0; t < 8; ++t)
                if (!(got[t] == want[t].second))
                    return {false, std::string("value ") + want[t].first + " differs from its closed form", {}};
            return {true, "", got[0]};
        }
    }
    return out;
}

}  // namespace oracle
