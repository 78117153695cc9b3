#include <doctest.h>

#include "support.hpp"

using namespace zonorec;

namespace {

const ZonogonSpec hex({1, 1, 1});

Tiling other_hexagon() { return tiling_with_cube_faces(hex, {{0, 0, 0}, 0, 1, 2}, CubeSide::Top); }

bool path_ok(const FlipPath& p, const Tiling& end)
{
    for (const auto& t : trace(p))
        if (!validate_tiling(t).ok) return false;
    return replay(p) == end;
}

}  // namespace

TEST_CASE("fundamental forest on the hexagon")
{
    CHECK(fundamental_forest(t_min(hex)).empty());
    auto f = fundamental_forest(other_hexagon());
    REQUIRE(f.edges.size() == 1);
    CHECK(*f.edges.begin() == Edge{{1, 0, 1}, 1});
    CHECK(f.leaves() == std::set<Point>{{1, 0, 1}});
    CHECK(f.roots() == std::set<Point>{{1, 1, 1}});
}

TEST_CASE("forest structure on all small tilings")
{
    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1, 1}, std::vector<int>{2, 1, 1, 1},
                   std::vector<int>{2, 2, 2}}) {
        ZonogonSpec s(a);
        for (const auto& t : enumerate_tilings(s, 10000)) {
            auto f = fundamental_forest(t);
            auto st = stars(t);
            // out-degree at most one upward, no cycles: parent strictly increases phi
            for (const auto& [c, p] : f.parent) CHECK(phi(p) == phi(c) + 1);
            for (const auto& [v, vs] : st) {
                if (s.on_boundary(v)) continue;
                const int r = static_cast<int>(vs.down.size());
                CHECK(static_cast<int>(f.link(v).size()) == std::max(0, r - 2));
                // leaves: internal, one up-edge, two down-edges
                bool leaf = f.leaves().count(v) != 0;
                CHECK(leaf == (vs.up.size() == 1 && vs.down.size() == 2));
            }
        }
    }
}

TEST_CASE("flippable vertices")
{
    CHECK(flippable_vertices(t_min(hex)).down.empty());
    CHECK(flippable_vertices(t_min(hex)).up == std::set<Point>{{0, 1, 0}});
    auto h = flippable_vertices(other_hexagon());
    CHECK(h.down == std::set<Point>{{1, 0, 1}});
    CHECK(h.up.empty());
    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{3, 1, 1}, std::vector<int>{1, 1, 1, 1, 1}})
        CHECK(flippable_vertices(t_min(ZonogonSpec(a))).down.empty());
}

TEST_CASE("octagon flip graph is an 8-cycle")
{
    ZonogonSpec oct({1, 1, 1, 1});
    auto all = enumerate_tilings(oct, 100);
    REQUIRE(all.size() == 8);
    std::map<Tiling, std::set<Tiling>> adj;
    for (const auto& t : all)
        for (const auto& [u, m] : oracle::flip_neighbors(t)) {
            adj[t].insert(u);
            CHECK(apply_move(u, m.inverse()) == t);
        }
    for (const auto& t : all) CHECK(adj[t].size() == 2);
    for (const auto& [t, nb] : adj)
        for (const auto& u : nb) CHECK(adj[u].count(t));
    // connected with all degrees 2: walk it
    std::set<Tiling> seen{all[0]};
    Tiling prev = all[0], cur = *adj[all[0]].begin();
    while (!seen.count(cur)) {
        seen.insert(cur);
        Tiling next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
        prev = cur;
        cur = next;
    }
    CHECK(seen.size() == 8);
    CHECK(cur == all[0]);
}

TEST_CASE("apply_flip")
{
    auto [down, m] = apply_flip(other_hexagon(), {1, 0, 1});
    CHECK(down == t_min(hex));
    CHECK(m.dir == FlipDir::Down);
    auto [back, m2] = apply_flip(down, m.inserted());
    CHECK(back == other_hexagon());
    CHECK(m2 == m.inverse());
    CHECK_THROWS_WITH_AS(apply_flip(t_min(hex), {0, 0, 0}), doctest::Contains("not flippable"), Error);

    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1, 1}}) {
        for (const auto& t : enumerate_tilings(ZonogonSpec(a), 1000))
            for (const auto& [u, mv] : oracle::flip_neighbors(t)) {
                CHECK(validate_tiling(u).ok);
                auto vt = t.vertices(), vu = u.vertices();
                std::set<Point> only_t, only_u;
                std::set_difference(vt.begin(), vt.end(), vu.begin(), vu.end(), std::inserter(only_t, only_t.end()));
                std::set_difference(vu.begin(), vu.end(), vt.begin(), vt.end(), std::inserter(only_u, only_u.end()));
                CHECK(only_t == std::set<Point>{mv.removed()});
                CHECK(only_u == std::set<Point>{mv.inserted()});
                CHECK(u.phi() - t.phi() == (mv.dir == FlipDir::Up ? 1 : -1));
                CHECK(apply_move(u, mv.inverse()) == t);
            }
    }
}

TEST_CASE("normalize_to_min")
{
    CHECK(normalize_to_min(t_min(hex)).moves.empty());
    CHECK(normalize_to_min(other_hexagon()).moves.size() == 1);

    ZonogonSpec s({2, 2, 1});
    std::mt19937_64 rng(11);
    const Tiling tm = t_min(s);
    for (const auto& t : enumerate_tilings(s, 1000)) {
        FlipPath p = normalize_to_min(t);
        CHECK(path_ok(p, tm));
        CHECK(static_cast<int>(p.moves.size()) == t.phi() - tm.phi());
        // canonical choice: lowest leaf at every step
        Tiling cur = t;
        for (const auto& m : p.moves) {
            CHECK(m.dir == FlipDir::Down);
            CHECK(m.removed() == lowest(s, flippable_vertices(cur).down));
            cur = apply_move(cur, m);
        }
        // any leaf policy lands at the same place, phi strictly decreasing
        cur = t;
        while (true) {
            auto leaves = flippable_vertices(cur).down;
            if (leaves.empty()) break;
            std::vector<Point> l(leaves.begin(), leaves.end());
            std::uniform_int_distribution<std::size_t> pick(0, l.size() - 1);
            Tiling next = apply_flip(cur, l[pick(rng)]).first;
            CHECK(next.phi() == cur.phi() - 1);
            cur = next;
        }
        CHECK(cur == tm);
    }
}

TEST_CASE("connect")
{
    Tiling h = other_hexagon();
    CHECK(replay(connect(h, h)) == h);
    CHECK(connect(h, t_min(hex)).moves.size() <= 2);
    CHECK(replay(connect(t_min(hex), h)) == h);
    auto oct = enumerate_tilings(ZonogonSpec({1, 1, 1, 1}), 100);
    for (const auto& a : oct)
        for (const auto& b : oct) CHECK(path_ok(connect(a, b), b));
    CHECK_THROWS_AS(connect(h, t_min(ZonogonSpec({1, 1, 1, 1}))), Error);
}

TEST_CASE("connect_through")
{
    Tiling h = other_hexagon();
    CHECK(connect_through(h, h, {1, 0, 1}).moves.empty());
    CHECK_THROWS_AS(connect_through(h, t_min(hex), {1, 0, 1}), Error);

    auto oct = enumerate_tilings(ZonogonSpec({1, 1, 1, 1}), 100);
    const Point corner{1, 1, 0, 0};
    for (const auto& a : oct)
        for (const auto& b : oct) {
            auto p = connect_through(a, b, corner);
            CHECK(path_ok(p, b));
            for (const auto& t : trace(p)) CHECK(t.has_vertex(corner));
        }

    // interior vertices of A=(2,2,2), cross-checked against the restricted BFS
    ZonogonSpec s({2, 2, 2});
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> coord(0, 2);
    for (int trial = 0; trial < 12; ++trial) {
        Point I0{coord(rng), coord(rng), coord(rng)};
        Tiling t = tiling_through_vertex(s, I0, rng()), t2 = tiling_through_vertex(s, I0, rng());
        INFO(point_str(I0));
        auto p = connect_through(t, t2, I0);
        CHECK(path_ok(p, t2));
        for (const auto& x : trace(p)) CHECK(x.has_vertex(I0));
        auto bfs = connect_through_bfs(t, t2, I0);
        REQUIRE(bfs.has_value());
        CHECK(replay(*bfs) == t2);
        CHECK(bfs->moves.size() <= p.moves.size());
    }

    // every ordered pair of tilings through every vertex of a small box
    for (auto a : {std::vector<int>{2, 1, 1}, std::vector<int>{1, 1, 1, 1, 1}}) {
        ZonogonSpec sp(a);
        auto all = enumerate_tilings(sp, 1000);
        for (const auto& I0 : sp.lattice_points()) {
            std::vector<Tiling> with;
            for (const auto& t : all)
                if (t.has_vertex(I0)) with.push_back(t);
            for (std::size_t x = 0; x < with.size(); x += 3)
                for (std::size_t y = 0; y < with.size(); y += 2) {
                    auto p = connect_through(with[x], with[y], I0);
                    CHECK(replay(p) == with[y]);
                    for (const auto& t : trace(p)) CHECK(t.has_vertex(I0));
                }
        }
    }
}

TEST_CASE("rhombus chains")
{
    Tiling tm = t_min(hex);
    for (const auto& e : tm.edges()) {
        if (e.dir != 0) continue;
        auto ch = rhombus_chain(tm, e);
        CHECK(ch.size() == 2);
        for (const auto& r : ch) CHECK((r.j == 0 || r.k == 0));
    }
    CHECK_THROWS_AS(rhombus_chain(tm, Edge{{1, 0, 0}, 2}), Error);

    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{2, 1, 1, 1}, std::vector<int>{1, 1, 1, 1, 1}}) {
        ZonogonSpec s(a);
        int total = 0;
        for (int x : a) total += x;
        for (const auto& t : enumerate_tilings(s, 1000)) {
            std::map<std::pair<int, int>, std::set<Rhombus>> chains;  // (dir, index) -> rhombi
            for (const auto& e : t.edges()) {
                auto ch = rhombus_chain(t, e);
                CHECK(static_cast<int>(ch.size()) == total - a[e.dir]);
                std::set<Rhombus> as_set(ch.begin(), ch.end());
                CHECK(as_set.size() == ch.size());
                for (std::size_t i = 0; i + 1 < ch.size(); ++i) {
                    // consecutive rhombi share an edge parallel to e
                    auto c1 = ch[i].corners(), c2 = ch[i + 1].corners();
                    int shared = 0;
                    for (const auto& p : c1) shared += std::count(c2.begin(), c2.end(), p);
                    CHECK(shared == 2);
                }
                auto key = std::make_pair(e.dir, e.base[e.dir]);
                if (chains.count(key)) CHECK(chains[key] == as_set);
                chains[key] = as_set;
            }
            for (const auto& [k1, c1] : chains)
                for (const auto& [k2, c2] : chains) {
                    if (k1.first == k2.first) continue;
                    int common = 0;
                    for (const auto& r : c1) common += c2.count(r);
                    CHECK(common == 1);
                }
        }
    }
}

TEST_CASE("2-cells")
{
    CHECK(cells_2(hex, t_min(hex)).empty());
    ZonogonSpec oct({1, 1, 1, 1});
    for (const auto& t : enumerate_tilings(oct, 100)) {
        auto cells = cells_2(oct, t);
        REQUIRE(cells.size() == 1);
        CHECK(cells[0].kind == Cell2::Octagon);
        CHECK(cells[0].dirs == std::array<int, 4>{0, 1, 2, 3});
    }
    // two far-apart flippable hexagons inside A=(2,2,2)
    ZonogonSpec s({2, 2, 2});
    bool found = false;
    for (const auto& t : enumerate_tilings(s, 1000)) {
        for (const auto& c : cells_2(s, t)) {
            if (c.kind != Cell2::Square) continue;
            found = true;
            Tiling a = apply_move(apply_move(t, c.flips[0]), c.flips[1]);
            Tiling b = apply_move(apply_move(t, c.flips[1]), c.flips[0]);
            CHECK(a == b);
        }
    }
    CHECK(found);
}

TEST_CASE("forests separate tilings")
{
    for (auto a : {std::vector<int>{2, 2, 1}, std::vector<int>{1, 1, 1, 1, 1}, std::vector<int>{3, 1, 1}}) {
        ZonogonSpec s(a);
        auto all = enumerate_tilings(s, 64);
        std::set<std::set<Edge>> forests;
        int empty = 0;
        for (const auto& t : all) {
            auto f = fundamental_forest(t);
            forests.insert(f.edges);
            if (f.empty()) {
                ++empty;
                CHECK(t == t_min(s));
            }
        }
        CHECK(forests.size() == all.size());
        CHECK(empty == 1);
        std::mt19937_64 rng(2);
        std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
        for (int trial = 0; trial < 20; ++trial) {
            const Tiling &t = all[pick(rng)], &u = all[pick(rng)];
            if (t == u) continue;
            // corners of the rhombi not shared by both tilings
            std::set<Point> region;
            for (const auto* x : {&t, &u}) {
                const Tiling& other = x == &t ? u : t;
                for (const auto& r : x->rhombi())
                    if (!other.has_rhombus(r))
                        for (const auto& c : r.corners()) region.insert(c);
            }
            mpq_class best = project(s, *region.begin()).y;
            for (const auto& p : region) best = std::max(best, project(s, p).y);
            auto ft = fundamental_forest(t), fu = fundamental_forest(u);
            for (const auto& p : region) {
                if (project(s, p).y != best) continue;
                CHECK(t.has_vertex(p));
                CHECK(u.has_vertex(p));
                CHECK(ft.link(p) != fu.link(p));
            }
        }
    }
}
