#include "zonorec/forest.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace zonorec {

Point FlipMove::removed() const
{
    return dir == FlipDir::Up ? plus(base, k) : plus(plus(base, j), l);
}

Point FlipMove::inserted() const
{
    return dir == FlipDir::Up ? plus(plus(base, j), l) : plus(base, k);
}

FlipMove FlipMove::inverse() const
{
    FlipMove m = *this;
    m.dir = dir == FlipDir::Up ? FlipDir::Down : FlipDir::Up;
    return m;
}

std::set<Point> FundamentalForest::leaves() const
{
    std::set<Point> parents;
    for (const auto& [c, p] : parent) parents.insert(p);
    std::set<Point> out;
    for (const auto& [c, p] : parent)
        if (!parents.count(c)) out.insert(c);
    return out;
}

std::set<Point> FundamentalForest::roots() const
{
    std::set<Point> out;
    for (const auto& [c, p] : parent)
        if (!parent.count(p)) out.insert(p);
    return out;
}

std::vector<int> FundamentalForest::link(const Point& v) const
{
    std::vector<int> out;
    for (const auto& e : edges)
        if (plus(e.base, e.dir) == v) out.push_back(e.dir);
    return out;
}

FundamentalForest fundamental_forest(const Tiling& t)
{
    FundamentalForest f;
    for (const auto& [v, s] : stars(t)) {
        if (s.up.size() != 1) continue;
        int d = s.up[0];
        if (t.spec().boundary_edge(v, d)) continue;
        f.edges.insert({v, d});
        f.parent[v] = plus(v, d);
    }
    return f;
}

namespace {

std::optional<FlipMove> flip_from_star(const Tiling& t, const Point& v, const VertexStar& s)
{
    if (t.spec().on_boundary(v)) return std::nullopt;
    FlipMove m;
    if (s.up.size() == 2 && s.down.size() == 1) {
        m.j = s.up[0], m.k = s.down[0], m.l = s.up[1];
        m.dir = FlipDir::Up;
        m.base = plus(v, m.k, -1);
    } else if (s.up.size() == 1 && s.down.size() == 2) {
        m.j = s.down[0], m.k = s.up[0], m.l = s.down[1];
        m.dir = FlipDir::Down;
        m.base = plus(plus(v, m.j, -1), m.l, -1);
    } else {
        return std::nullopt;
    }
    if (!(m.j < m.k && m.k < m.l)) return std::nullopt;
    Cube c{m.base, m.j, m.k, m.l};
    for (const auto& r : cube_faces(c, m.dir == FlipDir::Up ? CubeSide::Bottom : CubeSide::Top))
        if (!t.has_rhombus(r)) return std::nullopt;
    return m;
}

std::string census(const VertexStar& s)
{
    return std::to_string(s.up.size()) + " up, " + std::to_string(s.down.size()) + " down";
}

}  // namespace

Flippable flippable_vertices(const Tiling& t)
{
    Flippable out;
    for (const auto& [v, s] : stars(t)) {
        auto m = flip_from_star(t, v, s);
        if (!m) continue;
        (m->dir == FlipDir::Up ? out.up : out.down).insert(v);
    }
    auto leaves = fundamental_forest(t).leaves();
    if (leaves != out.down) throw Error(ErrorKind::Internal, "forest leaves differ from down-flippable vertices");
    return out;
}

std::optional<FlipMove> flip_at(const Tiling& t, const Point& at)
{
    if (!t.has_vertex(at)) return std::nullopt;
    return flip_from_star(t, at, t.star(at));
}

Tiling apply_move(const Tiling& t, const FlipMove& m)
{
    Cube c{m.base, m.j, m.k, m.l};
    auto out_faces = cube_faces(c, m.dir == FlipDir::Up ? CubeSide::Bottom : CubeSide::Top);
    auto in_faces = cube_faces(c, m.dir == FlipDir::Up ? CubeSide::Top : CubeSide::Bottom);
    std::vector<Rhombus> rh;
    int removed = 0;
    for (const auto& r : t.rhombi()) {
        if (r == out_faces[0] || r == out_faces[1] || r == out_faces[2]) {
            ++removed;
            continue;
        }
        rh.push_back(r);
    }
    if (removed != 3) throw Error(ErrorKind::Precondition, "flip does not apply: faces missing at " + point_str(m.removed()));
    for (const auto& r : in_faces) rh.push_back(r);
    return Tiling(t.spec(), std::move(rh));
}

std::pair<Tiling, FlipMove> apply_flip(const Tiling& t, const Point& at)
{
    if (!t.has_vertex(at)) throw Error(ErrorKind::Precondition, "not flippable: " + point_str(at) + " is not a vertex");
    auto s = t.star(at);
    auto m = flip_from_star(t, at, s);
    if (!m) throw Error(ErrorKind::Precondition, "not flippable: " + point_str(at) + " has " + census(s));
    return {apply_move(t, *m), *m};
}

Tiling replay(const FlipPath& p)
{
    Tiling cur = p.start;
    for (const auto& m : p.moves) cur = apply_move(cur, m);
    return cur;
}

std::vector<Tiling> trace(const FlipPath& p)
{
    std::vector<Tiling> out{p.start};
    for (const auto& m : p.moves) out.push_back(apply_move(out.back(), m));
    return out;
}

Point lowest(const ZonogonSpec& spec, const std::set<Point>& pts)
{
    if (pts.empty()) throw Error(ErrorKind::Precondition, "empty vertex set");
    const Point* best = nullptr;
    mpq_class by;
    for (const auto& p : pts) {
        mpq_class y = project(spec, p).y;
        if (!best || y < by) best = &p, by = y;  // set order gives the lex tie-break
    }
    return *best;
}

namespace {

// Downward flips at leaves other than `keep` until none remain.
FlipPath descend(const Tiling& t, const std::optional<Point>& keep)
{
    FlipPath path{t, {}};
    Tiling cur = t;
    while (true) {
        auto leaves = fundamental_forest(cur).leaves();
        if (keep) leaves.erase(*keep);
        if (leaves.empty()) break;
        auto [next, m] = apply_flip(cur, lowest(cur.spec(), leaves));
        path.moves.push_back(m);
        cur = std::move(next);
    }
    return path;
}

FlipPath join(const FlipPath& a, const FlipPath& b_reversed_from)
{
    // a then the reverse of b
    FlipPath out = a;
    for (auto it = b_reversed_from.moves.rbegin(); it != b_reversed_from.moves.rend(); ++it)
        out.moves.push_back(it->inverse());
    return out;
}

}  // namespace

FlipPath normalize_to_min(const Tiling& t) { return descend(t, std::nullopt); }

FlipPath connect(const Tiling& t, const Tiling& t2)
{
    if (!(t.spec() == t2.spec())) throw Error(ErrorKind::Precondition, "spec mismatch");
    return join(normalize_to_min(t), normalize_to_min(t2));
}

namespace {

// Direction word of the forest path from I0 to its root, or empty.
std::vector<int> forest_word(const Tiling& t, const Point& I0)
{
    auto f = fundamental_forest(t);
    std::vector<int> word;
    Point cur = I0;
    while (f.parent.count(cur)) {
        Point nxt = f.parent.at(cur);
        for (int d = 0; d < t.spec().n(); ++d)
            if (nxt[d] != cur[d]) word.push_back(d);
        cur = nxt;
    }
    return word;
}

bool in_t0(const Tiling& t, const Point& I0)
{
    auto leaves = fundamental_forest(t).leaves();
    leaves.erase(I0);
    return leaves.empty();
}

// Swap word[p], word[p+1] by sliding the crossing of their two pseudolines.
std::vector<FlipMove> transpose(Tiling& cur, const Point& I0, const std::vector<int>& word, std::size_t p)
{
    const int ds = word[p], dr = word[p + 1];
    Point Ip = I0;
    for (std::size_t i = 0; i < p; ++i) Ip[word[i]]++;
    const int s_idx = Ip[ds];
    const int r_idx = plus(Ip, ds)[dr];
    std::vector<int> target = word;
    std::swap(target[p], target[p + 1]);

    auto crossing = [&](const Tiling& t) -> const Rhombus* {
        for (const auto& r : t.rhombi()) {
            bool dirs = (r.j == std::min(ds, dr) && r.k == std::max(ds, dr));
            if (dirs && r.base[ds] == s_idx && r.base[dr] == r_idx) return &r;
        }
        return nullptr;
    };

    struct Node {
        Tiling t;
        int parent;
        FlipMove move;
    };
    std::vector<Node> nodes{{cur, -1, {}}};
    std::set<Tiling> seen{cur};
    const std::size_t budget = 4096;
    for (std::size_t head = 0; head < nodes.size() && nodes.size() < budget; ++head) {
        const Tiling t = nodes[head].t;
        if (head > 0 && in_t0(t, I0) && forest_word(t, I0) == target) {
            std::vector<FlipMove> moves;
            for (int i = static_cast<int>(head); nodes[i].parent >= 0; i = nodes[i].parent)
                moves.push_back(nodes[i].move);
            std::reverse(moves.begin(), moves.end());
            cur = t;
            return moves;
        }
        const Rhombus* v = crossing(t);
        if (!v) throw Error(ErrorKind::Internal, "pseudolines do not cross");
        for (const auto& x : v->corners()) {
            if (x == I0) continue;
            auto m = flip_at(t, x);
            if (!m) continue;
            Tiling nt = apply_move(t, *m);
            if (seen.insert(nt).second) nodes.push_back({nt, static_cast<int>(head), *m});
        }
    }
    throw Error(ErrorKind::Internal, "transposition not realized by crossing flips");
}

}  // namespace

FlipPath connect_through(const Tiling& t, const Tiling& t2, const Point& I0)
{
    if (!(t.spec() == t2.spec())) throw Error(ErrorKind::Precondition, "spec mismatch");
    if (!t.has_vertex(I0) || !t2.has_vertex(I0))
        throw Error(ErrorKind::Precondition, "vertex " + point_str(I0) + " missing from a tiling");
    FlipPath a = descend(t, I0);
    FlipPath b = descend(t2, I0);
    Tiling cur = replay(a);
    const Tiling goal = replay(b);

    std::vector<int> word = forest_word(cur, I0);
    const std::vector<int> want = forest_word(goal, I0);
    // insertion sort of word into the order of `want`
    std::map<int, std::vector<std::size_t>> slots;
    for (std::size_t i = 0; i < want.size(); ++i) slots[want[i]].push_back(i);
    std::vector<std::size_t> rank(word.size());
    std::map<int, std::size_t> used;
    for (std::size_t i = 0; i < word.size(); ++i) {
        auto& v = slots[word[i]];
        if (used[word[i]] >= v.size()) throw Error(ErrorKind::Internal, "forest words are not permutations");
        rank[i] = v[used[word[i]]++];
    }
    FlipPath mid{cur, {}};
    for (std::size_t i = 1; i < word.size(); ++i)
        for (std::size_t p = i; p > 0 && rank[p - 1] > rank[p]; --p) {
            auto moves = transpose(cur, I0, word, p - 1);
            mid.moves.insert(mid.moves.end(), moves.begin(), moves.end());
            std::swap(word[p - 1], word[p]);
            std::swap(rank[p - 1], rank[p]);
        }
    if (!(cur == goal)) throw Error(ErrorKind::Internal, "forest words agree but tilings differ");

    FlipPath out = a;
    out.moves.insert(out.moves.end(), mid.moves.begin(), mid.moves.end());
    return join(out, b);
}

std::optional<FlipPath> connect_through_bfs(const Tiling& t, const Tiling& t2, const Point& I0, std::size_t cap)
{
    if (!t.has_vertex(I0) || !t2.has_vertex(I0))
        throw Error(ErrorKind::Precondition, "vertex " + point_str(I0) + " missing from a tiling");
    std::map<Tiling, std::pair<Tiling, FlipMove>> from;
    std::deque<Tiling> q{t};
    std::set<Tiling> seen{t};
    while (!q.empty()) {
        Tiling cur = q.front();
        q.pop_front();
        if (cur == t2) {
            FlipPath p{t, {}};
            Tiling back = cur;
            while (!(back == t)) {
                auto& [prev, m] = from.at(back);
                p.moves.push_back(m);
                back = prev;
            }
            std::reverse(p.moves.begin(), p.moves.end());
            return p;
        }
        for (const auto& [v, s] : stars(cur)) {
            if (v == I0) continue;
            auto m = flip_from_star(cur, v, s);
            if (!m) continue;
            Tiling nt = apply_move(cur, *m);
            if (!seen.insert(nt).second) continue;
            if (seen.size() > cap) throw Error(ErrorKind::CapExceeded, "restricted search exceeded cap");
            from.emplace(nt, std::make_pair(cur, *m));
            q.push_back(nt);
        }
    }
    return std::nullopt;
}

std::vector<Rhombus> rhombus_chain(const Tiling& t, const Edge& e)
{
    if (!t.edges().count(e)) throw Error(ErrorKind::Precondition, "edge not in tiling");
    const auto& spec = t.spec();
    const int d = e.dir, idx = e.base[d];
    std::map<Edge, std::vector<const Rhombus*>> by_edge;
    for (const auto& r : t.rhombi()) {
        if (r.j != d && r.k != d) continue;
        if (r.base[d] != idx) continue;
        int o = r.j == d ? r.k : r.j;
        by_edge[{r.base, d}].push_back(&r);
        by_edge[{plus(r.base, o), d}].push_back(&r);
    }
    Point start = spec.zero();
    for (int i = 0; i < d; ++i) start[i] = spec.a()[i];
    start[d] = idx;
    std::vector<Rhombus> chain;
    Edge cur{start, d};
    const Rhombus* prev = nullptr;
    while (true) {
        const Rhombus* next = nullptr;
        for (const Rhombus* r : by_edge[cur])
            if (r != prev) next = r;
        if (!next) break;
        chain.push_back(*next);
        int o = next->j == d ? next->k : next->j;
        cur = cur.base == next->base ? Edge{plus(next->base, o), d} : Edge{next->base, d};
        prev = next;
    }
    return chain;
}

std::vector<Cell2> cells_2(const ZonogonSpec& spec, const Tiling& t)
{
    std::vector<Cell2> out;
    std::vector<FlipMove> moves;
    for (const auto& [v, s] : stars(t))
        if (auto m = flip_from_star(t, v, s)) moves.push_back(*m);
    auto support = [](const FlipMove& m) {
        auto f = cube_faces({m.base, m.j, m.k, m.l}, m.dir == FlipDir::Up ? CubeSide::Bottom : CubeSide::Top);
        return std::set<Rhombus>(f.begin(), f.end());
    };
    for (std::size_t a = 0; a < moves.size(); ++a)
        for (std::size_t b = a + 1; b < moves.size(); ++b) {
            auto sa = support(moves[a]), sb = support(moves[b]);
            bool disjoint = true;
            for (const auto& r : sa) disjoint = disjoint && !sb.count(r);
            if (disjoint) out.push_back({Cell2::Square, {moves[a], moves[b]}, {}, {}});
        }
    const int n = spec.n();
    for (const auto& I : spec.lattice_points())
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l)
                    for (int m = l + 1; m < n; ++m) {
                        std::array<int, 4> q{j, k, l, m};
                        Point far = I;
                        for (int d : q) far[d]++;
                        if (!spec.contains(far)) continue;
                        std::set<std::pair<int, int>> pairs;
                        int count = 0;
                        for (const auto& r : t.rhombi()) {
                            bool inside = true;
                            for (int x = 0; x < n && inside; ++x) {
                                bool in_q = x == j || x == k || x == l || x == m;
                                if (!in_q) inside = r.base[x] == I[x];
                                else if (x == r.j || x == r.k) inside = r.base[x] == I[x];
                                else inside = r.base[x] == I[x] || r.base[x] == I[x] + 1;
                            }
                            if (!inside) continue;
                            bool dirs_in = true;
                            for (int x : {r.j, r.k}) dirs_in = dirs_in && (x == j || x == k || x == l || x == m);
                            if (!dirs_in) continue;
                            pairs.insert({r.j, r.k});
                            ++count;
                        }
                        if (count == 6 && pairs.size() == 6) out.push_back({Cell2::Octagon, {}, I, q});
                    }
    return out;
}

std::vector<Tiling> enumerate_tilings(const ZonogonSpec& spec, std::size_t cap)
{
    Tiling start = t_min(spec);
    std::set<Tiling> seen{start};
    std::vector<Tiling> order{start};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const Tiling cur = order[head];
        for (const auto& [v, s] : stars(cur)) {
            auto m = flip_from_star(cur, v, s);
            if (!m) continue;
            Tiling nt = apply_move(cur, *m);
            if (!seen.insert(nt).second) continue;
            if (seen.size() > cap)
                throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " tilings");
            order.push_back(std::move(nt));
        }
    }
    return order;
}

}  // namespace zonorec
