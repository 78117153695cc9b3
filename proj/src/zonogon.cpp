#include "zonorec/zonogon.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <sstream>

namespace zonorec {

mpq_class cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

ZonogonSpec::ZonogonSpec(std::vector<int> a) : a_(std::move(a))
{
    if (a_.size() < 3)
        throw Error(ErrorKind::BadInput, "need n >= 3 directions, got " + std::to_string(a_.size()));
    for (int x : a_)
        if (x < 1) throw Error(ErrorKind::BadInput, "side multiplicities must be >= 1");
    // tan-half-angle directions t_i = i/(n+1-i), cleared to integers
    const int n = static_cast<int>(a_.size());
    for (int i = 1; i <= n; ++i) {
        long p = i, q = n + 1 - i;
        v_.push_back({mpq_class(q * q - p * p), mpq_class(2 * p * q)});
    }
}

bool ZonogonSpec::contains(const Point& p) const
{
    if (p.size() != a_.size()) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 0 || p[i] > a_[i]) return false;
    return true;
}

bool ZonogonSpec::on_boundary(const Point& p) const
{
    if (!contains(p)) return false;
    const int n = this->n();
    int r = 0;
    while (r < n && p[r] == a_[r]) ++r;
    bool right = true;
    for (int i = r + 1; i < n; ++i)
        if (p[i] != 0) right = false;
    if (right) return true;
    r = 0;
    while (r < n && p[r] == 0) ++r;
    for (int i = r + 1; i < n; ++i)
        if (p[i] != a_[i]) return false;
    return true;
}

bool ZonogonSpec::boundary_edge(const Point& base, int d) const
{
    if (!contains(base) || base[d] >= a_[d]) return false;
    bool right = true, left = true;
    for (int i = 0; i < n(); ++i) {
        if (i < d) {
            right = right && base[i] == a_[i];
            left = left && base[i] == 0;
        } else if (i > d) {
            right = right && base[i] == 0;
            left = left && base[i] == a_[i];
        }
    }
    return right || left;
}

std::vector<Point> ZonogonSpec::lattice_points() const
{
    std::vector<Point> out;
    Point p = zero();
    while (true) {
        out.push_back(p);
        int i = n() - 1;
        while (i >= 0 && p[i] == a_[i]) p[i--] = 0;
        if (i < 0) break;
        ++p[i];
    }
    return out;
}

long ZonogonSpec::expected_rhombi() const
{
    long s = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j) s += static_cast<long>(a_[i]) * a_[j];
    return s;
}

long ZonogonSpec::expected_vertices() const
{
    long s = expected_rhombi() + 1;
    for (int x : a_) s += x;
    return s;
}

Vec2 project(const ZonogonSpec& spec, const Point& p)
{
    Vec2 out{0, 0};
    for (int i = 0; i < spec.n(); ++i) {
        out.x += p[i] * spec.v()[i].x;
        out.y += p[i] * spec.v()[i].y;
    }
    return out;
}

Point unit(int n, int d)
{
    Point p(n, 0);
    p[d] = 1;
    return p;
}

Point plus(Point p, int d, int by)
{
    p[d] += by;
    return p;
}

std::string point_str(const Point& p)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

int phi(const Point& p)
{
    int s = 0;
    for (int x : p) s += x;
    return s;
}

Rhombus::Rhombus(Point b, int d1, int d2) : base(std::move(b)), j(std::min(d1, d2)), k(std::max(d1, d2))
{
    if (d1 == d2) throw Error(ErrorKind::BadInput, "rhombus needs two distinct directions");
}

std::array<Point, 4> Rhombus::corners() const
{
    return {base, plus(base, j), plus(plus(base, j), k), plus(base, k)};
}

Tiling::Tiling(ZonogonSpec spec, std::vector<Rhombus> rhombi)
    : spec_(std::move(spec)), rhombi_(std::move(rhombi))
{
    std::sort(rhombi_.begin(), rhombi_.end());
    rhombi_.erase(std::unique(rhombi_.begin(), rhombi_.end()), rhombi_.end());
}

std::set<Point> Tiling::vertices() const
{
    std::set<Point> out;
    for (const auto& r : rhombi_)
        for (auto& c : r.corners()) out.insert(c);
    if (rhombi_.empty()) out.insert(spec_.zero());
    return out;
}

std::set<Edge> Tiling::edges() const
{
    std::set<Edge> out;
    for (const auto& r : rhombi_) {
        out.insert({r.base, r.j});
        out.insert({r.base, r.k});
        out.insert({plus(r.base, r.k), r.j});
        out.insert({plus(r.base, r.j), r.k});
    }
    return out;
}

bool Tiling::has_vertex(const Point& p) const
{
    for (const auto& r : rhombi_)
        for (auto& c : r.corners())
            if (c == p) return true;
    return false;
}

bool Tiling::has_rhombus(const Rhombus& r) const
{
    return std::binary_search(rhombi_.begin(), rhombi_.end(), r);
}

VertexStar Tiling::star(const Point& p) const
{
    std::set<int> up, down;
    for (const auto& e : edges()) {
        if (e.base == p) up.insert(e.dir);
        if (e.base[e.dir] + 1 == p[e.dir] && plus(e.base, e.dir) == p) down.insert(e.dir);
    }
    return {{up.begin(), up.end()}, {down.begin(), down.end()}};
}

std::map<Point, VertexStar> stars(const Tiling& t)
{
    std::map<Point, std::set<int>> up, down;
    for (const auto& e : t.edges()) {
        up[e.base].insert(e.dir);
        down[plus(e.base, e.dir)].insert(e.dir);
    }
    std::map<Point, VertexStar> out;
    for (const auto& v : t.vertices()) {
        auto& s = out[v];
        s.up.assign(up[v].begin(), up[v].end());
        s.down.assign(down[v].begin(), down[v].end());
    }
    return out;
}

int Tiling::phi() const
{
    int s = 0;
    for (const auto& v : vertices()) s += zonorec::phi(v);
    return s;
}

Report validate_tiling(const Tiling& t)
{
    const auto& spec = t.spec();
    for (const auto& r : t.rhombi()) {
        if (r.j < 0 || r.k >= spec.n() || r.j >= r.k)
            return Report::fail("bad directions on rhombus at " + point_str(r.base));
        for (auto& c : r.corners())
            if (!spec.contains(c)) return Report::fail("rhombus corner outside box: " + point_str(c));
    }
    const long nr = static_cast<long>(t.rhombi().size());
    if (nr != spec.expected_rhombi())
        return Report::fail("rhombus count " + std::to_string(nr) + " != " +
                            std::to_string(spec.expected_rhombi()));

    // rhombi on the left / right of each edge, seen along +v_dir
    std::map<Edge, std::pair<int, int>> sides;
    for (const auto& r : t.rhombi()) {
        sides[{r.base, r.j}].first++;
        sides[{plus(r.base, r.k), r.j}].second++;
        sides[{r.base, r.k}].second++;
        sides[{plus(r.base, r.j), r.k}].first++;
    }
    for (const auto& [e, lr] : sides) {
        bool bd = spec.boundary_edge(e.base, e.dir);
        int want_l = 1, want_r = 1;
        if (bd) {
            bool right_chain = true;
            for (int i = 0; i < spec.n(); ++i) {
                if (i < e.dir) right_chain = right_chain && e.base[i] == spec.a()[i];
                if (i > e.dir) right_chain = right_chain && e.base[i] == 0;
            }
            want_l = right_chain ? 1 : 0;
            want_r = right_chain ? 0 : 1;
        }
        if (lr.first != want_l || lr.second != want_r)
            return Report::fail(std::string(bd ? "boundary" : "internal") + " edge " + point_str(e.base) +
                                " dir " + std::to_string(e.dir + 1) + " bounds " +
                                std::to_string(lr.first + lr.second) + " rhombi (left " +
                                std::to_string(lr.first) + ", right " + std::to_string(lr.second) + ")");
    }
    // every boundary edge must be present
    long nb = 0;
    for (const auto& [e, lr] : sides)
        if (spec.boundary_edge(e.base, e.dir)) ++nb;
    long want_nb = 0;
    for (int x : spec.a()) want_nb += 2 * x;
    if (nb != want_nb)
        return Report::fail("boundary edges covered " + std::to_string(nb) + " != " + std::to_string(want_nb));

    auto verts = t.vertices();
    if (static_cast<long>(verts.size()) != spec.expected_vertices())
        return Report::fail("vertex count " + std::to_string(verts.size()) + " != " +
                            std::to_string(spec.expected_vertices()));
    std::map<std::pair<mpq_class, mpq_class>, Point> seen;
    for (const auto& v : verts) {
        auto p = project(spec, v);
        auto [it, fresh] = seen.emplace(std::make_pair(p.x, p.y), v);
        if (!fresh) return Report::fail("vertices " + point_str(it->second) + " and " + point_str(v) +
                                        " project to the same point");
    }
    return Report::pass();
}

std::vector<PlanarRhombus> project(const Tiling& t)
{
    std::vector<PlanarRhombus> out;
    for (const auto& r : t.rhombi()) {
        auto c = r.corners();
        out.push_back({project(t.spec(), c[0]), project(t.spec(), c[1]), project(t.spec(), c[2]),
                       project(t.spec(), c[3])});
    }
    return out;
}

namespace {

using Key = std::pair<mpq_class, mpq_class>;
Key key(const Vec2& v) { return {v.x, v.y}; }

}  // namespace

Tiling lift_decomposition(const ZonogonSpec& spec, const std::vector<PlanarRhombus>& planar)
{
    const int n = spec.n();
    // planar adjacency with direction labels: +d or -(d+1)
    std::map<Key, std::vector<std::pair<Key, int>>> adj;
    for (const auto& pr : planar) {
        for (int c = 0; c < 4; ++c) {
            const Vec2& p = pr[c];
            const Vec2& q = pr[(c + 1) % 4];
            Vec2 d{q.x - p.x, q.y - p.y};
            int label = -1;
            bool neg = false;
            for (int i = 0; i < n; ++i) {
                if (d == spec.v()[i]) label = i;
                if (d.x == -spec.v()[i].x && d.y == -spec.v()[i].y) label = i, neg = true;
            }
            if (label < 0) throw Error(ErrorKind::BadInput, "unmatched edge direction");
            adj[key(p)].push_back({key(q), neg ? -(label + 1) : label + 1});
            adj[key(q)].push_back({key(p), neg ? label + 1 : -(label + 1)});
        }
    }
    Key origin{0, 0};
    if (!adj.count(origin)) throw Error(ErrorKind::BadInput, "not covering P");
    std::map<Key, Point> lift;
    lift[origin] = spec.zero();
    std::queue<Key> bfs;
    bfs.push(origin);
    while (!bfs.empty()) {
        Key cur = bfs.front();
        bfs.pop();
        for (const auto& [nb, lab] : adj[cur]) {
            Point p = lift[cur];
            if (lab > 0) p[lab - 1]++;
            else p[-lab - 1]--;
            auto it = lift.find(nb);
            if (it == lift.end()) {
                lift[nb] = p;
                bfs.push(nb);
            } else if (it->second != p) {
                throw Error(ErrorKind::BadInput, "inconsistent lift");
            }
        }
    }
    std::vector<Rhombus> rh;
    for (const auto& pr : planar) {
        std::vector<Point> cs;
        for (const auto& c : pr) {
            auto it = lift.find(key(c));
            if (it == lift.end()) throw Error(ErrorKind::BadInput, "not covering P");
            cs.push_back(it->second);
        }
        Point lo = *std::min_element(cs.begin(), cs.end(), [](const Point& a, const Point& b) {
            return phi(a) < phi(b);
        });
        Point hi = *std::max_element(cs.begin(), cs.end(), [](const Point& a, const Point& b) {
            return phi(a) < phi(b);
        });
        std::vector<int> dirs;
        for (int i = 0; i < n; ++i)
            if (hi[i] != lo[i]) dirs.push_back(i);
        if (dirs.size() != 2) throw Error(ErrorKind::BadInput, "inconsistent lift");
        rh.emplace_back(lo, dirs[0], dirs[1]);
    }
    Tiling t(spec, rh);
    if (t.rhombi().size() != rh.size()) throw Error(ErrorKind::BadInput, "inconsistent lift");
    for (const auto& r : t.rhombi())
        for (const auto& c : r.corners())
            if (!spec.contains(c)) throw Error(ErrorKind::BadInput, "not covering P");
    auto rep = validate_tiling(t);
    if (!rep.ok) throw Error(ErrorKind::BadInput, "not covering P: " + rep.message);
    return t;
}

namespace {

bool higher(const ZonogonSpec& spec, const Point& a, const Point& b)
{
    auto ya = project(spec, a).y, yb = project(spec, b).y;
    if (ya != yb) return ya > yb;
    return a < b;
}

}  // namespace

Tiling t_min(const ZonogonSpec& spec)
{
    const int n = spec.n();
    // counterclockwise boundary of the unfilled region, starting at 0
    std::vector<Point> cyc;
    Point p = spec.zero();
    for (int d = 0; d < n; ++d)
        for (int m = 0; m < spec.a()[d]; ++m) {
            cyc.push_back(p);
            p[d]++;
        }
    for (int d = 0; d < n; ++d)
        for (int m = 0; m < spec.a()[d]; ++m) {
            cyc.push_back(p);
            p[d]--;
        }

    auto step_dir = [](const Point& from, const Point& to) {
        for (std::size_t i = 0; i < from.size(); ++i)
            if (from[i] != to[i]) return static_cast<int>(i);
        return -1;
    };

    std::vector<Rhombus> rh;
    while (cyc.size() > 2) {
        const std::size_t m = cyc.size();
        std::size_t best = m;
        for (std::size_t i = 0; i < m; ++i) {
            const Point& prev = cyc[(i + m - 1) % m];
            const Point& cur = cyc[i];
            const Point& next = cyc[(i + 1) % m];
            if (phi(prev) + 1 != phi(cur) || phi(next) + 1 != phi(cur)) continue;
            int x = step_dir(prev, cur), y = step_dir(next, cur);
            if (x <= y) continue;
            if (best == m || higher(spec, cur, cyc[best])) best = i;
        }
        if (best == m) throw Error(ErrorKind::Internal, "greedy fill found no angle");
        const Point prev = cyc[(best + m - 1) % m];
        const Point next = cyc[(best + 1) % m];
        int x = step_dir(prev, cyc[best]), y = step_dir(next, cyc[best]);
        Point w = plus(plus(cyc[best], x, -1), y, -1);
        rh.emplace_back(w, x, y);
        cyc[best] = w;
        // drop spikes A,B,A left behind
        bool changed = true;
        while (changed && cyc.size() > 2) {
            changed = false;
            const std::size_t k = cyc.size();
            for (std::size_t i = 0; i < k; ++i) {
                if (cyc[(i + k - 1) % k] == cyc[(i + 1) % k]) {
                    std::size_t a = i, b = (i + 1) % k;
                    if (a > b) std::swap(a, b);
                    cyc.erase(cyc.begin() + b);
                    cyc.erase(cyc.begin() + a);
                    changed = true;
                    break;
                }
            }
        }
    }
    Tiling t(spec, rh);
    auto rep = validate_tiling(t);
    if (!rep.ok) throw Error(ErrorKind::Internal, "greedy minimal tiling invalid: " + rep.message);
    return t;
}

std::set<Point> t_min_vertices(const ZonogonSpec& spec)
{
    const int n = spec.n();
    const auto& a = spec.a();
    std::set<Point> out{spec.zero()};
    for (int r = 0; r < n; ++r)
        for (int m = 1; m <= a[r]; ++m) out.insert(plus(spec.zero(), r, m));
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (int b = 1; b <= a[r]; ++b)
                for (int b2 = 1; b2 <= a[s]; ++b2) {
                    Point p = spec.zero();
                    p[r] = b;
                    for (int i = r + 1; i < s; ++i) p[i] = a[i];
                    p[s] = b2;
                    out.insert(p);
                }
    return out;
}

namespace {

// Dual tiling of the line arrangement <x, v_r> = q[r][m]; nullopt if three lines meet.
std::optional<Tiling> arrangement_tiling(const ZonogonSpec& spec, const std::vector<std::vector<mpq_class>>& q)
{
    const int n = spec.n();
    const auto& v = spec.v();
    std::vector<Rhombus> rh;
    for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
            for (std::size_t mr = 0; mr < q[r].size(); ++mr)
                for (std::size_t ms = 0; ms < q[s].size(); ++ms) {
                    mpq_class det = cross(v[r], v[s]);
                    mpq_class x = (q[r][mr] * v[s].y - q[s][ms] * v[r].y) / det;
                    mpq_class y = (v[r].x * q[s][ms] - v[s].x * q[r][mr]) / det;
                    Point base(n, 0);
                    base[r] = static_cast<int>(mr);
                    base[s] = static_cast<int>(ms);
                    for (int t = 0; t < n; ++t) {
                        if (t == r || t == s) continue;
                        mpq_class val = x * v[t].x + y * v[t].y;
                        int cnt = 0;
                        for (const auto& qq : q[t]) {
                            if (qq == val) return std::nullopt;
                            if (qq < val) ++cnt;
                        }
                        base[t] = cnt;
                    }
                    rh.emplace_back(base, r, s);
                }
    return Tiling(spec, rh);
}

std::vector<mpq_class> offsets(std::mt19937_64& rng, int negatives, int total, long lo, long hi)
{
    std::uniform_int_distribution<long> mag(lo, hi);
    std::set<long> neg, pos;
    while (static_cast<int>(neg.size()) < negatives) neg.insert(-mag(rng));
    while (static_cast<int>(pos.size()) < total - negatives) pos.insert(mag(rng));
    std::vector<mpq_class> out;
    for (long x : neg) out.emplace_back(x);
    for (long x : pos) out.emplace_back(x);
    return out;
}

constexpr int kRetryBudget = 200;

}  // namespace

Tiling tiling_through_vertex(const ZonogonSpec& spec, const Point& I, std::uint64_t seed)
{
    if (!spec.contains(I)) throw Error(ErrorKind::Precondition, "point " + point_str(I) + " not in box");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<std::vector<mpq_class>> q;
        for (int r = 0; r < spec.n(); ++r) q.push_back(offsets(rng, I[r], spec.a()[r], 1, 1000000));
        auto t = arrangement_tiling(spec, q);
        if (!t) continue;
        if (!validate_tiling(*t).ok || !t->has_vertex(I))
            throw Error(ErrorKind::Internal, "arrangement tiling malformed");
        return *t;
    }
    throw Error(ErrorKind::Internal, "retry budget exceeded");
}

std::array<Rhombus, 3> cube_faces(const Cube& c, CubeSide side)
{
    const Point& I = c.base;
    if (side == CubeSide::Bottom)
        return {Rhombus(I, c.j, c.k), Rhombus(I, c.k, c.l), Rhombus(plus(I, c.k), c.j, c.l)};
    return {Rhombus(plus(I, c.j), c.k, c.l), Rhombus(plus(I, c.l), c.j, c.k), Rhombus(I, c.j, c.l)};
}

Tiling tiling_with_cube_faces(const ZonogonSpec& spec, const Cube& cube, CubeSide side, std::uint64_t seed)
{
    const int n = spec.n();
    if (!(cube.j < cube.k && cube.k < cube.l) || cube.j < 0 || cube.l >= n)
        throw Error(ErrorKind::Precondition, "cube directions must satisfy j < k < l");
    Point far = plus(plus(plus(cube.base, cube.j), cube.k), cube.l);
    if (!spec.contains(cube.base) || !spec.contains(far))
        throw Error(ErrorKind::Precondition, "cube leaves the box");
    // the region at the origin is the vertex the three faces share
    Point origin = side == CubeSide::Bottom ? plus(cube.base, cube.k)
                                            : plus(plus(cube.base, cube.j), cube.l);
    auto faces = cube_faces(cube, side);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        std::vector<std::vector<mpq_class>> q;
        for (int r = 0; r < n; ++r) q.push_back(offsets(rng, origin[r], spec.a()[r], 1, 1000000));
        std::uniform_int_distribution<long> small(1, 1000);
        std::array<long, 3> eps{small(rng), small(rng), small(rng)};
        const std::array<int, 3> dirs{cube.j, cube.k, cube.l};
        for (int halvings = 0; halvings < 64; ++halvings) {
            mpq_class scale(1, 2000);
            scale /= mpz_class(1) << halvings;
            for (int t = 0; t < 3; ++t) {
                int d = dirs[t];
                std::size_t idx = static_cast<std::size_t>(cube.base[d]);
                bool negative = idx < static_cast<std::size_t>(origin[d]);
                q[d][idx] = (negative ? -1 : 1) * eps[t] * scale;
            }
            auto t = arrangement_tiling(spec, q);
            if (!t) break;
            if (t->has_rhombus(faces[0]) && t->has_rhombus(faces[1]) && t->has_rhombus(faces[2])) {
                if (!validate_tiling(*t).ok) throw Error(ErrorKind::Internal, "arrangement tiling malformed");
                return *t;
            }
        }
    }
    throw Error(ErrorKind::Internal, "retry budget exceeded");
}

}  // namespace zonorec
