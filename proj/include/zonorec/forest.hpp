#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "zonorec/zonogon.hpp"

namespace zonorec {

struct FundamentalForest {
    std::set<Edge> edges;
    std::map<Point, Point> parent;  // child -> parent, edges oriented upward

    std::set<Point> leaves() const;
    std::set<Point> roots() const;
    // Forest edges pointing down from v, as directions.
    std::vector<int> link(const Point& v) const;
    bool empty() const { return edges.empty(); }
    bool operator==(const FundamentalForest& o) const { return edges == o.edges; }
};

enum class FlipDir { Up, Down };

// Up removes base+e_k and inserts base+e_j+e_l; down is the inverse.
struct FlipMove {
    Point base;
    int j = 0, k = 0, l = 0;
    FlipDir dir = FlipDir::Up;

    Point removed() const;
    Point inserted() const;
    FlipMove inverse() const;
    bool operator==(const FlipMove&) const = default;
};

struct FlipPath {
    Tiling start;
    std::vector<FlipMove> moves;
};

struct Flippable {
    std::set<Point> down;
    std::set<Point> up;
};

FundamentalForest fundamental_forest(const Tiling& t);
Flippable flippable_vertices(const Tiling& t);

// Flip available at vertex `at`, if any.
std::optional<FlipMove> flip_at(const Tiling& t, const Point& at);
std::pair<Tiling, FlipMove> apply_flip(const Tiling& t, const Point& at);
Tiling apply_move(const Tiling& t, const FlipMove& m);

Tiling replay(const FlipPath& p);
// Every tiling along the path, start included.
std::vector<Tiling> trace(const FlipPath& p);

// Leaf with least exact y, ties broken by lexicographically least coordinates.
Point lowest(const ZonogonSpec& spec, const std::set<Point>& pts);

FlipPath normalize_to_min(const Tiling& t);
FlipPath connect(const Tiling& t, const Tiling& t2);
FlipPath connect_through(const Tiling& t, const Tiling& t2, const Point& I0);
// Breadth-first search restricted to tilings containing I0; test oracle.
std::optional<FlipPath> connect_through_bfs(const Tiling& t, const Tiling& t2, const Point& I0,
                                            std::size_t cap = 100000);

std::vector<Rhombus> rhombus_chain(const Tiling& t, const Edge& e);

struct Cell2 {
    enum Kind { Square, Octagon } kind;
    std::vector<FlipMove> flips;  // the two commuting flips of a square
    Point base;                   // octagon: base of the 4-cube
    std::array<int, 4> dirs{};    // octagon: its directions
};

std::vector<Cell2> cells_2(const ZonogonSpec& spec, const Tiling& t);

}  // namespace zonorec
