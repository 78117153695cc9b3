#pragma once

#include <array>
#include <compare>
#include <map>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zonorec/error.hpp"

namespace zonorec {

// Lattice point of the box Pi. Direction indices are 0-based internally.
using Point = std::vector<int>;

struct Vec2 {
    mpq_class x, y;
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

mpq_class cross(const Vec2& a, const Vec2& b);

class ZonogonSpec {
public:
    ZonogonSpec() = default;
    explicit ZonogonSpec(std::vector<int> a);

    int n() const { return static_cast<int>(a_.size()); }
    const std::vector<int>& a() const { return a_; }
    const std::vector<Vec2>& v() const { return v_; }

    bool contains(const Point& p) const;
    bool on_boundary(const Point& p) const;
    // Edge (base, base + e_d) lies on the boundary of P.
    bool boundary_edge(const Point& base, int d) const;

    Point zero() const { return Point(a_.size(), 0); }
    Point top() const { return a_; }
    std::vector<Point> lattice_points() const;

    long expected_rhombi() const;
    long expected_vertices() const;

    bool operator==(const ZonogonSpec& o) const { return a_ == o.a_; }

private:
    std::vector<int> a_;
    std::vector<Vec2> v_;
};

Vec2 project(const ZonogonSpec& spec, const Point& p);

Point unit(int n, int d);
Point plus(Point p, int d, int by = 1);
std::string point_str(const Point& p);
int phi(const Point& p);

// Unit 2-face {base + x e_j + y e_k}, j < k.
struct Rhombus {
    Point base;
    int j = 0, k = 0;

    Rhombus() = default;
    Rhombus(Point b, int d1, int d2);
    std::array<Point, 4> corners() const;  // base, +e_j, +e_j+e_k, +e_k
    auto operator<=>(const Rhombus&) const = default;
    bool operator==(const Rhombus&) const = default;
};

struct Edge {
    Point base;
    int dir = 0;
    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;
};

// Edges incident to a vertex of a tiling.
struct VertexStar {
    std::vector<int> up;    // directions d with (V, V+e_d) an edge
    std::vector<int> down;  // directions d with (V-e_d, V) an edge
};

class Tiling {
public:
    Tiling() = default;
    Tiling(ZonogonSpec spec, std::vector<Rhombus> rhombi);

    const ZonogonSpec& spec() const { return spec_; }
    const std::vector<Rhombus>& rhombi() const { return rhombi_; }

    std::set<Point> vertices() const;
    std::set<Edge> edges() const;
    bool has_vertex(const Point& p) const;
    bool has_rhombus(const Rhombus& r) const;
    VertexStar star(const Point& p) const;
    int phi() const;

    bool operator==(const Tiling& o) const { return spec_ == o.spec_ && rhombi_ == o.rhombi_; }
    bool operator<(const Tiling& o) const { return rhombi_ < o.rhombi_; }

private:
    ZonogonSpec spec_;
    std::vector<Rhombus> rhombi_;
};

std::map<Point, VertexStar> stars(const Tiling& t);

Report validate_tiling(const Tiling& t);

using PlanarRhombus = std::array<Vec2, 4>;
std::vector<PlanarRhombus> project(const Tiling& t);
Tiling lift_decomposition(const ZonogonSpec& spec, const std::vector<PlanarRhombus>& planar);

Tiling t_min(const ZonogonSpec& spec);
std::set<Point> t_min_vertices(const ZonogonSpec& spec);

Tiling tiling_through_vertex(const ZonogonSpec& spec, const Point& I, std::uint64_t seed = 0);

enum class CubeSide { Bottom, Top };

struct Cube {
    Point base;
    int j = 0, k = 0, l = 0;
};

Tiling tiling_with_cube_faces(const ZonogonSpec& spec, const Cube& cube, CubeSide side,
                              std::uint64_t seed = 0);
std::array<Rhombus, 3> cube_faces(const Cube& cube, CubeSide side);

std::vector<Tiling> enumerate_tilings(const ZonogonSpec& spec, std::size_t cap);

}  // namespace zonorec
