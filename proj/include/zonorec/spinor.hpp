#pragma once

#include <map>
#include <string>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zonorec/zonogon.hpp"

namespace zonorec {

using Matrix = std::vector<std::vector<mpq_class>>;

std::size_t rank(Matrix m);
// Basis of {x : m x = 0}; `cols` is needed when m has no rows.
std::vector<std::vector<mpq_class>> nullspace(const Matrix& m, std::size_t cols);
mpq_class determinant(Matrix m);
mpq_class pfaffian(const Matrix& m);

// w_1 e_1 + ... + w_n e_n + wv_1 e_1^ + ... + wv_n e_n^ in V = W + W^.
struct Vector2n {
    std::vector<mpq_class> w, wv;

    explicit Vector2n(int n = 0) : w(n), wv(n) {}
    int n() const { return static_cast<int>(w.size()); }
    static Vector2n e(int n, int i);
    static Vector2n ev(int n, int i);
    std::vector<mpq_class> flat() const;
    static Vector2n from_flat(const std::vector<mpq_class>& x);
};

mpq_class inner(const Vector2n& a, const Vector2n& b);

// Largest n with dense 2^n coordinates.
inline constexpr int max_spinor_n = 8;

// Coordinates on the basis v_J of the exterior algebra; bit i of J stands for e_{i+1}.
struct Spinor {
    int n = 0;
    std::vector<mpq_class> c;

    explicit Spinor(int n_ = 0) : n(n_)
    {
        if (n_ < 0 || n_ > max_spinor_n)
            throw Error(ErrorKind::Precondition, "spinor size n=" + std::to_string(n_) + " outside 0..8");
        c.resize(std::size_t(1) << n_);
    }
    static Spinor basis(int n, unsigned mask);
    bool is_zero() const;
    bool operator==(const Spinor& o) const { return n == o.n && c == o.c; }
};

Spinor wedge(int i, const Spinor& s);
Spinor contract(int i, const Spinor& s);
Spinor clifford_act(const Vector2n& v, const Spinor& s);
mpq_class bilinear_form_B(const Spinor& s1, const Spinor& s2);

struct IsotropicSubspace {
    std::vector<Vector2n> basis;
    int dim() const { return static_cast<int>(basis.size()); }
};

bool is_isotropic(const IsotropicSubspace& L);
int span_dim(const std::vector<Vector2n>& vs);
int intersection_dim(const IsotropicSubspace& a, const IsotropicSubspace& b);

Spinor pure_spinor(const IsotropicSubspace& L, int n);
// (L_plus, L_minus): the two maximal isotropic subspaces through K, L_plus even.
std::pair<IsotropicSubspace, IsotropicSubspace> complete_isotropic_pair(const IsotropicSubspace& K, int n);

// Random isotropic subspace: the image of span(e_1..e_dim) under random reflections.
IsotropicSubspace random_isotropic(int n, int dim, std::mt19937_64& rng, int reflections = 0);

// Coordinates x_I indexed by 0/1 lattice points of the unit cube.
struct SpinPoint {
    int n = 0;
    std::map<Point, mpq_class> even, odd;

    mpq_class at(const Point& I) const;
    void set(const Point& I, const mpq_class& v);
};

Point mask_point(int n, unsigned mask);
unsigned point_mask(const Point& p);

SpinPoint spin_coordinates(const IsotropicSubspace& K, int n);
Report verify_trbi(const SpinPoint& p);
// All instances of the all-plus cube relation on the unit cube.
Report verify_trc(const SpinPoint& p);
SpinPoint sign_twist(const SpinPoint& p);
Spinor even_part(const SpinPoint& p);
Spinor odd_part(const SpinPoint& p);

// Contraction by v_I^ followed by restriction to the span of e_j, e_k, e_l.
Spinor projection_pi(const Point& I, int j, int k, int l, const Spinor& s);

struct PurityResult {
    bool is_pure = false;
    IsotropicSubspace annihilator;
};

PurityResult purity_check(const Spinor& s);

// Spin coordinates of `samples` random isotropic (n-1)-planes satisfy (trbi).
Report check_grassmann_forward(int n, std::size_t samples, std::uint64_t seed);
// Untwisted recurrence values on the unit n-cube from random positive data give two pure
// spinors whose annihilators meet in dimension n-1.
Report check_grassmann_converse(int n, std::size_t samples, std::uint64_t seed);

}  // namespace zonorec
