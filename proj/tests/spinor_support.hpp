// Random inputs for the spinor checks.
#pragma once

#include <algorithm>
#include <random>

#include "zonorec/spinor.hpp"

namespace oracle {

using namespace zonorec;

inline mpq_class rnd(std::mt19937_64& rng, int lo = -4, int hi = 4)
{
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

inline Spinor random_spinor(int n, std::mt19937_64& rng)
{
    Spinor s(n);
    for (auto& x : s.c) x = rnd(rng);
    return s;
}

inline Vector2n random_vector(int n, std::mt19937_64& rng)
{
    Vector2n v(n);
    for (int i = 0; i < n; ++i) {
        v.w[i] = rnd(rng);
        v.wv[i] = rnd(rng);
    }
    return v;
}

// <v,v> = sum w_i wv_i; solve the last dual coordinate for 1.
inline Vector2n random_unit(int n, std::mt19937_64& rng)
{
    while (true) {
        Vector2n v = random_vector(n, rng);
        if (v.w[n - 1] == 0) continue;
        mpq_class rest = 0;
        for (int i = 0; i + 1 < n; ++i) rest += v.w[i] * v.wv[i];
        v.wv[n - 1] = (1 - rest) / v.w[n - 1];
        return v;
    }
}

inline Matrix random_skew(int m, std::mt19937_64& rng)
{
    Matrix a(m, std::vector<mpq_class>(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            a[i][j] = rnd(rng);
            a[j][i] = -a[i][j];
        }
    return a;
}

// Every instance of x_I x_{I+jkl} + x_{I+jl} x_{I+k} = x_{I+jk} x_{I+l} + x_{I+kl} x_{I+j}.
inline bool trbi_oracle(const SpinPoint& p)
{
    const int n = p.n;
    auto x = [&](unsigned m) { return p.at(mask_point(n, m)); };
    for (unsigned I = 0; I < (1u << n); ++I)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const unsigned J = 1u << j, K = 1u << k, L = 1u << l;
                    if (I & (J | K | L)) continue;
                    if (x(I) * x(I | J | K | L) + x(I | J | L) * x(I | K) != x(I | J | K) * x(I | L) + x(I | K | L) * x(I | J))
                        return false;
                }
    return true;
}

// Projection of the basis spinors at a random (I, j<k<l): the sign table with a, b, c, d the
// numbers of ones of I before j, between j and k, between k and l, after l; the four
// complementary pairs then share the sign (-1)^(b+d).
inline bool qvs_instance_ok(int n, std::mt19937_64& rng)
{
    std::vector<int> d(n);
    for (int i = 0; i < n; ++i) d[i] = i;
    std::shuffle(d.begin(), d.end(), rng);
    std::sort(d.begin(), d.begin() + 3);
    const int j = d[0], k = d[1], l = d[2];
    std::bernoulli_distribution coin(0.5);
    Point I(n);
    for (int i = 0; i < n; ++i)
        if (i != j && i != k && i != l) I[i] = coin(rng);
    auto ones = [&](int lo, int hi) {
        int c = 0;
        for (int i = lo; i < hi; ++i) c += I[i];
        return c;
    };
    const int b = ones(j + 1, k), c = ones(k + 1, l), dd = ones(l + 1, n);
    auto pi = [&](std::initializer_list<int> extra) {
        Point J = I;
        for (int e : extra) J[e] = 1;
        return projection_pi(I, j, k, l, Spinor::basis(n, point_mask(J)));
    };
    auto v3 = [](unsigned m, int e) {
        Spinor s(3);
        s.c[m] = e % 2 ? -1 : 1;
        return s;
    };
    // bit 0 of the 3-index result is j, bit 1 is k, bit 2 is l
    bool ok = pi({}) == v3(0b000, 0) && pi({k, l}) == v3(0b110, c) && pi({j, l}) == v3(0b101, b + c) &&
              pi({j, k}) == v3(0b011, b) && pi({j, k, l}) == v3(0b111, b + dd) &&
              pi({j}) == v3(0b001, b + c + dd) && pi({k}) == v3(0b010, c + dd) && pi({l}) == v3(0b100, dd);
    auto lead = [](const Spinor& s) {
        for (const auto& x : s.c)
            if (x != 0) return x;
        return mpq_class(0);
    };
    const int pair = (b + dd) % 2 ? -1 : 1;
    ok = ok && lead(pi({})) * lead(pi({j, k, l})) == pair && lead(pi({j, k})) * lead(pi({l})) == pair &&
         lead(pi({k, l})) * lead(pi({j})) == pair && lead(pi({j, l})) * lead(pi({k})) == pair;
    return ok;
}

}  // namespace oracle
