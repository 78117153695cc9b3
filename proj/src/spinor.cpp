#include "zonorec/spinor.hpp"

#include <bit>
#include <functional>
#include <numeric>

#include "zonorec/engine.hpp"

namespace zonorec {

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t p = row;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const mpq_class inv = 1 / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const mpq_class f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank(Matrix m)
{
    if (m.empty()) return 0;
    return rref(m, m[0].size()).size();
}

std::vector<std::vector<mpq_class>> nullspace(const Matrix& m0, std::size_t cols)
{
    Matrix m = m0;
    auto pivots = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<mpq_class>> out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        out.push_back(std::move(v));
    }
    return out;
}

mpq_class determinant(Matrix m)
{
    const std::size_t n = m.size();
    mpq_class det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

mpq_class pfaffian(const Matrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw Error(ErrorKind::Precondition, "matrix is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (m[i][j] != -m[j][i]) throw Error(ErrorKind::Precondition, "matrix is not skew-symmetric");
    }
    if (n % 2) return 0;
    std::function<mpq_class(const std::vector<std::size_t>&)> pf = [&](const std::vector<std::size_t>& idx) {
        if (idx.empty()) return mpq_class(1);
        mpq_class sum = 0;
        for (std::size_t p = 1; p < idx.size(); ++p) {
            const mpq_class& a = m[idx[0]][idx[p]];
            if (a == 0) continue;
            std::vector<std::size_t> rest;
            for (std::size_t q = 1; q < idx.size(); ++q)
                if (q != p) rest.push_back(idx[q]);
            mpq_class term = a * pf(rest);
            if (p % 2 == 0) term = -term;
            sum += term;
        }
        return sum;
    };
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    return pf(all);
}

Vector2n Vector2n::e(int n, int i)
{
    Vector2n v(n);
    v.w.at(i) = 1;
    return v;
}

Vector2n Vector2n::ev(int n, int i)
{
    Vector2n v(n);
    v.wv.at(i) = 1;
    return v;
}

std::vector<mpq_class> Vector2n::flat() const
{
    std::vector<mpq_class> out = w;
    out.insert(out.end(), wv.begin(), wv.end());
    return out;
}

Vector2n Vector2n::from_flat(const std::vector<mpq_class>& x)
{
    const int n = static_cast<int>(x.size() / 2);
    Vector2n v(n);
    for (int i = 0; i < n; ++i) {
        v.w[i] = x[i];
        v.wv[i] = x[n + i];
    }
    return v;
}

mpq_class inner(const Vector2n& a, const Vector2n& b)
{
    mpq_class s = 0;
    for (int i = 0; i < a.n(); ++i) s += a.wv[i] * b.w[i] + b.wv[i] * a.w[i];
    return s / 2;
}

Spinor Spinor::basis(int n, unsigned mask)
{
    Spinor s(n);
    s.c.at(mask) = 1;
    return s;
}

bool Spinor::is_zero() const
{
    for (const auto& x : c)
        if (x != 0) return false;
    return true;
}

namespace {

int below(unsigned mask, int i) { return std::popcount(mask & ((1u << i) - 1)); }

}  // namespace

Spinor wedge(int i, const Spinor& s)
{
    Spinor out(s.n);
    const unsigned bit = 1u << i;
    for (unsigned J = 0; J < s.c.size(); ++J) {
        if ((J & bit) || s.c[J] == 0) continue;
        out.c[J | bit] += below(J, i) % 2 ? -s.c[J] : s.c[J];
    }
    return out;
}

Spinor contract(int i, const Spinor& s)
{
    Spinor out(s.n);
    const unsigned bit = 1u << i;
    for (unsigned J = 0; J < s.c.size(); ++J) {
        if (!(J & bit) || s.c[J] == 0) continue;
        out.c[J ^ bit] += below(J, i) % 2 ? -s.c[J] : s.c[J];
    }
    return out;
}

Spinor clifford_act(const Vector2n& v, const Spinor& s)
{
    if (v.n() != s.n) throw Error(ErrorKind::Precondition, "vector and spinor sizes differ");
    Spinor out(s.n);
    for (int i = 0; i < s.n; ++i) {
        if (v.w[i] != 0) {
            auto t = wedge(i, s);
            for (std::size_t J = 0; J < t.c.size(); ++J) out.c[J] += v.w[i] * t.c[J];
        }
        if (v.wv[i] != 0) {
            auto t = contract(i, s);
            for (std::size_t J = 0; J < t.c.size(); ++J) out.c[J] += v.wv[i] * t.c[J];
        }
    }
    return out;
}

mpq_class bilinear_form_B(const Spinor& s1, const Spinor& s2)
{
    if (s1.n != s2.n) throw Error(ErrorKind::Precondition, "spinor sizes differ");
    const int n = s1.n;
    const unsigned full = (1u << n) - 1;
    mpq_class sum = 0;
    for (unsigned J = 0; J <= full; ++J) {
        const unsigned Jc = full ^ J;
        if (s1.c[J] == 0 || s2.c[Jc] == 0) continue;
        const int k = std::popcount(J);
        // sign of the shuffle taking (J, J^c) to increasing order
        int inv = 0;
        for (int i = 0; i < n; ++i)
            if (J & (1u << i)) inv += below(Jc, i);
        int sign = ((k * (k - 1) / 2) + inv) % 2 ? -1 : 1;
        sum += sign * s1.c[J] * s2.c[Jc];
    }
    return sum;
}

bool is_isotropic(const IsotropicSubspace& L)
{
    for (const auto& a : L.basis)
        for (const auto& b : L.basis)
            if (inner(a, b) != 0) return false;
    return true;
}

int span_dim(const std::vector<Vector2n>& vs)
{
    Matrix m;
    for (const auto& v : vs) m.push_back(v.flat());
    return static_cast<int>(rank(m));
}

int intersection_dim(const IsotropicSubspace& a, const IsotropicSubspace& b)
{
    std::vector<Vector2n> all = a.basis;
    all.insert(all.end(), b.basis.begin(), b.basis.end());
    return span_dim(a.basis) + span_dim(b.basis) - span_dim(all);
}

namespace {

Spinor normalized(std::vector<mpq_class> x, int n)
{
    mpz_class den = 1, num = 0;
    for (const auto& q : x) {
        if (q == 0) continue;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    for (auto& q : x) q *= den;
    for (const auto& q : x) mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
    bool flip = false;
    for (const auto& q : x)
        if (q != 0) {
            flip = q < 0;
            break;
        }
    Spinor s(n);
    for (std::size_t J = 0; J < x.size(); ++J) s.c[J] = (flip ? -x[J] : x[J]) / num;
    return s;
}

}  // namespace

Spinor pure_spinor(const IsotropicSubspace& L, int n)
{
    const std::size_t N = std::size_t(1) << n;
    Matrix eqs;
    for (const auto& b : L.basis) {
        // column J of the action matrix is b . v_J
        Matrix act(N, std::vector<mpq_class>(N));
        for (unsigned J = 0; J < N; ++J) {
            auto col = clifford_act(b, Spinor::basis(n, J));
            for (std::size_t r = 0; r < N; ++r) act[r][J] = col.c[r];
        }
        for (auto& row : act) eqs.push_back(std::move(row));
    }
    auto ker = nullspace(eqs, N);
    if (ker.size() != 1)
        throw Error(ErrorKind::Precondition, "solution space dimension " + std::to_string(ker.size()) + " != 1");
    return normalized(ker[0], n);
}

namespace {

bool rational_sqrt(const mpq_class& x, mpq_class& out)
{
    if (x < 0) return false;
    if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) return false;
    mpz_class a, b;
    mpz_sqrt(a.get_mpz_t(), x.get_num_mpz_t());
    mpz_sqrt(b.get_mpz_t(), x.get_den_mpz_t());
    out = mpq_class(a, b);
    out.canonicalize();
    return true;
}

Vector2n combo(const mpq_class& a, const Vector2n& u, const mpq_class& b, const Vector2n& v)
{
    Vector2n out(u.n());
    for (int i = 0; i < u.n(); ++i) {
        out.w[i] = a * u.w[i] + b * v.w[i];
        out.wv[i] = a * u.wv[i] + b * v.wv[i];
    }
    return out;
}

int parity(const Spinor& s)
{
    int par = -1;
    for (unsigned J = 0; J < s.c.size(); ++J) {
        if (s.c[J] == 0) continue;
        int p = std::popcount(J) % 2;
        if (par >= 0 && p != par) return -1;
        par = p;
    }
    return par;
}

}  // namespace

std::pair<IsotropicSubspace, IsotropicSubspace> complete_isotropic_pair(const IsotropicSubspace& K, int n)
{
    if (K.dim() != n - 1 || span_dim(K.basis) != n - 1)
        throw Error(ErrorKind::Precondition, "need an independent (n-1)-dimensional subspace");
    if (!is_isotropic(K)) throw Error(ErrorKind::Precondition, "subspace is not isotropic");
    // K-perp: x with <k, x> = 0
    Matrix eqs;
    for (const auto& k : K.basis) {
        std::vector<mpq_class> row = k.wv;
        row.insert(row.end(), k.w.begin(), k.w.end());
        eqs.push_back(row);
    }
    auto perp = nullspace(eqs, 2 * n);
    std::vector<Vector2n> ext;
    std::vector<Vector2n> span = K.basis;
    for (const auto& x : perp) {
        if (ext.size() == 2) break;
        auto v = Vector2n::from_flat(x);
        span.push_back(v);
        if (span_dim(span) == static_cast<int>(span.size())) ext.push_back(v);
        else span.pop_back();
    }
    if (ext.size() != 2) throw Error(ErrorKind::Internal, "orthogonal complement has the wrong dimension");
    const mpq_class g11 = inner(ext[0], ext[0]), g12 = inner(ext[0], ext[1]), g22 = inner(ext[1], ext[1]);
    Vector2n l1(n), l2(n);
    if (g11 == 0) {
        l1 = ext[0];
        if (g12 == 0) throw Error(ErrorKind::Internal, "degenerate form on the quotient");
        l2 = combo(-g22 / (2 * g12), ext[0], 1, ext[1]);
    } else {
        mpq_class root;
        if (!rational_sqrt(g12 * g12 - g11 * g22, root))
            throw Error(ErrorKind::Internal, "form on the quotient is not split over Q");
        l1 = combo((-g12 + root) / g11, ext[0], 1, ext[1]);
        l2 = combo((-g12 - root) / g11, ext[0], 1, ext[1]);
    }
    IsotropicSubspace a{K.basis}, b{K.basis};
    a.basis.push_back(l1);
    b.basis.push_back(l2);
    const int pa = parity(pure_spinor(a, n)), pb = parity(pure_spinor(b, n));
    if (pa < 0 || pb < 0 || pa == pb) throw Error(ErrorKind::Internal, "pure spinor parities do not split");
    if (pa == 0) return {a, b};
    return {b, a};
}

IsotropicSubspace random_isotropic(int n, int dim, std::mt19937_64& rng, int reflections)
{
    if (reflections <= 0) reflections = 2 * n + 2;
    IsotropicSubspace K;
    for (int i = 0; i < dim; ++i) K.basis.push_back(Vector2n::e(n, i));
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int r = 0; r < reflections; ++r) {
        Vector2n a(n);
        mpq_class aa;
        do {
            for (int i = 0; i < n; ++i) {
                a.w[i] = coef(rng);
                a.wv[i] = coef(rng);
            }
            aa = inner(a, a);
        } while (aa == 0);
        for (auto& x : K.basis) x = combo(1, x, -2 * inner(x, a) / aa, a);
    }
    return K;
}

Point mask_point(int n, unsigned mask)
{
    Point p(n, 0);
    for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1u;
    return p;
}

unsigned point_mask(const Point& p)
{
    unsigned m = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i]) m |= 1u << i;
    return m;
}

mpq_class SpinPoint::at(const Point& I) const
{
    const auto& side = phi(I) % 2 ? odd : even;
    auto it = side.find(I);
    return it == side.end() ? mpq_class(0) : it->second;
}

void SpinPoint::set(const Point& I, const mpq_class& v) { (phi(I) % 2 ? odd : even)[I] = v; }

SpinPoint spin_coordinates(const IsotropicSubspace& K, int n)
{
    auto [lp, lm] = complete_isotropic_pair(K, n);
    const Spinor sp = pure_spinor(lp, n), sm = pure_spinor(lm, n);
    SpinPoint out;
    out.n = n;
    for (unsigned J = 0; J < (1u << n); ++J) {
        const Point I = mask_point(n, J);
        out.set(I, std::popcount(J) % 2 ? sm.c[J] : sp.c[J]);
    }
    return out;
}

namespace {

template <class F>
Report each_cube(const SpinPoint& p, F&& f)
{
    const int n = p.n;
    for (unsigned J = 0; J < (1u << n); ++J)
        for (int j = 0; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    if (J & ((1u << j) | (1u << k) | (1u << l))) continue;
                    auto x = [&](unsigned add) { return p.at(mask_point(n, J | add)); };
                    const unsigned ej = 1u << j, ek = 1u << k, el = 1u << l;
                    mpq_class resid = f(x, ej, ek, el);
                    if (resid != 0)
                        return Report::fail("residual " + resid.get_str() + " at " + point_str(mask_point(n, J)) +
                                            " dirs (" + std::to_string(j + 1) + "," + std::to_string(k + 1) + "," +
                                            std::to_string(l + 1) + ")");
                }
    return Report::pass();
}

}  // namespace

Report verify_trbi(const SpinPoint& p)
{
    return each_cube(p, [](auto&& x, unsigned ej, unsigned ek, unsigned el) -> mpq_class {
        return x(0) * x(ej | ek | el) + x(ej | el) * x(ek) - x(ej | ek) * x(el) - x(ek | el) * x(ej);
    });
}

Report verify_trc(const SpinPoint& p)
{
    return each_cube(p, [](auto&& x, unsigned ej, unsigned ek, unsigned el) -> mpq_class {
        return x(ej | el) * x(ek) - x(0) * x(ej | ek | el) - x(ej | ek) * x(el) - x(ek | el) * x(ej);
    });
}

SpinPoint sign_twist(const SpinPoint& p)
{
    SpinPoint out = p;
    for (auto* side : {&out.even, &out.odd})
        for (auto& [I, v] : *side)
            if (phi(I) % 4 == 0) v = -v;
    return out;
}

Spinor even_part(const SpinPoint& p)
{
    Spinor s(p.n);
    for (const auto& [I, v] : p.even) s.c[point_mask(I)] = v;
    return s;
}

Spinor odd_part(const SpinPoint& p)
{
    Spinor s(p.n);
    for (const auto& [I, v] : p.odd) s.c[point_mask(I)] = v;
    return s;
}

Spinor projection_pi(const Point& I, int j, int k, int l, const Spinor& s)
{
    if (static_cast<int>(I.size()) != s.n || I[j] || I[k] || I[l])
        throw Error(ErrorKind::Precondition, "I must vanish in directions j, k, l");
    Spinor cur = s;
    for (int i = 0; i < s.n; ++i)
        if (I[i]) cur = contract(i, cur);
    Spinor out(3);
    const int dirs[3] = {j, k, l};
    for (unsigned m = 0; m < 8; ++m) {
        unsigned J = 0;
        for (int b = 0; b < 3; ++b)
            if (m & (1u << b)) J |= 1u << dirs[b];
        out.c[m] = cur.c[J];
    }
    return out;
}

PurityResult purity_check(const Spinor& s)
{
    if (s.is_zero()) throw Error(ErrorKind::Precondition, "zero spinor");
    const int n = s.n;
    const std::size_t N = s.c.size();
    Matrix act(N, std::vector<mpq_class>(2 * n));
    for (int i = 0; i < 2 * n; ++i) {
        Vector2n b = i < n ? Vector2n::e(n, i) : Vector2n::ev(n, i - n);
        auto col = clifford_act(b, s);
        for (std::size_t r = 0; r < N; ++r) act[r][i] = col.c[r];
    }
    PurityResult out;
    for (const auto& x : nullspace(act, 2 * n)) out.annihilator.basis.push_back(Vector2n::from_flat(x));
    out.is_pure = out.annihilator.dim() == n;
    return out;
}

Report check_grassmann_forward(int n, std::size_t samples, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        auto K = random_isotropic(n, n - 1, rng);
        auto rep = verify_trbi(spin_coordinates(K, n));
        if (!rep.ok) return Report::fail("sample " + std::to_string(k) + ": " + rep.message);
    }
    return Report::pass();
}

Report check_grassmann_converse(int n, std::size_t samples, std::uint64_t seed)
{
    const ZonogonSpec spec(std::vector<int>(n, 1));
    const Tiling T0 = t_min(spec);
    const auto schedule = lattice_schedule(T0, seed);
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) {
        const auto lab = apply_schedule(random_positive_labeling(T0, rng), schedule);
        SpinPoint p;
        p.n = n;
        for (const auto& [I, v] : lab.values) p.set(I, v);
        p = sign_twist(p);
        const std::string where = "sample " + std::to_string(k) + ": ";
        auto rep = verify_trbi(p);
        if (!rep.ok) return Report::fail(where + rep.message);
        auto ev = purity_check(even_part(p)), od = purity_check(odd_part(p));
        if (!ev.is_pure) return Report::fail(where + "even part is not pure");
        if (!od.is_pure) return Report::fail(where + "odd part is not pure");
        int d = intersection_dim(ev.annihilator, od.annihilator);
        if (d != n - 1) return Report::fail(where + "annihilators meet in dimension " + std::to_string(d));
    }
    return Report::pass();
}

}  // namespace zonorec
