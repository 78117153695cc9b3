#include "zonorec/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace zonorec {

bool GrLex::operator()(const Exponents& a, const Exponents& b) const
{
    long da = 0, db = 0;
    for (int x : a) da += x;
    for (int x : b) db += x;
    if (da != db) return da < db;
    return a < b;
}

VarSet::VarSet(std::vector<Point> pts) : pts_(std::move(pts))
{
    for (std::size_t i = 0; i < pts_.size(); ++i) idx_[pts_[i]] = static_cast<int>(i);
}

int VarSet::index(const Point& p) const
{
    auto it = idx_.find(p);
    return it == idx_.end() ? -1 : it->second;
}

LaurentPoly LaurentPoly::constant(std::size_t nvars, const mpz_class& c)
{
    LaurentPoly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const Exponents& e, const mpz_class& c)
{
    LaurentPoly p(e.size());
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t nvars, std::size_t i, int power)
{
    Exponents e(nvars, 0);
    e.at(i) = power;
    return monomial(e);
}

void LaurentPoly::add_term(const Exponents& e, const mpz_class& c)
{
    if (e.size() != nvars_) throw Error(ErrorKind::Precondition, "exponent vector has wrong length");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Exponents LaurentPoly::min_exponents() const
{
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
        first = false;
    }
    return m;
}

bool LaurentPoly::depends_on(std::size_t var) const
{
    for (const auto& [e, c] : terms_)
        if (e[var] != 0) return true;
    return false;
}

bool LaurentPoly::divisible_by(std::size_t var) const
{
    if (terms_.empty()) return true;
    for (const auto& [e, c] : terms_)
        if (e[var] < 1) return false;
    return true;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const
{
    if (terms_.empty() && o.terms_.empty()) return true;
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

namespace {

// Constants built without a ring size adopt the other operand's size.
std::size_t ring_size(const LaurentPoly& p, const LaurentPoly& q)
{
    if (p.nvars() == q.nvars()) return p.nvars();
    if (p.nvars() == 0) return q.nvars();
    if (q.nvars() == 0) return p.nvars();
    throw Error(ErrorKind::Precondition, "polynomials live in different rings");
}

Exponents widen(const Exponents& e, std::size_t n) { return e.empty() ? Exponents(n, 0) : e; }

}  // namespace

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q)
{
    const std::size_t n = ring_size(p, q);
    LaurentPoly r(n);
    for (const auto& [e, c] : p.terms()) r.add_term(widen(e, n), c);
    for (const auto& [e, c] : q.terms()) r.add_term(widen(e, n), c);
    return r;
}

LaurentPoly neg(const LaurentPoly& p)
{
    LaurentPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, -c);
    return r;
}

LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q) { return add(p, neg(q)); }

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q)
{
    const std::size_t n = ring_size(p, q);
    LaurentPoly r(n);
    Exponents e(n);
    for (const auto& [ep, cp] : p.terms()) {
        const Exponents a = widen(ep, n);
        for (const auto& [eq, cq] : q.terms()) {
            const Exponents b = widen(eq, n);
            for (std::size_t i = 0; i < n; ++i) e[i] = a[i] + b[i];
            r.add_term(e, cp * cq);
        }
    }
    return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned e)
{
    LaurentPoly r = LaurentPoly::constant(p.nvars(), 1);
    for (unsigned i = 0; i < e; ++i) r = mul(r, p);
    return r;
}

namespace {

LaurentPoly shift(const LaurentPoly& p, const Exponents& by, int sign)
{
    LaurentPoly r(p.nvars());
    Exponents e(p.nvars());
    for (const auto& [ep, c] : p.terms()) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ep[i] + sign * by[i];
        r.add_term(e, c);
    }
    return r;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q)
{
    if (q.is_zero()) throw Error(ErrorKind::Domain, "division by zero polynomial");
    const std::size_t n = ring_size(p, q);
    if (p.is_zero()) return LaurentPoly(n);
    LaurentPoly pp = p.nvars() == n ? p : add(LaurentPoly(n), p);
    LaurentPoly qq = q.nvars() == n ? q : add(LaurentPoly(n), q);

    // q = x^mq * q0 with q0 a polynomial not divisible by any variable; same for p
    const Exponents mq = qq.min_exponents(), mp = pp.min_exponents();
    const LaurentPoly q0 = shift(qq, mq, -1);
    LaurentPoly::Terms rem = shift(pp, mp, -1).terms();
    const auto& [lq, lc] = *q0.terms().rbegin();

    LaurentPoly quot(n);
    Exponents d(n), e(n);
    while (!rem.empty()) {
        const auto [er, cr] = *rem.rbegin();
        bool ok = mpz_divisible_p(cr.get_mpz_t(), lc.get_mpz_t()) != 0;
        for (std::size_t i = 0; i < n && ok; ++i) {
            d[i] = er[i] - lq[i];
            ok = d[i] >= 0;
        }
        if (!ok) {
            LaurentPoly r(n);
            for (const auto& [ex, c] : rem) r.add_term(ex, c);
            throw Error(ErrorKind::Domain, "inexact division, remainder has " + std::to_string(rem.size()) +
                                               " terms, leading coefficient " + cr.get_str());
        }
        const mpz_class coef = cr / lc;
        quot.add_term(d, coef);
        for (const auto& [eq, cq] : q0.terms()) {
            for (std::size_t i = 0; i < n; ++i) e[i] = d[i] + eq[i];
            auto [it, fresh] = rem.emplace(e, -coef * cq);
            if (!fresh) {
                it->second -= coef * cq;
                if (it->second == 0) rem.erase(it);
            }
        }
    }
    Exponents net(n);
    for (std::size_t i = 0; i < n; ++i) net[i] = mp[i] - mq[i];
    return shift(quot, net, 1);
}

namespace {

mpq_class qpow(const mpq_class& x, int e)
{
    mpz_class num, den;
    const unsigned ue = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), ue);
    mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), ue);
    mpq_class r = e >= 0 ? mpq_class(num, den) : mpq_class(den, num);
    r.canonicalize();
    return r;
}

}  // namespace

mpq_class evaluate(const LaurentPoly& p, const std::vector<mpq_class>& point)
{
    if (p.is_zero()) return 0;
    if (point.size() < p.nvars()) throw Error(ErrorKind::BadInput, "missing variable assignment");
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (point[i] == 0) {
            for (const auto& [e, c] : p.terms())
                if (e[i] < 0) throw Error(ErrorKind::Domain, "zero value for variable with negative exponent");
        }
    mpq_class sum = 0;
    for (const auto& [e, c] : p.terms()) {
        mpq_class t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= qpow(point[i], e[i]);
        sum += t;
    }
    return sum;
}

LaurentPoly substitute_over(const LaurentPoly& p, std::size_t var, const LaurentPoly& num)
{
    const std::size_t n = ring_size(p, num);
    LaurentPoly out(n);
    std::map<int, LaurentPoly> powers;
    for (const auto& [e, c] : p.terms()) {
        const int k = e[var];
        if (k < 0) throw Error(ErrorKind::Precondition, "substitution needs nonnegative powers");
        if (!powers.count(k)) powers[k] = pow(num, static_cast<unsigned>(k));
        Exponents rest = e;
        rest[var] = -k;
        out = add(out, mul(LaurentPoly::monomial(rest, c), powers[k]));
    }
    return out;
}

LaurentPoly set_zero(const LaurentPoly& p, std::size_t var)
{
    LaurentPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] < 0) throw Error(ErrorKind::Precondition, "cannot set a denominator variable to zero");
        if (e[var] == 0) out.add_term(e, c);
    }
    return out;
}

std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool unit = true;
        for (int x : e) unit = unit && x == 0;
        mpz_class a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        bool wrote = false;
        if (a != 1 || unit) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << (wrote ? "*" : "") << names.at(i);
            if (e[i] != 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

std::string to_string(const LaurentPoly& p, const VarSet& vars)
{
    std::vector<std::string> names;
    for (const auto& pt : vars.points()) {
        std::string s = "x";
        for (int c : pt) s += std::to_string(c);
        names.push_back(s);
    }
    return to_string(p, names);
}

}  // namespace zonorec
