#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zonorec/zonogon.hpp"

namespace zonorec {

using Exponents = std::vector<int>;

// Graded lexicographic order on exponent vectors.
struct GrLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Names the variables of a polynomial ring by lattice points.
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::vector<Point> pts);

    std::size_t size() const { return pts_.size(); }
    const Point& at(std::size_t i) const { return pts_.at(i); }
    int index(const Point& p) const;  // -1 if absent
    const std::vector<Point>& points() const { return pts_; }
    bool operator==(const VarSet& o) const { return pts_ == o.pts_; }

private:
    std::vector<Point> pts_;
    std::map<Point, int> idx_;
};

class LaurentPoly {
public:
    using Terms = std::map<Exponents, mpz_class, GrLex>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const mpz_class& c);
    static LaurentPoly monomial(const Exponents& e, const mpz_class& c = 1);
    static LaurentPoly variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponents& e, const mpz_class& c);

    // Exponentwise minimum over terms: the monomial denominator when negative.
    Exponents min_exponents() const;
    bool depends_on(std::size_t var) const;
    bool divisible_by(std::size_t var) const;

    bool operator==(const LaurentPoly& o) const;

private:
    std::size_t nvars_ = 0;
    Terms terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly neg(const LaurentPoly& p);
LaurentPoly pow(const LaurentPoly& p, unsigned e);
// Throws Error(Domain, "inexact division ...") when q does not divide p.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);
mpq_class evaluate(const LaurentPoly& p, const std::vector<mpq_class>& point);
// p with x_var replaced by num / x_var; p must be polynomial in x_var.
LaurentPoly substitute_over(const LaurentPoly& p, std::size_t var, const LaurentPoly& num);
// p with x_var set to zero; p must be polynomial in x_var.
LaurentPoly set_zero(const LaurentPoly& p, std::size_t var);

inline LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) { return add(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) { return sub(p, q); }
inline LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) { return mul(p, q); }
inline LaurentPoly operator-(const LaurentPoly& p) { return neg(p); }

std::string to_string(const LaurentPoly& p, const VarSet& names);
std::string to_string(const LaurentPoly& p, const std::vector<std::string>& names);

}  // namespace zonorec
