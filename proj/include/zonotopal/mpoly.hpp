#pragma once

#include <map>
#include <string>
#include <vector>

#include "zonotopal/cyclotomic.hpp"

namespace zonotopal {

using Exponent = std::vector<int>;

// S polynomials live in Sym(U): variables s0, s1..sd (s0 is the torsion
// marker, slot 0). T polynomials live in Sym(V): variables t1..td.
enum class VarKind { S, T };

class MPoly {
public:
    MPoly() : kind_(VarKind::T), nvars_(0) {}
    MPoly(VarKind kind, int nvars) : kind_(kind), nvars_(nvars) {}

    static MPoly constant(VarKind kind, int nvars, const Cyclotomic& c);
    static MPoly variable(VarKind kind, int nvars, int index);
    static MPoly monomial(VarKind kind, int nvars, Exponent e, const Cyclotomic& c = Cyclotomic(1));
    // sum_j coeffs[j] * var_{offset + j}
    static MPoly linear(VarKind kind, int nvars, int offset, const std::vector<Rational>& coeffs);

    VarKind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::map<Exponent, Cyclotomic>& terms() const { return terms_; }

    void add_term(const Exponent& e, const Cyclotomic& c);
    Cyclotomic coeff(const Exponent& e) const;

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    int min_degree() const;
    bool is_homogeneous() const;
    MPoly homogeneous_part(int k) const;
    MPoly truncated(int cap) const;

    MPoly derivative(int var) const;
    MPoly pow(int k) const;
    // Substitute var_j -> images[j] (all images share a kind/nvars).
    MPoly substitute(const std::vector<MPoly>& images) const;
    Cyclotomic evaluate(const std::vector<Rational>& point) const;
    Cyclotomic evaluate(const std::vector<Cyclotomic>& point) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Cyclotomic& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Cyclotomic& c) { return a *= c; }
    friend MPoly operator*(const Cyclotomic& c, MPoly a) { return a *= c; }
    friend bool operator==(const MPoly& a, const MPoly& b);
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    std::string var_name(int i) const;
    std::string str() const;

private:
    void check_compatible(const MPoly& o) const;

    VarKind kind_;
    int nvars_;
    std::map<Exponent, Cyclotomic> terms_;
};

MPoly multiply_truncated(const MPoly& a, const MPoly& b, int cap);

// Exact quotient a / b; throws NonMember if b does not divide a.
MPoly divide_exact(const MPoly& a, const MPoly& b);

// All exponent vectors of total degree k in variables [first, nvars).
std::vector<Exponent> monomials_of_degree(int nvars, int first, int k);

// Apply p(D) to f where p is an S polynomial (s_j acts as d/dt_j; s0 must not
// occur) and f a T polynomial.
MPoly apply_operator(const MPoly& p, const MPoly& f);

}  // namespace zonotopal
