#pragma once

#include <string>
#include <vector>

#include "zonotopal/rational.hpp"

namespace zonotopal {

long euler_phi(long n);

// Element of Q(zeta_n) in the power basis 1, zeta, .., zeta^{phi(n)-1}.
// Orders are kept canonical: n is never 2 mod 4 (Q(zeta_2m) = Q(zeta_m) for
// odd m) and rational values always carry order 1. Mixed-order operands are
// lifted to the lcm of their orders.
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}
    Cyclotomic(long v) : order_(1), c_{Rational(v)} {}
    Cyclotomic(int v) : order_(1), c_{Rational(v)} {}
    Cyclotomic(const Rational& q) : order_(1), c_{q} {}

    // zeta_n^k
    static Cyclotomic root_of_unity(long n, long k);
    static Cyclotomic from_coeffs(long order, std::vector<Rational> coeffs);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    bool is_one() const { return order_ == 1 && c_[0] == 1; }
    // Throws InvalidArgument if the value is not rational.
    Rational to_rational() const;

    Cyclotomic lifted(long n) const;
    Cyclotomic inverse() const;
    Cyclotomic conj() const;
    // Galois automorphism zeta -> zeta^k, gcd(k, order) = 1.
    Cyclotomic galois(long k) const;

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o);
    Cyclotomic& operator-=(const Cyclotomic& o);
    Cyclotomic& operator*=(const Cyclotomic& o);
    Cyclotomic& operator/=(const Cyclotomic& o);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // e.g. "1/2 - 1/2*ζ4"
    std::string str() const;

private:
    void normalize();

    long order_;
    std::vector<Rational> c_;
};

inline bool is_zero(const Cyclotomic& a) { return a.is_zero(); }

enum class CycOp { Add, Mul, Inv, Conj };
Cyclotomic cyc_arith(const Cyclotomic& a, const Cyclotomic& b, CycOp op);

}  // namespace zonotopal
