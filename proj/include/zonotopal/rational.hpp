#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zonotopal {

using Integer = mpz_class;
// mpq_class keeps values canonical (reduced, positive denominator).
using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Accepts "p", "-p", "p/q".
Rational parse_rational(std::string_view text);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
bool is_integer(const Rational& q);
Integer floor_of(const Rational& q);
Rational frac_part(const Rational& q);  // in [0,1)

Integer factorial(int n);
Integer binomial(int n, int k);
// B_1 = -1/2 convention.
Rational bernoulli(int k);

long gcd_long(long a, long b);
long lcm_long(long a, long b);

}  // namespace zonotopal
