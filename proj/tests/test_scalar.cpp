#include <doctest.h>

#include <functional>

#include "zonotopal/cyclotomic.hpp"
#include "zonotopal/errors.hpp"
#include "zonotopal/laurent.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/mpoly.hpp"
#include "zonotopal/rational.hpp"
#include "zonotopal/series.hpp"

using namespace zonotopal;

namespace {

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalError;
}

MPoly s(int nv, int j) { return MPoly::variable(VarKind::S, nv, j); }
MPoly t(int nv, int j) { return MPoly::variable(VarKind::T, nv, j); }

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational(" -7 ") == q(-7));
    CHECK(parse_rational("3/-6") == q(-1, 2));
    CHECK(to_string(q(-6, 4)) == "-3/2");
    CHECK(to_string(q(8, 4)) == "2");
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([] { parse_rational("x"); }) == ErrorKind::InvalidArgument);
    CHECK(floor_of(q(-3, 2)) == -2);
    CHECK(frac_part(q(-3, 2)) == q(1, 2));
}

TEST_CASE("bernoulli numbers against a table") {
    const Rational table[] = {q(1), q(-1, 2), q(1, 6), q(0), q(-1, 30), q(0), q(1, 42), q(0), q(-1, 30), q(0), q(5, 66)};
    for (int k = 0; k <= 10; ++k) CHECK(bernoulli(k) == table[k]);
    CHECK(binomial(10, 3) == 120);
    CHECK(factorial(7) == 5040);
}

TEST_CASE("roots of unity") {
    for (long n : {3L, 4L, 5L, 6L, 8L, 12L}) {
        Cyclotomic z = Cyclotomic::root_of_unity(n, 1);
        Cyclotomic p(1), sum;
        for (long k = 0; k < n; ++k) {
            sum += p;
            p *= z;
        }
        CHECK(p == Cyclotomic(1));
        CHECK(sum.is_zero());
    }
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    CHECK(i * i == Cyclotomic(-1));
    CHECK(Cyclotomic::root_of_unity(2, 1) == Cyclotomic(-1));
    // zeta_6 = -zeta_3^2
    CHECK(Cyclotomic::root_of_unity(6, 1) == -Cyclotomic::root_of_unity(3, 2));
    CHECK(Cyclotomic::root_of_unity(6, 1).order() == 3);
    CHECK(Cyclotomic::root_of_unity(12, 3) == i);
}

TEST_CASE("cyclotomic field operations") {
    Cyclotomic z5 = Cyclotomic::root_of_unity(5, 2);
    Cyclotomic i = Cyclotomic::root_of_unity(4, 1);
    Cyclotomic a = Cyclotomic(q(3, 2)) + z5 * Cyclotomic(q(-2, 7)) + i;
    Cyclotomic inv = a.inverse();
    CHECK(a * inv == Cyclotomic(1));
    CHECK(a / a == Cyclotomic(1));
    // a * conj(a) is real and fixed by conjugation
    Cyclotomic n = a * a.conj();
    CHECK(n == n.conj());
    CHECK(i.conj() == -i);
    CHECK(z5.galois(2) == Cyclotomic::root_of_unity(5, 4));
    CHECK(cyc_arith(i, i, CycOp::Mul) == Cyclotomic(-1));
    CHECK(kind_of([] { Cyclotomic().inverse(); }) == ErrorKind::DivisionByZero);
    CHECK(kind_of([&] { i.to_rational(); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { Cyclotomic::from_coeffs(6, {q(1), q(1)}); }) == ErrorKind::InvalidArgument);
    CHECK(euler_phi(840) == 192);
}

TEST_CASE("polynomial arithmetic") {
    const int nv = 3;
    MPoly x = s(nv, 1), y = s(nv, 2);
    MPoly p = (x + y) * (x - y);
    CHECK(p == x * x - y * y);
    CHECK(p.degree() == 2);
    CHECK(p.is_homogeneous());
    CHECK(divide_exact(p, x + y) == x - y);
    CHECK(kind_of([&] { divide_exact(x * x + y, x); }) == ErrorKind::NonMember);
    CHECK(p.derivative(1) == x * Cyclotomic(2));
    CHECK((x + y).pow(3).coeff({0, 2, 1}) == Cyclotomic(3));
    CHECK(monomials_of_degree(3, 1, 2).size() == 3);
    CHECK(p.evaluate(std::vector<Rational>{q(0), q(3), q(1)}) == Cyclotomic(8));
    // x -> x + y, y -> 2y
    MPoly sub = p.substitute({s(nv, 0), x + y, y * Cyclotomic(2)});
    CHECK(sub == (x + y) * (x + y) - y * y * Cyclotomic(4));
}

TEST_CASE("differential operators act on t polynomials") {
    // s1^2 s2 applied to t1^3 t2^2 = 6 t1 * 2 t2
    MPoly op = s(3, 1) * s(3, 1) * s(3, 2);
    MPoly f = t(2, 0).pow(3) * t(2, 1).pow(2);
    CHECK(apply_operator(op, f) == t(2, 0) * t(2, 1) * Cyclotomic(12));
    CHECK(kind_of([] { apply_operator(MPoly::variable(VarKind::S, 2, 0), MPoly::variable(VarKind::T, 1, 0)); }) ==
          ErrorKind::InvalidArgument);
}

TEST_CASE("todd factor inverts (1 - c e^{-p}) / p") {
    const int nv = 2;
    const int cap = 6;
    MPoly p = s(nv, 1);
    for (const Cyclotomic& c : {Cyclotomic(1), Cyclotomic(-1), Cyclotomic::root_of_unity(3, 1)}) {
        // (1 - c e^{-p}) / p computed from its coefficients
        std::vector<Cyclotomic> coeffs;
        Rational fact = 1;
        for (int k = 0; k <= cap + 1; ++k) {
            if (k > 0) fact *= k;
            Cyclotomic ek = Cyclotomic((k % 2 ? -1 : 1) / fact);  // coefficient of p^k in e^{-p}
            Cyclotomic num = (k == 0 ? Cyclotomic(1) : Cyclotomic(0)) - c * ek;
            coeffs.push_back(num);
        }
        TruncatedSeries todd = todd_factor(p, c, cap);
        if (c.is_one()) {
            std::vector<Cyclotomic> shifted(coeffs.begin() + 1, coeffs.end());
            TruncatedSeries inv = compose_univariate(shifted, p, cap);
            CHECK((todd * inv).body() == MPoly::constant(VarKind::S, nv, Cyclotomic(1)));
        } else {
            // todd = p / (1 - c e^{-p}), so todd * (1 - c e^{-p}) = p
            TruncatedSeries unit = compose_univariate(coeffs, p, cap);
            CHECK((todd * unit).body() == p);
        }
    }
    TruncatedSeries e = exp_series(p, 4);
    CHECK(e.body().coeff({0, 4}) == Cyclotomic(q(1, 24)));
}

TEST_CASE("laurent residue") {
    const int tv = 2;
    MPoly t2 = t(tv, 1);
    MPoly one = MPoly::constant(VarKind::T, tv, Cyclotomic(1));
    // e^{t2 z} / z^2 truncated: residue is t2
    ZLaurent e(tv);
    e.add_term(0, one);
    e.add_term(1, t2);
    e.add_term(2, t2 * t2 * Cyclotomic(q(1, 2)));
    ZLaurent inv_z2 = ZLaurent::monomial(tv, -2, one);
    CHECK(residue(e * inv_z2) == t2);
    CHECK(residue(e).is_zero());
}

TEST_CASE("exact linear algebra") {
    Matrix<Rational> m = {{q(2), q(1), q(1)}, {q(4), q(3), q(3)}, {q(8), q(7), q(9)}};
    CHECK(determinant(m) == 4);
    CHECK(matrix_rank(m, 3) == 3);
    auto inv = inverse_matrix(m);
    REQUIRE(inv);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rational v = 0;
            for (int k = 0; k < 3; ++k) v += m[i][k] * (*inv)[k][j];
            CHECK(v == (i == j ? 1 : 0));
        }
    Matrix<Rational> sing = {{q(1), q(2)}, {q(2), q(4)}};
    CHECK(matrix_rank(sing, 2) == 1);
    CHECK(!inverse_matrix(sing));
    auto ker = kernel_basis(sing, 2);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] + 2 * ker[0][1] == 0);
}
