#include "zonotopal/series.hpp"

#include <algorithm>

#include "zonotopal/errors.hpp"

namespace zonotopal {

TruncatedSeries::TruncatedSeries(MPoly body, int cap) : cap_(cap), body_(body.truncated(cap)) {
    if (cap < 0) fail(ErrorKind::InvalidArgument, "series cap must be non-negative");
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    cap_ = std::min(cap_, o.cap_);
    body_ = (body_ + o.body_).truncated(cap_);
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int cap = std::min(a.cap_, b.cap_);
    return TruncatedSeries(multiply_truncated(a.body_, b.body_, cap), cap);
}

TruncatedSeries operator*(const TruncatedSeries& a, const Cyclotomic& c) {
    return TruncatedSeries(a.body_ * c, a.cap_);
}

TruncatedSeries compose_univariate(const std::vector<Cyclotomic>& coeffs, const MPoly& linear, int cap) {
    MPoly one = MPoly::constant(linear.kind(), linear.nvars(), Cyclotomic(1));
    MPoly acc(linear.kind(), linear.nvars());
    MPoly power = one;
    for (int k = 0; k <= cap && k < static_cast<int>(coeffs.size()); ++k) {
        if (k > 0) power = multiply_truncated(power, linear, cap);
        if (!coeffs[k].is_zero()) acc += power * coeffs[k];
    }
    return TruncatedSeries(acc, cap);
}

TruncatedSeries exp_series(const MPoly& linear, int cap) {
    std::vector<Cyclotomic> coeffs;
    for (int k = 0; k <= cap; ++k) coeffs.emplace_back(Rational(1, 1) / Rational(factorial(k)));
    return compose_univariate(coeffs, linear, cap);
}

TruncatedSeries todd_factor(const MPoly& linear, const Cyclotomic& c, int cap) {
    if (cap < 0) fail(ErrorKind::InvalidArgument, "todd_factor cap must be non-negative");
    if (linear.degree() > 1 || linear.min_degree() == 0)
        fail(ErrorKind::InvalidArgument, "todd_factor expects a homogeneous linear form");
    std::vector<Cyclotomic> a(cap + 1, Cyclotomic(0));
    if (c.is_one()) {
        // y/(1-e^{-y}) = sum_k B_k (-y)^k / k!
        for (int k = 0; k <= cap; ++k) {
            Rational v = bernoulli(k) / Rational(factorial(k));
            if (k % 2) v = -v;
            a[k] = Cyclotomic(v);
        }
    } else {
        // 1 - c e^{-y} = h_0 + sum_{k>=1} h_k y^k, h_0 = 1 - c, h_k = -c (-1)^k / k!
        std::vector<Cyclotomic> h(cap + 1, Cyclotomic(0));
        h[0] = Cyclotomic(1) - c;
        for (int k = 1; k <= cap; ++k) {
            Rational f = Rational(1) / Rational(factorial(k));
            if (k % 2 == 0) f = -f;
            h[k] = c * Cyclotomic(f);
        }
        Cyclotomic inv0 = h[0].inverse();
        std::vector<Cyclotomic> g(cap + 1, Cyclotomic(0));
        for (int k = 0; k < cap; ++k) {
            Cyclotomic s = (k == 0) ? Cyclotomic(1) : Cyclotomic(0);
            for (int j = 1; j <= k; ++j) s -= h[j] * g[k - j];
            g[k] = s * inv0;
        }
        // y * g(y)
        for (int k = 1; k <= cap; ++k) a[k] = g[k - 1];
    }
    return compose_univariate(a, linear, cap);
}

}  // namespace zonotopal
