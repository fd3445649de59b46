#pragma once

#include "zonotopal/mpoly.hpp"

namespace zonotopal {

// Power series truncated at total degree cap.
class TruncatedSeries {
public:
    TruncatedSeries(MPoly body, int cap);

    int cap() const { return cap_; }
    const MPoly& body() const { return body_; }

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const Cyclotomic& c);

private:
    int cap_;
    MPoly body_;
};

// p / (1 - c e^{-p}) truncated at cap, for a linear form p. For c = 1 the
// Bernoulli expansion is used; for c != 1 the unit 1 - c e^{-p} is inverted.
TruncatedSeries todd_factor(const MPoly& linear, const Cyclotomic& c, int cap);

// e^{p} truncated at cap.
TruncatedSeries exp_series(const MPoly& linear, int cap);

// sum_k coeffs[k] * p^k truncated at cap.
TruncatedSeries compose_univariate(const std::vector<Cyclotomic>& coeffs, const MPoly& linear, int cap);

}  // namespace zonotopal
