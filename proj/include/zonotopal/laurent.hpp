#pragma once

#include <map>

#include "zonotopal/mpoly.hpp"

namespace zonotopal {

// Laurent polynomial in z with T-polynomial coefficients.
class ZLaurent {
public:
    explicit ZLaurent(int tvars = 0) : tvars_(tvars) {}

    static ZLaurent monomial(int tvars, int zexp, const MPoly& coeff);

    int tvars() const { return tvars_; }
    const std::map<int, MPoly>& terms() const { return terms_; }

    void add_term(int zexp, const MPoly& coeff);
    ZLaurent& operator+=(const ZLaurent& o);
    friend ZLaurent operator+(ZLaurent a, const ZLaurent& b) { return a += b; }
    friend ZLaurent operator*(const ZLaurent& a, const ZLaurent& b);
    // Drops all z-exponents above max_exp.
    ZLaurent truncated_above(int max_exp) const;

private:
    int tvars_;
    std::map<int, MPoly> terms_;
};

// Coefficient of z^{-1}.
MPoly residue(const ZLaurent& l);

}  // namespace zonotopal
