#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "zonotopal/abelian.hpp"

namespace zonotopal {

// sum c_ij a^i b^j with integer coefficients.
class BivarPoly {
public:
    void add(int i, int j, const Integer& c);
    const std::map<std::pair<int, int>, Integer>& terms() const { return terms_; }
    Integer coeff(int i, int j) const;
    Rational evaluate(const Rational& a, const Rational& b) const;
    // Univariate polynomial q^shift * P(a, 1/q) as coefficients of q^0, q^1, ...
    std::vector<Integer> hilbert_form(const Rational& a, int shift) const;

    friend BivarPoly operator+(const BivarPoly& x, const BivarPoly& y);
    friend bool operator==(const BivarPoly& x, const BivarPoly& y) { return x.terms_ == y.terms_; }

    // "a^2 + b^2 + 2a + 2b + 1"
    std::string str() const;

private:
    std::map<std::pair<int, int>, Integer> terms_;
};

std::vector<IndexSet> bases(const GList& x);
// Smallest flat of the free-part matroid containing s.
IndexSet closure(const GList& x, const IndexSet& s);
// Flats of rank d-1, sorted.
std::vector<IndexSet> hyperplane_flats(const GList& x);
std::vector<IndexSet> cocircuits(const GList& x);
IndexSet external_activity(const GList& x, const IndexSet& b);
BivarPoly tutte(const GList& x);
BivarPoly arithmetic_tutte(const GList& x);

IndexSet set_difference(const IndexSet& a, const IndexSet& b);
IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

}  // namespace zonotopal
