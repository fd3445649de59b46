#pragma once

#include <map>
#include <vector>

#include "zonotopal/abelian.hpp"
#include "zonotopal/matroid.hpp"
#include "zonotopal/mpoly.hpp"
#include "zonotopal/series.hpp"

namespace zonotopal {

// Linearly independent polynomials, each tagged with its degree.
struct GradedSpan {
    VarKind kind = VarKind::S;
    int nvars = 0;
    std::vector<MPoly> basis;
    bool homogeneous = true;

    int dim() const { return static_cast<int>(basis.size()); }
    // Number of members per degree (homogeneous spans only).
    std::vector<int> hilbert() const;
};

// Linear form of the free part of x_i in s1..sd (s0 slot unused).
MPoly linear_form(const GList& x, int i);
MPoly p_product(const GList& x, const IndexSet& y);
// Elements with zero free part (zero vectors and torsion).
IndexSet rank_zero_elements(const GList& x);

GradedSpan p_basis(const GList& x);
std::vector<MPoly> cocircuit_gens(const GList& x, int degree);
GradedSpan d_basis(const GList& x);
GradedSpan internal_p_basis(const GList& x);

Cyclotomic pair(const MPoly& p, const MPoly& f);

// Coefficients of p on the given monomials (throws if p has other terms).
std::vector<Cyclotomic> coeff_vector(const MPoly& p, const std::vector<Exponent>& monos);
std::vector<Rational> rational_coeff_vector(const MPoly& p, const std::vector<Exponent>& monos);
MPoly from_coeff_vector(VarKind kind, int nvars, const std::vector<Exponent>& monos,
                        const std::vector<Cyclotomic>& v);

// Rank of a family of polynomials over the cyclotomics.
int poly_rank(const std::vector<MPoly>& polys);
// Whether p lies in the span of polys.
bool in_span(const std::vector<MPoly>& polys, const MPoly& p);

// The projection onto P(X) along the cocircuit ideal, degree by degree.
class PsiProjector {
public:
    explicit PsiProjector(const GList& x);
    int top_degree() const { return top_; }
    MPoly project(const MPoly& f) const;

private:
    int nvars_;
    int top_;
    std::vector<std::vector<Exponent>> monos_;
    std::vector<std::vector<std::vector<Rational>>> proj_;  // per degree, square matrix
};

MPoly psi_project(const GList& x, const TruncatedSeries& f);

}  // namespace zonotopal
