#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "zonotopal/abelian.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/mpoly.hpp"
#include "zonotopal/polyspace.hpp"
#include "zonotopal/series.hpp"
#include "zonotopal/toric.hpp"

namespace zonotopal {

// sum_phi e_phi * q_phi with q_phi over s0, s1..sd.
class PeriodicPoly {
public:
    PeriodicPoly() = default;
    explicit PeriodicPoly(int d) : d_(d) {}
    static PeriodicPoly constant(const FgGroup& g, const Cyclotomic& c);
    static PeriodicPoly single(const Character& c, const MPoly& q);

    int dim() const { return d_; }
    const std::map<Character, MPoly>& terms() const { return terms_; }
    MPoly component(const Character& c) const;
    void add(const Character& c, const MPoly& q);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    bool is_homogeneous() const;

    PeriodicPoly& operator+=(const PeriodicPoly& o);
    PeriodicPoly& operator-=(const PeriodicPoly& o);
    PeriodicPoly& operator*=(const Cyclotomic& c);
    friend PeriodicPoly operator+(PeriodicPoly a, const PeriodicPoly& b) { return a += b; }
    friend PeriodicPoly operator-(PeriodicPoly a, const PeriodicPoly& b) { return a -= b; }
    friend PeriodicPoly operator*(PeriodicPoly a, const Cyclotomic& c) { return a *= c; }
    friend PeriodicPoly operator*(const Cyclotomic& c, PeriodicPoly a) { return a *= c; }
    friend bool operator==(const PeriodicPoly& a, const PeriodicPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const PeriodicPoly& a, const PeriodicPoly& b) { return !(a == b); }

    // "1 + 1/2*s1 + e(1/2,1/2)*(-1/4*s1*s2)"
    std::string str() const;

private:
    int d_ = 0;
    std::map<Character, MPoly> terms_;
};

// sum_phi e_phi * f_phi with f_phi over t1..td, a function on the lattice.
class QuasiFunction {
public:
    QuasiFunction() = default;
    explicit QuasiFunction(int d) : d_(d) {}
    int dim() const { return d_; }
    const std::map<Character, MPoly>& terms() const { return terms_; }
    void add(const Character& c, const MPoly& f);
    Cyclotomic evaluate(const std::vector<long>& lambda) const;
    std::string str() const;
    friend bool operator==(const QuasiFunction& a, const QuasiFunction& b) { return a.terms_ == b.terms_; }

private:
    int d_ = 0;
    std::map<Character, MPoly> terms_;
};

struct PeriodicSeries {
    int cap = 0;
    std::vector<std::pair<Character, TruncatedSeries>> terms;
};

struct LClass {
    std::vector<std::vector<long>> support;
    std::vector<Cyclotomic> coeffs;
    Cyclotomic apply(const QuasiFunction& f) const;
};

// Shared per-list data for the periodic constructions.
class PeriodicContext {
public:
    explicit PeriodicContext(const GList& x);
    const GList& list() const { return x_; }
    const std::vector<VertexData>& vertex_data() const { return vertices_; }
    const VertexData& vertex(const Character& c) const;
    const PsiProjector& psi() const;
    int top_degree() const { return top_; }
    // prod_x x / (1 - e_phi(-x) e^{-x}) for the k-th vertex, truncated at cap.
    const TruncatedSeries& todd_product(int k, int cap) const;

private:
    GList x_;
    std::vector<VertexData> vertices_;
    int top_;
    mutable std::unique_ptr<PsiProjector> psi_;
    mutable std::map<std::pair<int, int>, TruncatedSeries> products_;
};

std::vector<PeriodicPoly> pper_basis(const GList& x);
std::vector<QuasiFunction> dm_basis(const GList& x);
PeriodicSeries periodic_todd(const GList& x, const GElement& z, int cap);
PeriodicSeries periodic_todd(const PeriodicContext& ctx, const GElement& z, int cap);
PeriodicPoly f_tilde(const GList& x, const GElement& z);
PeriodicPoly f_tilde(const PeriodicContext& ctx, const GElement& z);
std::vector<PeriodicPoly> pper_internal_basis(const GList& x);
Cyclotomic pair_pper_dm(const GList& x, const PeriodicPoly& p, const QuasiFunction& f);
LClass l_map(const GList& x, const PeriodicPoly& p, const RatVec& w);
// L for a fixed list and shift; the evaluation matrix is inverted once.
class LMap {
public:
    LMap(const GList& x, const RatVec& w);
    LClass operator()(const PeriodicPoly& p) const;
    const std::vector<QuasiFunction>& dm() const { return dm_; }
    const std::vector<std::vector<long>>& support() const { return support_; }

private:
    GList x_;
    std::vector<std::vector<long>> support_;
    std::vector<QuasiFunction> dm_;
    Matrix<Cyclotomic> inverse_;  // inverse_[l][j]: coefficient of point l from pairing with dm_[j]
};
PeriodicPoly pper_mult(const GList& x, int i, const PeriodicPoly& p);
PeriodicPoly pper_project(const GList& x, int i, const PeriodicPoly& p);
std::vector<int> hilbert(const std::vector<PeriodicPoly>& space);

// Rank over the cyclotomics of a family of periodic polynomials.
int pper_rank(const std::vector<PeriodicPoly>& polys);
bool pper_in_span(const std::vector<PeriodicPoly>& polys, const PeriodicPoly& p);

// GElement of a lattice point.
GElement lattice_element(const std::vector<long>& v);

}  // namespace zonotopal
