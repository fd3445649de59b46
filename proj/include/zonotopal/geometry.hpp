#pragma once

#include <map>
#include <optional>
#include <vector>

#include "zonotopal/abelian.hpp"
#include "zonotopal/mpoly.hpp"
#include "zonotopal/periodic.hpp"

namespace zonotopal {

using LatticePoint = std::vector<long>;

// {y : A y <= b}
struct HPolytope {
    RatMat A;
    RatVec b;
    bool contains(const RatVec& y, bool strict = false) const;
};

struct Cell {
    RatVec sample;
    std::vector<RatVec> rays;  // bounding rays in counterclockwise order (d = 2), the direction (d = 1)
};

// Integer functional eta with eta . x >= 1 on every element of nonzero free part.
std::optional<std::vector<long>> pointed_functional(const GList& x);
bool is_pointed(const GList& x);
// Closed cone membership for a full-rank pointed list.
bool in_cone(const GList& x, const RatVec& u);

// Primitive normals of the hyperplanes spanned by rank d-1 sublists.
std::vector<std::vector<long>> hyperplane_normals(const GList& x);

HPolytope zonotope_hrep(const GList& x);
enum class LatticeMode { Shifted, Interior, Closed };
std::vector<LatticePoint> lattice_points(const GList& x, LatticeMode mode, const RatVec& w = {});

// Volume of {y in R^n : A y <= b}; the set must be bounded.
Rational polytope_volume(const RatMat& a, const RatVec& b, int n);

// Fiber volumes over a fixed list.
class SplineEvaluator {
public:
    explicit SplineEvaluator(const GList& x);
    Rational tx(const RatVec& u) const;
    Rational bx(const RatVec& u) const;
    const GList& list() const { return x_; }

private:
    RatVec particular(const RatVec& u) const;

    GList x_;
    RatMat kernel_;  // N x k
    IndexSet basis_;
    RatMat basis_inverse_;
    Rational scale_;
};

Rational tx_value(const GList& x, const RatVec& u);
Rational bx_value(const GList& x, const RatVec& u);
Integer vpf_count(const GList& x, const LatticePoint& u);

class VpfCounter {
public:
    explicit VpfCounter(const GList& x);
    Integer count(const LatticePoint& u);

private:
    Integer rec(int i, const LatticePoint& u);

    GList x_;
    std::vector<long> eta_;
    std::map<std::pair<int, LatticePoint>, Integer> memo_;
};

std::vector<Cell> big_cells(const GList& x);
// Index of the cell containing u + eps w for small eps > 0, -1 outside cone(X).
int locate_cell(const GList& x, const std::vector<Cell>& cells, const RatVec& u, const RatVec& w);
RatVec short_regular(const GList& x);
bool is_short_regular(const GList& x, const RatVec& w);

MPoly local_piece(const GList& x, const Cell& c);
MPoly local_piece(const SplineEvaluator& ev, const Cell& c);
// Polynomial agreeing with B_X (box) or T_X near lambda + eps w for small eps > 0.
MPoly alcove_piece(const SplineEvaluator& ev, const RatVec& lambda, const RatVec& w, bool box);
QuasiFunction quasi_fit(const GList& x, const Cell& c);

RatVec to_rational(const LatticePoint& p);

}  // namespace zonotopal
