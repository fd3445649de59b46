#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zonotopal/geometry.hpp"
#include "zonotopal/periodic.hpp"

namespace zonotopal {

// Result of a finite identity check.
struct CheckReport {
    std::string identity;
    long points = 0;
    bool ok = true;
    std::string counterexample;  // first failure only

    void record(bool pass, const std::string& where);
};

// Per-list cache of spline data, cells, local pieces and projected Todd operators.
class BvContext {
public:
    explicit BvContext(const GList& x);

    const GList& list() const { return x_; }
    const PeriodicContext& periodic() const { return pctx_; }
    const SplineEvaluator& spline() const { return ev_; }
    const std::vector<Cell>& cells() const;
    // Local piece of T_X on a cell; index -1 is the exterior of the cone.
    const MPoly& piece(int cell) const;
    const PeriodicPoly& f_tilde(const LatticePoint& z) const;
    const std::vector<LatticePoint>& interior_points() const;
    // Alcove piece of B_X entered from lambda along w.
    const MPoly& box_piece(const LatticePoint& lambda, const RatVec& w) const;

private:
    GList x_;
    PeriodicContext pctx_;
    SplineEvaluator ev_;
    mutable std::optional<std::vector<Cell>> cells_;
    mutable std::map<int, MPoly> pieces_;
    mutable std::map<LatticePoint, PeriodicPoly> ftilde_;
    mutable std::optional<std::vector<LatticePoint>> interior_;
    mutable std::map<std::pair<LatticePoint, RatVec>, MPoly> box_pieces_;
};

// sum_phi e_phi(lambda) (q_phi(D) f)(lambda)
Cyclotomic apply_periodic(const PeriodicPoly& p, const MPoly& f, const LatticePoint& lambda);

// lim_w f~_z(D) T_X(u); w defaults to a short regular vector of the cone.
Cyclotomic bv_count(const BvContext& ctx, const LatticePoint& z, const LatticePoint& u,
                    const RatVec& w = {});
Cyclotomic bv_count(const GList& x, const LatticePoint& z, const LatticePoint& u, const RatVec& w = {});

// sum over interior lattice points z of B_X(z) f~_z
PeriodicPoly partition_of_unity(const BvContext& ctx);
PeriodicPoly partition_of_unity(const GList& x);

bool is_unimodular(const GList& x);

// lim_w f_z(D) B_X at every lattice point of the closed zonotope.
std::map<LatticePoint, Cyclotomic> box_delta_check(const GList& x, const LatticePoint& z, const RatVec& w);
// sum_z values(z) f_z, checked to reproduce the values on the interior points.
MPoly box_interpolant(const GList& x, const std::map<LatticePoint, Rational>& values);

struct Wall {
    std::vector<long> normal;  // primitive
    int positive_cell = -1;    // cell on the side where the normal is positive, -1 outside the cone
    int negative_cell = -1;
};
// Walls between adjacent cells and between boundary cells and the exterior (d <= 2).
std::vector<Wall> walls(const BvContext& ctx);

bool continuity_check(const BvContext& ctx, const PeriodicPoly& p, CheckReport* report = nullptr);
bool continuity_check(const GList& x, const PeriodicPoly& p);

// Residue expression for the jump of T_X across the hyperplane with normal eta.
MPoly wall_jump(const GList& x, const std::vector<long>& eta, const MPoly& v12);
// Local piece of T_{X cap H} on the wall, extended constantly along the normal.
MPoly wall_extension(const GList& x, const Wall& wall);

struct WallReport {
    Wall wall;
    MPoly v12;
    MPoly jump;
    MPoly difference;  // piece(positive) - piece(negative)
    bool matches = false;
    bool leading_form = false;
};
WallReport check_wall(const BvContext& ctx, const Wall& wall);

// lim_w Todd^per_B(X)(D_pw) B_X on the bounding box of Z(X) widened by margin.
std::map<LatticePoint, Cyclotomic> box_deconvolution(const BvContext& ctx, const RatVec& w, long margin = 2);
CheckReport box_deconvolution_check(const BvContext& ctx, const RatVec& w);

// T_X = sum_lambda B_X(. - lambda) i_X(lambda) at the points u + eps w for lattice u in a window.
CheckReport convolution_check(const BvContext& ctx, long radius);

}  // namespace zonotopal
