#include "zonotopal/brionvergne.hpp"

#include <algorithm>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/laurent.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

namespace {

std::string point_str(const LatticePoint& p) {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ')';
    return os.str();
}

long idot(const std::vector<long>& a, const std::vector<long>& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

MPoly zero_t(int d) { return MPoly(VarKind::T, d); }

Cyclotomic require_integer(const Cyclotomic& v, const std::string& what) {
    if (!v.is_rational() || !is_integer(v.to_rational()))
        fail(ErrorKind::NonIntegerResult, what + " is not an integer: " + v.str());
    return v;
}

RatVec half(const RatVec& w) {
    RatVec h = w;
    for (auto& v : h) v /= 2;
    return h;
}

}  // namespace

void CheckReport::record(bool pass, const std::string& where) {
    ++points;
    if (!pass && ok) {
        ok = false;
        counterexample = where;
    }
}

BvContext::BvContext(const GList& x) : x_(x), pctx_(x), ev_(x) {}

const std::vector<Cell>& BvContext::cells() const {
    if (!cells_) cells_ = big_cells(x_);
    return *cells_;
}

const MPoly& BvContext::piece(int cell) const {
    auto it = pieces_.find(cell);
    if (it != pieces_.end()) return it->second;
    MPoly p = cell < 0 ? zero_t(x_.dim()) : local_piece(ev_, cells().at(cell));
    return pieces_.emplace(cell, p).first->second;
}

const PeriodicPoly& BvContext::f_tilde(const LatticePoint& z) const {
    auto it = ftilde_.find(z);
    if (it != ftilde_.end()) return it->second;
    if (static_cast<int>(z.size()) != x_.dim()) fail(ErrorKind::InvalidArgument, "z has the wrong length");
    return ftilde_.emplace(z, zonotopal::f_tilde(pctx_, lattice_element(z))).first->second;
}

const std::vector<LatticePoint>& BvContext::interior_points() const {
    if (!interior_) interior_ = lattice_points(x_, LatticeMode::Interior);
    return *interior_;
}

const MPoly& BvContext::box_piece(const LatticePoint& lambda, const RatVec& w) const {
    auto key = std::make_pair(lambda, w);
    auto it = box_pieces_.find(key);
    if (it != box_pieces_.end()) return it->second;
    return box_pieces_.emplace(key, alcove_piece(ev_, to_rational(lambda), w, true)).first->second;
}

Cyclotomic apply_periodic(const PeriodicPoly& p, const MPoly& f, const LatticePoint& lambda) {
    RatVec at = to_rational(lambda);
    Cyclotomic total;
    for (const auto& [c, q] : p.terms()) {
        for (const auto& [e, coef] : q.terms())
            if (e[0] != 0) fail(ErrorKind::TorsionUnsupported, "operator carries the torsion marker");
        MPoly g = apply_operator(q, f);
        if (g.is_zero()) continue;
        total += zonotopal::evaluate(c, lambda) * g.evaluate(at);
    }
    return total;
}

Cyclotomic bv_count(const BvContext& ctx, const LatticePoint& z, const LatticePoint& u, const RatVec& w) {
    const GList& x = ctx.list();
    if (static_cast<int>(u.size()) != x.dim()) fail(ErrorKind::InvalidArgument, "u has the wrong length");
    if (!in_cone(x, to_rational(u))) fail(ErrorKind::NotInCone, "u is not in the cone of the list");
    RatVec dir = w.empty() ? short_regular(x) : w;
    int cell = locate_cell(x, ctx.cells(), to_rational(u), dir);
    return require_integer(apply_periodic(ctx.f_tilde(z), ctx.piece(cell), u), "count");
}

Cyclotomic bv_count(const GList& x, const LatticePoint& z, const LatticePoint& u, const RatVec& w) {
    BvContext ctx(x);
    return bv_count(ctx, z, u, w);
}

PeriodicPoly partition_of_unity(const BvContext& ctx) {
    PeriodicPoly sum(ctx.list().dim());
    for (const auto& z : ctx.interior_points()) {
        Rational b = ctx.spline().bx(to_rational(z));
        if (b != 0) sum += ctx.f_tilde(z) * Cyclotomic(b);
    }
    return sum;
}

PeriodicPoly partition_of_unity(const GList& x) {
    BvContext ctx(x);
    return partition_of_unity(ctx);
}

bool is_unimodular(const GList& x) {
    if (!x.is_lattice()) return false;
    for (const auto& b : bases(x))
        if (multiplicity(x, b) != 1) return false;
    return true;
}

std::map<LatticePoint, Cyclotomic> box_delta_check(const GList& x, const LatticePoint& z, const RatVec& w) {
    if (!is_unimodular(x)) fail(ErrorKind::NotUnimodular, "the list is not unimodular");
    auto shifted = lattice_points(x, LatticeMode::Shifted, w);
    if (!std::binary_search(shifted.begin(), shifted.end(), z))
        fail(ErrorKind::InvalidArgument, "z is not a lattice point of the shifted zonotope");
    BvContext ctx(x);
    const PeriodicPoly& fz = ctx.f_tilde(z);
    std::map<LatticePoint, Cyclotomic> out;
    for (const auto& lambda : lattice_points(x, LatticeMode::Closed))
        out[lambda] = apply_periodic(fz, ctx.box_piece(lambda, w), lambda);
    return out;
}

MPoly box_interpolant(const GList& x, const std::map<LatticePoint, Rational>& values) {
    if (!is_unimodular(x)) fail(ErrorKind::NotUnimodular, "the list is not unimodular");
    BvContext ctx(x);
    const int d = x.dim();
    const auto& interior = ctx.interior_points();
    Character triv = Character::trivial(x.group());
    MPoly out(VarKind::S, d + 1);
    for (const auto& [z, v] : values) {
        if (!std::binary_search(interior.begin(), interior.end(), z))
            fail(ErrorKind::InvalidArgument, "data point " + point_str(z) + " is not an interior lattice point");
        if (v != 0) out += ctx.f_tilde(z).component(triv) * Cyclotomic(v);
    }
    RatVec w = short_regular(x);
    PeriodicPoly p = PeriodicPoly::single(triv, out);
    for (const auto& z : interior) {
        auto it = values.find(z);
        Rational want = it == values.end() ? Rational(0) : it->second;
        if (apply_periodic(p, ctx.box_piece(z, w), z) != Cyclotomic(want))
            fail(ErrorKind::InternalError, "interpolant misses the value at " + point_str(z));
    }
    return out;
}

std::vector<Wall> walls(const BvContext& ctx) {
    const GList& x = ctx.list();
    const auto& cells = ctx.cells();
    std::vector<Wall> out;
    if (x.dim() == 1) {
        bool up = cells.at(0).rays[0][0] > 0;
        out.push_back(Wall{{1}, up ? 0 : -1, up ? -1 : 0});
        return out;
    }
    std::vector<RatVec> rays{cells.at(0).rays[0]};
    for (const auto& c : cells) rays.push_back(c.rays[1]);
    const int ncells = static_cast<int>(cells.size());
    for (int k = 0; k < static_cast<int>(rays.size()); ++k) {
        const RatVec& r = rays[k];
        std::vector<long> eta{-r[1].get_num().get_si(), r[0].get_num().get_si()};
        out.push_back(Wall{primitive(eta), k < ncells ? k : -1, k - 1});
    }
    return out;
}

bool continuity_check(const BvContext& ctx, const PeriodicPoly& p, CheckReport* report) {
    const GList& x = ctx.list();
    const int d = x.dim();
    CheckReport local;
    local.identity = "continuity";
    CheckReport& rep = report ? *report : local;
    long order = 1;
    for (const auto& [c, q] : p.terms()) order = lcm_long(order, c.order());
    const long reach = std::max<long>(10, (x.size() - d + 2) * order);
    for (const auto& wall : walls(ctx)) {
        const MPoly& a = ctx.piece(wall.positive_cell);
        const MPoly& b = ctx.piece(wall.negative_cell);
        LatticePoint r = d == 1 ? LatticePoint{0} : LatticePoint{wall.normal[1], -wall.normal[0]};
        const long kmax = d == 1 ? 0 : reach;
        for (long k = 0; k <= kmax; ++k) {
            LatticePoint lambda = r;
            for (auto& v : lambda) v = checked_mul(v, k);
            bool same = apply_periodic(p, a, lambda) == apply_periodic(p, b, lambda);
            rep.record(same, "jump at " + point_str(lambda));
        }
    }
    return rep.ok;
}

bool continuity_check(const GList& x, const PeriodicPoly& p) {
    BvContext ctx(x);
    return continuity_check(ctx, p);
}

MPoly wall_jump(const GList& x, const std::vector<long>& eta, const MPoly& v12) {
    if (!x.is_lattice()) fail(ErrorKind::TorsionUnsupported, "wall crossing requires a lattice");
    const int d = x.dim();
    if (static_cast<int>(eta.size()) != d) fail(ErrorKind::InvalidArgument, "normal has the wrong length");
    std::vector<int> outside;
    for (int i = 0; i < x.size(); ++i)
        if (idot(eta, x[i].free) != 0) outside.push_back(i);
    const int m = static_cast<int>(outside.size());
    const int cap = std::max(v12.degree(), 0);
    // prod_x 1/(x.s + eta(x) z) = sum_k c_k(s) z^{-(m+k)}, c_k homogeneous of degree k
    MPoly prod = MPoly::constant(VarKind::S, d + 1, Cyclotomic(1));
    for (int i : outside) {
        MPoly lf = linear_form(x, i);
        long ex = idot(eta, x[i].free);
        MPoly factor(VarKind::S, d + 1);
        MPoly power = MPoly::constant(VarKind::S, d + 1, Cyclotomic(1));
        Rational denom = ex;
        for (int k = 0; k <= cap; ++k) {
            Rational c = Rational(k % 2 ? -1 : 1) / denom;
            factor += power * Cyclotomic(c);
            power = multiply_truncated(power, lf, cap);
            denom *= ex;
        }
        prod = multiply_truncated(prod, factor, cap);
    }
    ZLaurent kernel(d);
    for (int k = 0; k <= cap; ++k) {
        MPoly g = apply_operator(prod.homogeneous_part(k), v12);
        if (!g.is_zero()) kernel.add_term(-(m + k), g);
    }
    RatVec er;
    for (long v : eta) er.emplace_back(v);
    MPoly eta_t = MPoly::linear(VarKind::T, d, 0, er);
    ZLaurent expo(d);
    MPoly power = MPoly::constant(VarKind::T, d, Cyclotomic(1));
    for (int j = 0; j <= m + cap; ++j) {
        expo.add_term(j, power * Cyclotomic(Rational(1) / Rational(factorial(j))));
        power = power * eta_t;
    }
    return residue(kernel * expo);
}

MPoly wall_extension(const GList& x, const Wall& wall) {
    const int d = x.dim();
    if (d == 1) return MPoly::constant(VarKind::T, 1, Cyclotomic(1));
    if (d != 2) fail(ErrorKind::SamplesRequired, "walls are enumerated only for d <= 2");
    IntMatrix a = complete_unimodular(wall.normal);
    const std::vector<long>& kappa = a[1];
    std::vector<long> coords;
    for (int i = 0; i < x.size(); ++i)
        if (idot(wall.normal, x[i].free) == 0) coords.push_back(idot(kappa, x[i].free));
    if (coords.empty()) fail(ErrorKind::InvalidArgument, "no list element lies on the wall");
    GList sub = GList::from_rows({coords});
    auto sub_cells = big_cells(sub);
    MPoly on_wall = local_piece(sub, sub_cells.at(0));
    RatVec kr;
    for (long v : kappa) kr.emplace_back(v);
    return on_wall.substitute({MPoly::linear(VarKind::T, d, 0, kr)});
}

WallReport check_wall(const BvContext& ctx, const Wall& wall) {
    const GList& x = ctx.list();
    const int d = x.dim();
    WallReport rep;
    rep.wall = wall;
    rep.v12 = wall_extension(x, wall);
    rep.jump = wall_jump(x, wall.normal, rep.v12);
    rep.difference = ctx.piece(wall.positive_cell) - ctx.piece(wall.negative_cell);
    rep.matches = rep.jump == rep.difference;

    // t = A^{-1} t' with the normal as the first new coordinate
    IntMatrix inv = unimodular_inverse(complete_unimodular(wall.normal));
    std::vector<MPoly> images;
    for (int j = 0; j < d; ++j) {
        RatVec row;
        for (long v : inv[j]) row.emplace_back(v);
        images.push_back(MPoly::linear(VarKind::T, d, 0, row));
    }
    MPoly jump = rep.jump.substitute(images);
    MPoly v12 = rep.v12.substitute(images);
    int m = 0, on_wall = 0;
    Rational prod = 1;
    for (int i = 0; i < x.size(); ++i) {
        long e = idot(wall.normal, x[i].free);
        if (e == 0) {
            ++on_wall;
        } else {
            ++m;
            prod *= e;
        }
    }
    bool ok = true;
    for (const auto& [e, c] : v12.terms())
        if (e[0] != 0) ok = false;
    Rational cx = Rational(1) / (Rational(factorial(m - 1)) * prod);
    MPoly lead = MPoly::variable(VarKind::T, d, 0).pow(m - 1) * v12 * Cyclotomic(cx);
    MPoly rest = jump - lead;
    for (const auto& [e, c] : rest.terms())
        if (e[0] < m) ok = false;
    if (on_wall == d - 1 && !rest.is_zero()) ok = false;
    rep.leading_form = ok;
    return rep;
}

std::map<LatticePoint, Cyclotomic> box_deconvolution(const BvContext& ctx, const RatVec& w, long margin) {
    const GList& x = ctx.list();
    const int d = x.dim();
    if (!is_short_regular(x, w) || !in_cone(x, w))
        fail(ErrorKind::InvalidArgument, "direction must be short regular and inside the cone");
    auto eta = pointed_functional(x);
    if (!eta) fail(ErrorKind::NotPointed, "0 lies in the convex hull of the list");
    HPolytope zon = zonotope_hrep(x);

    std::vector<long> lo(d, 0), hi(d, 0);
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < d; ++j) (x[i].free[j] > 0 ? hi[j] : lo[j]) += x[i].free[j];
    std::vector<LatticePoint> window;
    LatticePoint p(d);
    for (int j = 0; j < d; ++j) p[j] = lo[j] - margin;
    while (true) {
        window.push_back(p);
        int k = 0;
        while (k < d && ++p[k] > hi[k] + margin) {
            p[k] = lo[k] - margin;
            ++k;
        }
        if (k == d) break;
    }
    long level = 0;
    for (const auto& l : window) level = std::max(level, idot(*eta, l));

    LatticePoint zero(d, 0);
    const PeriodicPoly& todd = ctx.f_tilde(zero);
    // per vertex: translation vector -> coefficient of prod (1 - c tau)/(1 - tau) = 1 + (1 - c) sum_k tau^k
    std::vector<std::pair<const MPoly*, std::map<LatticePoint, Cyclotomic>>> parts;
    std::vector<Character> chars;
    for (const auto& [c, q] : todd.terms()) {
        std::map<LatticePoint, Cyclotomic> shifts{{zero, Cyclotomic(1)}};
        for (int i = 0; i < x.size(); ++i) {
            if (c.phase(x[i]) == 0) continue;
            std::vector<long> neg = x[i].free;
            for (auto& v : neg) v = -v;
            Cyclotomic tail = Cyclotomic(1) - zonotopal::evaluate(c, neg);
            std::map<LatticePoint, Cyclotomic> next;
            for (const auto& [s, a] : shifts) {
                LatticePoint t = s;
                for (long k = 0; idot(*eta, t) <= level; ++k) {
                    next[t] += k == 0 ? a : a * tail;
                    for (int j = 0; j < d; ++j) t[j] += x[i].free[j];
                }
            }
            shifts = std::move(next);
        }
        chars.push_back(c);
        parts.emplace_back(&q, std::move(shifts));
    }

    std::map<LatticePoint, Cyclotomic> out;
    for (const auto& lambda : window) {
        Cyclotomic total;
        for (size_t v = 0; v < parts.size(); ++v) {
            const MPoly& q = *parts[v].first;
            Cyclotomic inner;
            for (const auto& [s, a] : parts[v].second) {
                if (idot(*eta, s) > idot(*eta, lambda)) continue;
                LatticePoint mu = lambda;
                for (int j = 0; j < d; ++j) mu[j] -= s[j];
                RatVec mr = to_rational(mu);
                RatVec ahead = mr;
                for (int j = 0; j < d; ++j) ahead[j] += w[j];
                if (!zon.contains(mr) && !zon.contains(ahead)) continue;
                MPoly g = apply_operator(q, ctx.box_piece(mu, w));
                if (!g.is_zero()) inner += a * g.evaluate(mr);
            }
            if (!inner.is_zero()) total += zonotopal::evaluate(chars[v], lambda) * inner;
        }
        out[lambda] = total;
    }
    return out;
}

CheckReport box_deconvolution_check(const BvContext& ctx, const RatVec& w) {
    CheckReport rep;
    rep.identity = "box deconvolution";
    for (const auto& [lambda, v] : box_deconvolution(ctx, w)) {
        bool origin = std::all_of(lambda.begin(), lambda.end(), [](long c) { return c == 0; });
        rep.record(v == Cyclotomic(origin ? 1 : 0), point_str(lambda) + " -> " + v.str());
    }
    return rep;
}

CheckReport convolution_check(const BvContext& ctx, long radius) {
    const GList& x = ctx.list();
    const int d = x.dim();
    CheckReport rep;
    rep.identity = "semidiscrete convolution";
    RatVec h = half(short_regular(x));
    auto support = lattice_points(x, LatticeMode::Shifted, h);
    std::vector<Rational> box;
    for (const auto& mu : support) {
        RatVec at = to_rational(mu);
        for (int j = 0; j < d; ++j) at[j] += h[j];
        box.push_back(ctx.spline().bx(at));
    }
    VpfCounter counter(x);
    LatticePoint u(d, -radius);
    while (true) {
        RatVec at = to_rational(u);
        for (int j = 0; j < d; ++j) at[j] += h[j];
        Rational lhs = ctx.spline().tx(at);
        Rational rhs = 0;
        for (size_t k = 0; k < support.size(); ++k) {
            if (box[k] == 0) continue;
            LatticePoint lambda = u;
            for (int j = 0; j < d; ++j) lambda[j] -= support[k][j];
            Integer n = counter.count(lambda);
            if (n != 0) rhs += box[k] * Rational(n);
        }
        rep.record(lhs == rhs, point_str(u) + ": " + to_string(lhs) + " vs " + to_string(rhs));
        int k = 0;
        while (k < d && ++u[k] > radius) {
            u[k] = -radius;
            ++k;
        }
        if (k == d) break;
    }
    return rep;
}

}  // namespace zonotopal
