#include "zonotopal/periodic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zonotopal/errors.hpp"
#include "zonotopal/geometry.hpp"
#include "zonotopal/linalg.hpp"
#include "zonotopal/matroid.hpp"

namespace zonotopal {

PeriodicPoly PeriodicPoly::constant(const FgGroup& g, const Cyclotomic& c) {
    PeriodicPoly p(g.free_rank);
    p.add(Character::trivial(g), MPoly::constant(VarKind::S, g.free_rank + 1, c));
    return p;
}

PeriodicPoly PeriodicPoly::single(const Character& c, const MPoly& q) {
    PeriodicPoly p(q.nvars() - 1);
    p.add(c, q);
    return p;
}

MPoly PeriodicPoly::component(const Character& c) const {
    auto it = terms_.find(c);
    return it == terms_.end() ? MPoly(VarKind::S, d_ + 1) : it->second;
}

void PeriodicPoly::add(const Character& c, const MPoly& q) {
    if (q.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, q);
        return;
    }
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
}

int PeriodicPoly::degree() const {
    int d = -1;
    for (const auto& [c, q] : terms_) d = std::max(d, q.degree());
    return d;
}

bool PeriodicPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [c, q] : terms_) {
        if (!q.is_homogeneous()) return false;
        if (deg >= 0 && q.degree() != deg) return false;
        deg = q.degree();
    }
    return true;
}

PeriodicPoly& PeriodicPoly::operator+=(const PeriodicPoly& o) {
    for (const auto& [c, q] : o.terms_) add(c, q);
    return *this;
}

PeriodicPoly& PeriodicPoly::operator-=(const PeriodicPoly& o) {
    for (const auto& [c, q] : o.terms_) add(c, -q);
    return *this;
}

PeriodicPoly& PeriodicPoly::operator*=(const Cyclotomic& k) {
    if (k.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [c, q] : terms_) q *= k;
    return *this;
}

namespace {
std::string component_str(const Character& c, const MPoly& q) {
    if (c.is_trivial()) return q.str();
    return "e" + c.str() + "*(" + q.str() + ")";
}
}  // namespace

std::string PeriodicPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [c, q] : terms_) s += (s.empty() ? "" : " + ") + component_str(c, q);
    return s;
}

void QuasiFunction::add(const Character& c, const MPoly& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(c);
    if (it == terms_.end()) {
        terms_.emplace(c, f);
        return;
    }
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
}

Cyclotomic QuasiFunction::evaluate(const std::vector<long>& lambda) const {
    RatVec pt;
    for (long v : lambda) pt.emplace_back(v);
    // Sum per character order first so Galois orbits meet in small fields.
    std::map<long, Cyclotomic> by_order;
    for (const auto& [c, f] : terms_) {
        Cyclotomic v = zonotopal::evaluate(c, lambda) * f.evaluate(pt);
        by_order[v.order()] += v;
    }
    Cyclotomic s;
    for (const auto& [o, v] : by_order) s += v;
    return s;
}

std::string QuasiFunction::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [c, f] : terms_) s += (s.empty() ? "" : " + ") + component_str(c, f);
    return s;
}

Cyclotomic LClass::apply(const QuasiFunction& f) const {
    Cyclotomic s;
    for (size_t i = 0; i < support.size(); ++i)
        if (!coeffs[i].is_zero()) s += coeffs[i] * f.evaluate(support[i]);
    return s;
}

GElement lattice_element(const std::vector<long>& v) { return GElement{v, {}}; }

PeriodicContext::PeriodicContext(const GList& x) : x_(x), vertices_(vertices(x)) {
    top_ = x.size() - static_cast<int>(rank_zero_elements(x).size()) - x.dim();
}

const VertexData& PeriodicContext::vertex(const Character& c) const {
    for (const auto& v : vertices_)
        if (v.character == c) return v;
    fail(ErrorKind::NonMember, "character " + c.str() + " is not a vertex");
}

const PsiProjector& PeriodicContext::psi() const {
    if (!psi_) psi_ = std::make_unique<PsiProjector>(x_);
    return *psi_;
}

const TruncatedSeries& PeriodicContext::todd_product(int k, int cap) const {
    auto key = std::make_pair(k, cap);
    auto it = products_.find(key);
    if (it != products_.end()) return it->second;
    const Character& c = vertices_.at(k).character;
    const int nv = x_.dim() + 1;
    TruncatedSeries s(MPoly::constant(VarKind::S, nv, Cyclotomic(1)), cap);
    for (int i = 0; i < x_.size(); ++i) {
        GElement neg_x{x_[i].free, {}};
        for (auto& e : neg_x.free) e = -e;
        s = s * todd_factor(linear_form(x_, i), evaluate(c, neg_x), cap);
    }
    return products_.emplace(key, s).first->second;
}

namespace {

MPoly s0_power(int nvars, int k) {
    Exponent e(nvars, 0);
    e[0] = k;
    return MPoly::monomial(VarKind::S, nvars, e);
}

// p_{X \ (X_phi u X_t)} s0^{tors(phi)}
MPoly prefactor(const GList& x, const VertexData& v) {
    IndexSet drop = set_union(v.x_phi, rank_zero_elements(x));
    return p_product(x, set_difference(x.all(), drop)) * s0_power(x.dim() + 1, v.tors_count);
}

void require_lattice(const GList& x, const char* what) {
    if (!x.is_lattice()) fail(ErrorKind::TorsionUnsupported, std::string(what) + " requires a lattice");
}

}  // namespace

std::vector<PeriodicPoly> pper_basis(const GList& x) {
    std::vector<PeriodicPoly> out;
    const IndexSet zero = rank_zero_elements(x);
    for (const auto& v : vertices(x)) {
        GList sub = x.sublist(v.x_phi);
        MPoly s0 = s0_power(x.dim() + 1, v.tors_count);
        for (const auto& b_local : bases(sub)) {
            IndexSet b;
            for (int i : b_local) b.push_back(v.x_phi[i]);
            IndexSet active = set_intersection(external_activity(x, b), v.x_phi);
            IndexSet drop = set_union(set_union(b, active), zero);
            out.push_back(PeriodicPoly::single(v.character, s0 * p_product(x, set_difference(x.all(), drop))));
        }
    }
    return out;
}

std::vector<QuasiFunction> dm_basis(const GList& x) {
    require_lattice(x, "DM");
    std::vector<QuasiFunction> out;
    for (const auto& v : vertices(x)) {
        for (const auto& f : d_basis(x.sublist(v.x_phi)).basis) {
            QuasiFunction q(x.dim());
            q.add(v.character, f);
            out.push_back(q);
        }
    }
    return out;
}

PeriodicSeries periodic_todd(const PeriodicContext& ctx, const GElement& z, int cap) {
    const GList& x = ctx.list();
    require_lattice(x, "periodic Todd operator");
    if (cap < 0) fail(ErrorKind::InvalidArgument, "negative cap");
    const int nv = x.dim() + 1;
    PeriodicSeries out;
    out.cap = cap;
    std::vector<Rational> zf;
    for (long v : z.free) zf.emplace_back(-v);
    MPoly minus_pz = MPoly::linear(VarKind::S, nv, 1, zf);
    GElement neg_z{std::vector<long>(z.free.size()), {}};
    for (size_t i = 0; i < z.free.size(); ++i) neg_z.free[i] = -z.free[i];
    const TruncatedSeries shift = exp_series(minus_pz, cap);
    for (int k = 0; k < static_cast<int>(ctx.vertex_data().size()); ++k) {
        const Character& c = ctx.vertex_data()[k].character;
        out.terms.emplace_back(c, shift * ctx.todd_product(k, cap) * evaluate(c, neg_z));
    }
    return out;
}

PeriodicSeries periodic_todd(const GList& x, const GElement& z, int cap) {
    PeriodicContext ctx(x);
    return periodic_todd(ctx, z, cap);
}

PeriodicPoly f_tilde(const PeriodicContext& ctx, const GElement& z) {
    const GList& x = ctx.list();
    PeriodicSeries todd = periodic_todd(ctx, z, ctx.top_degree());
    PeriodicPoly out(x.dim());
    for (const auto& [c, s] : todd.terms) {
        MPoly q = ctx.psi().project(s.body());
        if (q.is_zero()) continue;
        // the component must carry the prefactor p_{X \ X_phi}
        try {
            divide_exact(q, prefactor(x, ctx.vertex(c)));
        } catch (const Error&) {
            fail(ErrorKind::InternalError, "projected Todd component at " + c.str() + " lacks its prefactor");
        }
        out.add(c, q);
    }
    return out;
}

PeriodicPoly f_tilde(const GList& x, const GElement& z) {
    PeriodicContext ctx(x);
    return f_tilde(ctx, z);
}

namespace {

// Rational coefficient matrix of periodic polynomials indexed by (character, monomial).
struct Flattened {
    std::vector<std::pair<Character, Exponent>> keys;
    Matrix<Cyclotomic> rows;
};

Flattened flatten(const std::vector<PeriodicPoly>& polys) {
    std::set<std::pair<Character, Exponent>> keys;
    for (const auto& p : polys)
        for (const auto& [c, q] : p.terms())
            for (const auto& [e, v] : q.terms()) keys.insert({c, e});
    Flattened f;
    f.keys.assign(keys.begin(), keys.end());
    std::map<std::pair<Character, Exponent>, int> index;
    for (size_t i = 0; i < f.keys.size(); ++i) index[f.keys[i]] = static_cast<int>(i);
    for (const auto& p : polys) {
        std::vector<Cyclotomic> row(f.keys.size());
        for (const auto& [c, q] : p.terms())
            for (const auto& [e, v] : q.terms()) row[index[{c, e}]] = v;
        f.rows.push_back(row);
    }
    return f;
}

}  // namespace

int pper_rank(const std::vector<PeriodicPoly>& polys) {
    Flattened f = flatten(polys);
    return matrix_rank(f.rows, static_cast<int>(f.keys.size()));
}

bool pper_in_span(const std::vector<PeriodicPoly>& polys, const PeriodicPoly& p) {
    std::vector<PeriodicPoly> all = polys;
    all.push_back(p);
    return pper_rank(all) == pper_rank(polys);
}

namespace {

struct GeneralisedHyperplane {
    std::vector<long> eta;
    int m = 0;
    std::vector<GElement> generators;
};

std::vector<GeneralisedHyperplane> generalised_hyperplanes(const GList& x) {
    std::vector<GeneralisedHyperplane> out;
    const FgGroup& g = x.group();
    for (const auto& eta : hyperplane_normals(x)) {
        GeneralisedHyperplane h;
        h.eta = eta;
        for (int i = 0; i < x.size(); ++i) {
            long s = 0;
            for (int j = 0; j < x.dim(); ++j) s = checked_add(s, checked_mul(eta[j], x[i].free[j]));
            if (s != 0) ++h.m;
        }
        for (const auto& k : lattice_kernel(eta)) h.generators.push_back(GElement{k, std::vector<long>(g.torsion_count(), 0)});
        for (int t = 0; t < g.torsion_count(); ++t) {
            GElement e{std::vector<long>(g.free_rank, 0), std::vector<long>(g.torsion_count(), 0)};
            e.tors[t] = 1;
            h.generators.push_back(e);
        }
        out.push_back(h);
    }
    return out;
}

MPoly directional_derivative(const MPoly& q, const std::vector<long>& eta, int times) {
    MPoly r = q;
    for (int k = 0; k < times && !r.is_zero(); ++k) {
        MPoly next(VarKind::S, q.nvars());
        for (size_t j = 0; j < eta.size(); ++j)
            if (eta[j] != 0) next += r.derivative(static_cast<int>(j) + 1) * Cyclotomic(eta[j]);
        r = next;
    }
    return r;
}

}  // namespace

std::vector<PeriodicPoly> pper_internal_basis(const GList& x) {
    std::vector<PeriodicPoly> basis = pper_basis(x);
    auto hyps = generalised_hyperplanes(x);
    std::vector<PeriodicPoly> out;
    int maxdeg = 0;
    for (const auto& b : basis) maxdeg = std::max(maxdeg, b.degree());
    for (int k = 0; k <= maxdeg; ++k) {
        std::vector<int> idx;
        for (int j = 0; j < static_cast<int>(basis.size()); ++j)
            if (basis[j].degree() == k) idx.push_back(j);
        if (idx.empty()) continue;
        const int nunk = static_cast<int>(idx.size());
        Matrix<Rational> rows;
        for (const auto& h : hyps) {
            // key: restriction of the character to H
            std::map<std::vector<Rational>, std::map<Exponent, std::vector<Rational>>> cons;
            for (int u = 0; u < nunk; ++u) {
                const PeriodicPoly& b = basis[idx[u]];
                for (const auto& [c, q] : b.terms()) {
                    std::vector<Rational> key;
                    for (const auto& gen : h.generators) key.push_back(c.phase(gen));
                    MPoly dq = directional_derivative(q, h.eta, h.m - 1);
                    auto& slot = cons[key];
                    for (const auto& [e, v] : dq.terms()) {
                        auto& row = slot[e];
                        if (row.empty()) row.assign(nunk, Rational(0));
                        row[u] += v.to_rational();
                    }
                }
            }
            for (auto& [key, bymono] : cons)
                for (auto& [e, row] : bymono) rows.push_back(row);
        }
        Matrix<Rational> ker;
        if (rows.empty()) {
            for (int u = 0; u < nunk; ++u) {
                std::vector<Rational> e(nunk, Rational(0));
                e[u] = 1;
                ker.push_back(e);
            }
        } else {
            ker = kernel_basis(rows, nunk);
        }
        for (const auto& v : ker) {
            PeriodicPoly p(x.dim());
            for (int u = 0; u < nunk; ++u)
                if (v[u] != 0) p += basis[idx[u]] * Cyclotomic(v[u]);
            out.push_back(p);
        }
    }
    return out;
}

Cyclotomic pair_pper_dm(const GList& x, const PeriodicPoly& p, const QuasiFunction& f) {
    require_lattice(x, "pairing with DM");
    Cyclotomic s;
    for (const auto& [c, q] : p.terms()) {
        IndexSet xphi = fixed_sublist(x, c);
        MPoly stripped = divide_exact(q, p_product(x, set_difference(x.all(), xphi)));
        auto it = f.terms().find(c);
        if (it == f.terms().end()) continue;
        s += pair(stripped, it->second);
    }
    return s;
}

LMap::LMap(const GList& x, const RatVec& w) : x_(x) {
    require_lattice(x, "L");
    support_ = lattice_points(x, LatticeMode::Shifted, w);
    dm_ = dm_basis(x);
    const int n = static_cast<int>(dm_.size());
    if (static_cast<int>(support_.size()) != n)
        fail(ErrorKind::SingularGram, "shifted zonotope has " + std::to_string(support_.size()) +
                                          " lattice points but DM has dimension " + std::to_string(n));
    Matrix<Cyclotomic> a(n, std::vector<Cyclotomic>(n));
    for (int j = 0; j < n; ++j)
        for (int l = 0; l < n; ++l) a[j][l] = dm_[j].evaluate(support_[l]);
    auto inv = inverse_matrix(a);
    if (!inv) fail(ErrorKind::SingularGram, "evaluation matrix is singular for this shift");
    inverse_ = std::move(*inv);
}

LClass LMap::operator()(const PeriodicPoly& p) const {
    const int n = static_cast<int>(dm_.size());
    std::vector<Cyclotomic> rhs(n);
    for (int j = 0; j < n; ++j) rhs[j] = pair_pper_dm(x_, p, dm_[j]);
    LClass out;
    out.support = support_;
    out.coeffs.assign(n, Cyclotomic());
    for (int l = 0; l < n; ++l)
        for (int j = 0; j < n; ++j)
            if (!rhs[j].is_zero() && !inverse_[l][j].is_zero()) out.coeffs[l] += inverse_[l][j] * rhs[j];
    return out;
}

LClass l_map(const GList& x, const PeriodicPoly& p, const RatVec& w) { return LMap(x, w)(p); }

PeriodicPoly pper_mult(const GList& x, int i, const PeriodicPoly& p) {
    if (x.is_torsion(i)) fail(ErrorKind::TorsionPivot, "multiplication by a torsion element");
    PeriodicPoly out(x.dim());
    MPoly px = linear_form(x, i);
    for (const auto& [c, q] : p.terms()) out.add(c, q * px);
    return out;
}

PeriodicPoly pper_project(const GList& x, int i, const PeriodicPoly& p) {
    if (x.is_torsion(i)) fail(ErrorKind::TorsionPivot, "projection along a torsion element");
    Contraction con = contract(x, i);
    const GList& y = con.list;
    const int dnew = y.dim();
    const int nv_new = dnew + 1;
    // s_j -> image of e_j in the quotient; s0 -> s0
    std::vector<MPoly> images;
    images.push_back(MPoly::variable(VarKind::S, nv_new, 0));
    for (int j = 0; j < x.dim(); ++j) {
        std::vector<Rational> col;
        for (int r = 0; r < dnew; ++r) col.emplace_back(con.proj[r][j]);
        images.push_back(MPoly::linear(VarKind::S, nv_new, 1, col));
    }
    PeriodicPoly out(dnew);
    for (const auto& [c, q] : p.terms()) {
        if (c.phase(x[i]) != 0) continue;
        VertexData v;
        v.character = c;
        v.x_phi = fixed_sublist(x, c);
        v.tors_count = torsion_outside(x, v.x_phi);
        MPoly py = divide_exact(q, prefactor(x, v));
        MPoly pybar = py.substitute(images);
        // character on the quotient
        RatVec full = c.theta;
        full.insert(full.end(), c.tors.begin(), c.tors.end());
        Character cbar;
        for (size_t r = 0; r < con.char_down.size(); ++r) {
            Rational s = 0;
            for (size_t k = 0; k < full.size(); ++k) s += Rational(con.char_down[r][k]) * full[k];
            (static_cast<int>(r) < dnew ? cbar.theta : cbar.tors).push_back(frac_part(s));
        }
        // prefactor over X \ (X_phi u X_t u span(x))
        MPoly pre = MPoly::constant(VarKind::S, nv_new, Cyclotomic(1));
        for (size_t k = 0; k < con.kept.size(); ++k) {
            int j = con.kept[k];
            if (std::binary_search(v.x_phi.begin(), v.x_phi.end(), j) || x.is_torsion(j)) continue;
            if (rank_of(x, {std::min(i, j), std::max(i, j)}) == 1) continue;
            pre = pre * linear_form(y, static_cast<int>(k));
        }
        IndexSet yphi = fixed_sublist(y, cbar);
        int t = torsion_outside(y, yphi);
        out.add(cbar, pre * s0_power(nv_new, t) * pybar);
    }
    return out;
}

std::vector<int> hilbert(const std::vector<PeriodicPoly>& space) {
    std::vector<int> h;
    for (const auto& p : space) {
        if (!p.is_homogeneous()) fail(ErrorKind::InvalidArgument, "space member is not homogeneous");
        int k = std::max(p.degree(), 0);
        if (static_cast<int>(h.size()) <= k) h.resize(k + 1, 0);
        ++h[k];
    }
    return h;
}

}  // namespace zonotopal
